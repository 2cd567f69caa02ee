#include <random>
#include <vector>

#include "doctest.h"
#include "spheres/decision.hpp"
#include "test_util.hpp"

using namespace spheres;
using testutil::C;
using testutil::P;
using testutil::W;

namespace {

// The four recurring fixtures: two generator classes and the two derived
// two-edge classes over F_2.
SphereClass g1() { return C(2, {{{}, 1, 1}}); }
SphereClass g2() { return C(2, {{{}, 2, 1}}); }
SphereClass alternating() { return C(2, {{{}, 1, 1}, {{1}, 1, -1}}); }
SphereClass doubled() { return C(2, {{{}, 2, 1}, {{1}, 2, 1}}); }

SphereClass random_supported(std::mt19937_64& rng, int k, int support, int base_len,
                             Weight bound) {
    std::vector<std::pair<CanonicalEdge, Weight>> entries;
    for (int i = 0; i < support; ++i) {
        const CanonicalEdge e{testutil::random_word(rng, k, base_len),
                              1 + static_cast<int>(rng() % k)};
        Weight w = static_cast<Weight>(rng() % static_cast<std::uint64_t>(2 * bound + 1)) -
                   bound;
        if (w == 0) w = 1;
        bool seen = false;
        for (const auto& [e2, w2] : entries) seen = seen || e2 == e;
        if (!seen) entries.emplace_back(e, w);
    }
    return SphereClass::from_entries(Rank{k}, entries);
}

}  // namespace

TEST_CASE("cover embeddability verdicts on the fixtures") {
    CHECK(embeddable_in_cover(g1()).verdict);
    CHECK(embeddable_in_cover(alternating()).verdict);
    CHECK(embeddable_in_cover(doubled()).verdict);

    const auto dbl = embeddable_in_cover(C(2, {{{}, 1, 2}}));
    CHECK_FALSE(dbl.verdict);
    const auto& excess1 = std::get<ExcessPair>(dbl.certificate);
    CHECK(excess1.pair == P(2, {}, {1}));
    CHECK(excess1.value == 2);

    const auto consec = embeddable_in_cover(C(2, {{{}, 1, 1}, {{1}, 1, 1}}));
    CHECK_FALSE(consec.verdict);
    const auto& excess2 = std::get<ExcessPair>(consec.certificate);
    CHECK(excess2.pair == P(2, {}, {1, 1}));
    CHECK(excess2.value == 2);

    CHECK_THROWS_AS(embeddable_in_cover(C(2, {})), ZeroClass);
}

TEST_CASE("positive cover certificate splits the boundary") {
    const auto r = embeddable_in_cover(alternating());
    REQUIRE(r.verdict);
    const auto& part = std::get<BoundaryPartition>(r.certificate);
    CHECK(part.side_one == std::vector<ReducedWord>{W(2, {}), W(2, {1, 1})});
    CHECK(part.side_two == std::vector<ReducedWord>{W(2, {1})});
}

TEST_CASE("boundary pairs of a coboundary all vanish") {
    // Over F_1 the same weights have a saturated interior vertex and the two
    // remaining boundary vertices see total weight 0, so no second side.
    const auto r = embeddable_in_cover(C(1, {{{}, 1, 1}, {{1}, 1, -1}}));
    REQUIRE(r.verdict);
    const auto& part = std::get<BoundaryPartition>(r.certificate);
    CHECK(part.side_one == std::vector<ReducedWord>{W(1, {}), W(1, {1, 1})});
    CHECK(part.side_two.empty());
}

TEST_CASE("cover disjointness verdicts on the fixtures") {
    CHECK(disjoint_in_cover(g1(), C(2, {{{1}, 1, 1}})).verdict);
    CHECK(disjoint_in_cover(g1(), g2()).verdict);
    CHECK(disjoint_in_cover(g1(), g1()).verdict);

    const auto r = disjoint_in_cover(g1(), doubled());
    REQUIRE_FALSE(r.verdict);
    const auto& mixed = std::get<MixedSignTypes>(r.certificate);
    CHECK(mixed.same_sign.pair == P(2, {}, {1, 2}));
    CHECK(mixed.same_sign.value_a == 1);
    CHECK(mixed.same_sign.value_b == 1);
    CHECK(mixed.opposite_sign.pair == P(2, {1}, {2}));
    CHECK(mixed.opposite_sign.value_a == -1);
    CHECK(mixed.opposite_sign.value_b == 1);
}

TEST_CASE("cover disjointness enforces embeddability of both arguments") {
    const SphereClass bad = C(2, {{{}, 1, 2}});
    CHECK_THROWS_AS(disjoint_in_cover(bad, g1()), NotEmbeddable);
    CHECK_THROWS_AS(disjoint_in_cover(g1(), bad), NotEmbeddable);
    try {
        disjoint_in_cover(g1(), bad);
    } catch (const NotEmbeddable& e) {
        CHECK(e.which == 1);
    }
}

TEST_CASE("overlap elements of small hulls") {
    const SupportHull edge = hull(g1());
    CHECK(overlap_elements(edge, edge) ==
          std::vector<ReducedWord>{W(2, {}), W(2, {1}), W(2, {-1})});

    const SupportHull seg = hull(alternating());
    CHECK(overlap_elements(seg, seg) ==
          std::vector<ReducedWord>{W(2, {}), W(2, {1}), W(2, {-1}), W(2, {1, 1}),
                                   W(2, {-1, -1})});

    const SupportHull far = hull(C(2, {{{2, 2}, 1, 1}}));
    CHECK(overlap_elements(edge, far) ==
          std::vector<ReducedWord>{W(2, {-2, -2}), W(2, {1, -2, -2}), W(2, {-1, -2, -2})});
}

TEST_CASE("overlap radius enlarges the element set") {
    const SupportHull edge = hull(g1());
    const auto base = overlap_elements(edge, edge, 0);
    const auto wider = overlap_elements(edge, edge, 1);
    CHECK(wider.size() > base.size());
    for (const ReducedWord& g : base) {
        CHECK(std::find(wider.begin(), wider.end(), g) != wider.end());
    }
    // Distance-1 separation: translating by x1^2 leaves a one-edge gap.
    CHECK(std::find(wider.begin(), wider.end(), W(2, {1, 1})) != wider.end());
}

TEST_CASE("manifold embeddability on the fixtures") {
    const auto pos = embeddable_in_M(g1());
    REQUIRE(pos.verdict);
    CHECK(std::get<TranslatesChecked>(pos.certificate).checked ==
          std::vector<ReducedWord>{W(2, {1})});

    const auto alt = embeddable_in_M(alternating());
    REQUIRE(alt.verdict);
    CHECK(std::get<TranslatesChecked>(alt.certificate).checked ==
          std::vector<ReducedWord>{W(2, {1}), W(2, {1, 1})});

    const auto neg = embeddable_in_M(doubled());
    REQUIRE_FALSE(neg.verdict);
    const auto& failing = std::get<FailingTranslate>(neg.certificate);
    CHECK(failing.g == W(2, {1}));
    const auto& mixed = std::get<MixedSignTypes>(failing.inner);
    CHECK(mixed.same_sign.pair == P(2, {}, {1, 2}));
    CHECK(mixed.same_sign.value_a == 1);
    CHECK(mixed.same_sign.value_b == 1);
    CHECK(mixed.opposite_sign.pair == P(2, {2}, {1, 1, 2}));
    CHECK(mixed.opposite_sign.value_a == -1);
    CHECK(mixed.opposite_sign.value_b == 1);
}

TEST_CASE("cover failure surfaces as the identity translate") {
    const auto r = embeddable_in_M(C(2, {{{}, 1, 2}}));
    REQUIRE_FALSE(r.verdict);
    const auto& failing = std::get<FailingTranslate>(r.certificate);
    CHECK(failing.g.is_identity());
    CHECK(std::get<ExcessPair>(failing.inner).value == 2);
}

TEST_CASE("manifold disjointness on the fixtures") {
    CHECK(disjoint_in_M(g1(), g1()).verdict);
    CHECK(disjoint_in_M(alternating(), g1()).verdict);

    const auto r = disjoint_in_M(g1(), g2());
    REQUIRE(r.verdict);
    CHECK(std::get<TranslatesChecked>(r.certificate).checked ==
          std::vector<ReducedWord>{W(2, {}), W(2, {1}), W(2, {-2}), W(2, {1, -2})});
}

TEST_CASE("manifold disjointness enforces its preconditions") {
    CHECK_THROWS_AS(disjoint_in_M(doubled(), g1()), NotEmbeddableInM);
    try {
        disjoint_in_M(g1(), doubled());
    } catch (const NotEmbeddableInM& e) {
        CHECK(e.which == 1);
    }
}

TEST_CASE("certificates revalidate and tampered ones do not") {
    const auto pos = embeddable_in_cover(alternating());
    CHECK(revalidate(alternating(), pos));
    CHECK_FALSE(revalidate(g1(), pos));

    // Swapping the two sides keeps a valid partition; moving one vertex
    // across does not.
    auto swapped = pos;
    auto& part = std::get<BoundaryPartition>(swapped.certificate);
    std::swap(part.side_one, part.side_two);
    CHECK(revalidate(alternating(), swapped));
    auto moved = pos;
    auto& broken = std::get<BoundaryPartition>(moved.certificate);
    broken.side_one.push_back(broken.side_two.back());
    broken.side_two.pop_back();
    CHECK_FALSE(revalidate(alternating(), moved));

    const auto neg = embeddable_in_cover(C(2, {{{}, 1, 2}}));
    CHECK(revalidate(C(2, {{{}, 1, 2}}), neg));
    CHECK_FALSE(revalidate(g1(), neg));

    const auto dis = disjoint_in_cover(g1(), doubled());
    CHECK(revalidate(g1(), doubled(), dis));
    CHECK_FALSE(revalidate(g1(), g2(), dis));

    const auto man = embeddable_in_M(doubled());
    CHECK(revalidate_embed(doubled(), man));
    auto forged = man;
    std::get<FailingTranslate>(forged.certificate).g = W(2, {2});
    CHECK_FALSE(revalidate_embed(doubled(), forged));

    const auto mandis = disjoint_in_M(g1(), g2());
    CHECK(revalidate_disjoint(g1(), g2(), mandis));
    auto trimmed = mandis;
    std::get<TranslatesChecked>(trimmed.certificate).checked.pop_back();
    CHECK_FALSE(revalidate_disjoint(g1(), g2(), trimmed));
}

TEST_CASE("verdicts are invariant under translation and negation") {
    std::mt19937_64 rng(17);
    int disjoint_cases = 0;
    for (int trial = 0; trial < 120; ++trial) {
        const int k = 1 + static_cast<int>(rng() % 3);
        const SphereClass a = random_supported(rng, k, 1 + static_cast<int>(rng() % 3), 2, 1);
        const SphereClass b = random_supported(rng, k, 1 + static_cast<int>(rng() % 3), 2, 1);
        const ReducedWord g = testutil::random_word(rng, k, 3);

        const bool embed_a = embeddable_in_cover(a).verdict;
        CHECK(embeddable_in_cover(translate(g, a)).verdict == embed_a);
        CHECK(embeddable_in_cover(negate(a)).verdict == embed_a);

        const bool m_a = embeddable_in_M(a).verdict;
        CHECK(embeddable_in_M(translate(g, a)).verdict == m_a);
        CHECK(embeddable_in_M(negate(a)).verdict == m_a);

        if (!embed_a || !embeddable_in_cover(b).verdict) continue;
        const bool dis = disjoint_in_cover(a, b).verdict;
        CHECK(disjoint_in_cover(b, a).verdict == dis);
        CHECK(disjoint_in_cover(negate(a), b).verdict == dis);
        CHECK(disjoint_in_cover(a, negate(b)).verdict == dis);
        CHECK(disjoint_in_cover(translate(g, a), translate(g, b)).verdict == dis);

        if (!m_a || !embeddable_in_M(b).verdict) continue;
        ++disjoint_cases;
        const bool mdis = disjoint_in_M(a, b).verdict;
        CHECK(disjoint_in_M(b, a).verdict == mdis);
        CHECK(disjoint_in_M(negate(a), b).verdict == mdis);
        CHECK(disjoint_in_M(translate(g, a), translate(g, b)).verdict == mdis);
    }
    CHECK(disjoint_cases >= 10);
}
