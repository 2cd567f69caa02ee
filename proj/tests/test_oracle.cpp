#include <map>
#include <vector>

#include "doctest.h"
#include "spheres/decision.hpp"
#include "spheres/oracle.hpp"
#include "test_util.hpp"

using namespace spheres;
using testutil::C;
using testutil::W;

TEST_CASE("path sums count crossings with multiplicity") {
    const SphereClass a = C(2, {{{}, 1, 1}});
    const std::vector<GeodesicStep> zigzag{{W(2, {}), 1}, {W(2, {1}), -1}, {W(2, {}), 1}};
    CHECK(path_intersection_sum(zigzag, a) == 1);

    const auto geo = geodesic(W(2, {-1}), W(2, {1}));
    CHECK(path_intersection_sum(geo, a) == 1);

    CHECK(path_intersection_sum({}, a) == 0);
}

TEST_CASE("path sums reject broken chains") {
    const SphereClass a = C(2, {{{}, 1, 1}});
    const std::vector<GeodesicStep> broken{{W(2, {}), 1}, {W(2, {2}), 1}};
    CHECK_THROWS_AS(path_intersection_sum(broken, a), BrokenPath);
}

TEST_CASE("path enumeration over a single edge") {
    const SupportHull h = hull(C(2, {{{}, 1, 1}}));

    auto count = [&](int max_len) {
        int n = 0;
        enumerate_paths(h, max_len, [&](const HullPath&) { ++n; });
        return n;
    };
    CHECK(count(1) == 4);   // 2 bare vertices + 2 single crossings
    CHECK(count(2) == 6);   // + 2 backtracking round trips
    CHECK(count(3) == 8);

    bool saw_zigzag = false;
    enumerate_paths(h, 3, [&](const HullPath& p) {
        if (p.steps.size() == 3 && p.start == W(2, {}) && p.end == W(2, {1})) {
            saw_zigzag = true;
        }
    });
    CHECK(saw_zigzag);
}

TEST_CASE("enumerated paths chain, stay in the hull, and end on the boundary") {
    const SphereClass a = C(2, {{{}, 2, 1}, {{1}, 2, 1}});
    const SupportHull h = hull(a);
    int visited = 0;
    enumerate_paths(h, 4, [&](const HullPath& p) {
        ++visited;
        REQUIRE(std::binary_search(h.boundary.begin(), h.boundary.end(), p.start, WordLess{}));
        REQUIRE(std::binary_search(h.boundary.begin(), h.boundary.end(), p.end, WordLess{}));
        ReducedWord at = p.start;
        for (const GeodesicStep& s : p.steps) {
            REQUIRE(s.from == at);
            const EdgeTraversal t = canonical_edge(s.from, s.letter);
            REQUIRE(std::binary_search(h.edges.begin(), h.edges.end(), t.edge, EdgeLess{}));
            at = s.to();
        }
        REQUIRE(at == p.end);
    });
    CHECK(visited > 0);
}

TEST_CASE("path sums agree with pair values on every enumerated path") {
    const SphereClass a = C(2, {{{}, 1, 1}, {{1}, 1, -1}, {{}, 2, 1}});
    const SupportHull h = hull(a);
    enumerate_paths(h, hull_diameter(h) + 4, [&](const HullPath& p) {
        const Weight direct =
            p.start == p.end ? 0 : pair_intersection_number({p.start, p.end}, a);
        CHECK(path_intersection_sum(p.steps, a) == direct);
    });
}

TEST_CASE("path enumeration respects the length cap") {
    const SupportHull h = hull(C(2, {{{}, 1, 1}}));
    CHECK_THROWS_AS(enumerate_paths(h, 65, [](const HullPath&) {}), LimitExceeded);
    OracleConfig wide;
    wide.max_len_cap = 70;
    CHECK_NOTHROW(enumerate_paths(h, 65, [](const HullPath&) {}, wide));
    CHECK_THROWS_AS(enumerate_paths(h, 0, [](const HullPath&) {}), Error);
}

TEST_CASE("seeded class generation is deterministic and bounded") {
    const Rank k2{2};
    for (std::uint64_t seed = 1; seed <= 50; ++seed) {
        const SphereClass a = random_class(k2, 4, 2, 3, seed);
        CHECK(random_class(k2, 4, 2, 3, seed) == a);
        CHECK(a.support_size() >= 1);
        CHECK(a.support_size() <= 4);
        for (const auto& [edge, w] : a.weights()) {
            CHECK(edge.base.length() <= 2);
            CHECK(w != 0);
            CHECK(std::abs(w) <= 3);
        }
    }
    const SphereClass tight = random_class(k2, 1, 0, 1, 9);
    CHECK(tight.support_size() == 1);
    CHECK(tight.weights().begin()->first.base.is_identity());
    CHECK(std::abs(tight.weights().begin()->second) == 1);
}
