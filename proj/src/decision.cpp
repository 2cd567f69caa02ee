#include "spheres/decision.hpp"

#include <algorithm>
#include <optional>
#include <set>

#include "hull_index.hpp"

namespace spheres {

namespace {

void require_nonzero(const SphereClass& A, const char* who) {
    if (A.is_zero()) throw ZeroClass(std::string(who) + " is undefined on the zero class");
}

// Boundary pair scan shared by both cover-level deciders. Pairs are visited
// as (boundary[i], boundary[j]) with i < j, i.e. in canonical order of the
// serialized pair, so the first hit is the canonical witness.
template <typename Visit>
void scan_boundary_pairs(const detail::HullIndex& H, Visit visit) {
    for (std::size_t i = 0; i < H.boundary.size(); ++i) {
        for (std::size_t j = i + 1; j < H.boundary.size(); ++j) {
            if (!visit(H.boundary[i], H.boundary[j])) return;
        }
    }
}

CoverDisjointResult disjoint_core(const SphereClass& A, const SphereClass& B) {
    const SupportHull h = hull(A, B);
    const detail::HullIndex H(h);
    const std::vector<Weight> phi_a = H.potentials(H.edge_weights(A));
    const std::vector<Weight> phi_b = H.potentials(H.edge_weights(B));

    std::optional<SignWitness> same, opposite;
    scan_boundary_pairs(H, [&](int u, int v) {
        const Weight a = checked_sub(phi_a[static_cast<std::size_t>(v)],
                                     phi_a[static_cast<std::size_t>(u)]);
        const Weight b = checked_sub(phi_b[static_cast<std::size_t>(v)],
                                     phi_b[static_cast<std::size_t>(u)]);
        if (a != 0 && b != 0) {
            const bool same_sign = (a > 0) == (b > 0);
            if (same_sign && !same) same = SignWitness{{H.word(u), H.word(v)}, a, b};
            if (!same_sign && !opposite) opposite = SignWitness{{H.word(u), H.word(v)}, a, b};
        }
        return !(same && opposite);
    });

    if (same && opposite) {
        return CoverDisjointResult{false, MixedSignTypes{*same, *opposite}};
    }
    return CoverDisjointResult{true, SingleSignType{}};
}

// One representative per inverse pair {g, g^-1}: the canonically smaller.
std::vector<ReducedWord> inverse_pair_representatives(const std::vector<ReducedWord>& elements) {
    std::set<ReducedWord, WordLess> reps;
    for (const auto& g : elements) {
        if (g.is_identity()) continue;
        const ReducedWord gi = invert(g);
        reps.insert(word_cmp(g, gi) <= 0 ? g : gi);
    }
    return {reps.begin(), reps.end()};
}

}  // namespace

CoverEmbedResult embeddable_in_cover(const SphereClass& A) {
    require_nonzero(A, "embeddable_in_cover");
    const SupportHull h = hull(A);
    const detail::HullIndex H(h);
    const std::vector<Weight> phi = H.potentials(H.edge_weights(A));

    std::optional<ExcessPair> violation;
    scan_boundary_pairs(H, [&](int u, int v) {
        const Weight d = checked_sub(phi[static_cast<std::size_t>(v)],
                                     phi[static_cast<std::size_t>(u)]);
        if (d > 1 || d < -1) {
            violation = ExcessPair{{H.word(u), H.word(v)}, d};
            return false;
        }
        return true;
    });
    if (violation) return CoverEmbedResult{false, *violation};

    // Verdict true. Sides by value against the least boundary vertex: zero
    // values share its side, nonzero values (all of one absolute value 1)
    // form the other.
    BoundaryPartition partition;
    const Weight base = phi[static_cast<std::size_t>(H.boundary.front())];
    for (int b : H.boundary) {
        if (phi[static_cast<std::size_t>(b)] == base) {
            partition.side_one.push_back(H.word(b));
        } else {
            partition.side_two.push_back(H.word(b));
        }
    }
    return CoverEmbedResult{true, partition};
}

CoverDisjointResult disjoint_in_cover(const SphereClass& A, const SphereClass& B) {
    require_nonzero(A, "disjoint_in_cover");
    require_nonzero(B, "disjoint_in_cover");
    if (!embeddable_in_cover(A).verdict) {
        throw NotEmbeddable(0, "disjoint_in_cover: first class is not embeddable in the cover");
    }
    if (!embeddable_in_cover(B).verdict) {
        throw NotEmbeddable(1, "disjoint_in_cover: second class is not embeddable in the cover");
    }
    return disjoint_core(A, B);
}

std::vector<ReducedWord> overlap_elements(const SupportHull& h1, const SupportHull& h2,
                                          int radius) {
    if (radius < 0) throw Error("overlap radius must be nonnegative");
    if (h1.vertices.empty() || h2.vertices.empty()) {
        throw EmptySupport("overlap_elements of an empty hull");
    }
    const Rank rank = h1.vertices.front().rank();

    // Vertices within tree distance `radius` of h1.
    std::set<ReducedWord, WordLess> near(h1.vertices.begin(), h1.vertices.end());
    std::vector<ReducedWord> frontier(h1.vertices);
    for (int step = 0; step < radius; ++step) {
        std::vector<ReducedWord> next;
        for (const auto& v : frontier) {
            for (Letter l = 1; l <= rank.k; ++l) {
                for (Letter s : {l, static_cast<Letter>(-l)}) {
                    ReducedWord w = append(v, s);
                    if (near.insert(w).second) next.push_back(std::move(w));
                }
            }
        }
        frontier = std::move(next);
    }

    std::set<ReducedWord, WordLess> out;
    for (const auto& q : h2.vertices) {
        const ReducedWord qi = invert(q);
        for (const auto& p : near) out.insert(multiply(p, qi));
    }
    return {out.begin(), out.end()};
}

ManifoldResult embeddable_in_M(const SphereClass& A, const DecisionConfig& config) {
    const CoverEmbedResult cover = embeddable_in_cover(A);
    if (!cover.verdict) {
        return ManifoldResult{
            false, FailingTranslate{ReducedWord(A.rank()), std::get<ExcessPair>(cover.certificate)}};
    }

    const SupportHull h = hull(A);
    const std::vector<ReducedWord> reps =
        inverse_pair_representatives(overlap_elements(h, h, config.overlap_radius));
    for (const auto& g : reps) {
        // Translates of a cover-embeddable class are cover-embeddable, so the
        // core test applies directly.
        const CoverDisjointResult r = disjoint_core(A, translate(g, A));
        if (!r.verdict) {
            return ManifoldResult{false,
                                  FailingTranslate{g, std::get<MixedSignTypes>(r.certificate)}};
        }
    }
    return ManifoldResult{true, TranslatesChecked{reps}};
}

ManifoldResult disjoint_in_M(const SphereClass& A, const SphereClass& B,
                             const DecisionConfig& config) {
    if (!embeddable_in_M(A, config).verdict) {
        throw NotEmbeddableInM(0, "disjoint_in_M: first class is not embeddable in the manifold");
    }
    if (!embeddable_in_M(B, config).verdict) {
        throw NotEmbeddableInM(1, "disjoint_in_M: second class is not embeddable in the manifold");
    }

    const std::vector<ReducedWord> elements =
        overlap_elements(hull(A), hull(B), config.overlap_radius);
    for (const auto& g : elements) {
        const CoverDisjointResult r = disjoint_core(A, translate(g, B));
        if (!r.verdict) {
            return ManifoldResult{false,
                                  FailingTranslate{g, std::get<MixedSignTypes>(r.certificate)}};
        }
    }
    return ManifoldResult{true, TranslatesChecked{elements}};
}

namespace {

bool boundary_contains(const SupportHull& h, const ReducedWord& v) {
    return std::binary_search(h.boundary.begin(), h.boundary.end(), v, WordLess{});
}

bool valid_excess(const SphereClass& A, const ExcessPair& e) {
    const SupportHull h = hull(A);
    if (!boundary_contains(h, e.pair.source) || !boundary_contains(h, e.pair.target)) return false;
    if (e.pair.source == e.pair.target) return false;
    if (e.value <= 1 && e.value >= -1) return false;
    return pair_intersection_number(e.pair, A) == e.value;
}

bool valid_witness(const SphereClass& A, const SphereClass& B, const SupportHull& joint,
                   const SignWitness& w, bool expect_same_sign) {
    if (!boundary_contains(joint, w.pair.source) || !boundary_contains(joint, w.pair.target)) {
        return false;
    }
    if (w.pair.source == w.pair.target) return false;
    if (w.value_a == 0 || w.value_b == 0) return false;
    if (((w.value_a > 0) == (w.value_b > 0)) != expect_same_sign) return false;
    return pair_intersection_number(w.pair, A) == w.value_a &&
           pair_intersection_number(w.pair, B) == w.value_b;
}

bool valid_mixed(const SphereClass& A, const SphereClass& B, const MixedSignTypes& m) {
    const SupportHull joint = hull(A, B);
    return valid_witness(A, B, joint, m.same_sign, true) &&
           valid_witness(A, B, joint, m.opposite_sign, false);
}

}  // namespace

bool revalidate(const SphereClass& A, const CoverEmbedResult& r) {
    if (!r.verdict) {
        const auto* e = std::get_if<ExcessPair>(&r.certificate);
        return e && valid_excess(A, *e);
    }
    const auto* p = std::get_if<BoundaryPartition>(&r.certificate);
    if (!p) return false;

    // The partition must cover the boundary exactly and reproduce the
    // two-class value structure pair by pair.
    const SupportHull h = hull(A);
    std::vector<ReducedWord> labeled = p->side_one;
    labeled.insert(labeled.end(), p->side_two.begin(), p->side_two.end());
    std::sort(labeled.begin(), labeled.end(), WordLess{});
    if (labeled != h.boundary) return false;

    auto side_of = [&](const ReducedWord& v) {
        return std::find(p->side_one.begin(), p->side_one.end(), v) != p->side_one.end() ? 1 : 2;
    };
    for (std::size_t i = 0; i < h.boundary.size(); ++i) {
        for (std::size_t j = i + 1; j < h.boundary.size(); ++j) {
            const Weight val =
                pair_intersection_number({h.boundary[i], h.boundary[j]}, A);
            const bool same_side = side_of(h.boundary[i]) == side_of(h.boundary[j]);
            if (same_side && val != 0) return false;
            if (!same_side && val != 1 && val != -1) return false;
        }
    }
    return true;
}

bool revalidate(const SphereClass& A, const SphereClass& B, const CoverDisjointResult& r) {
    if (!r.verdict) {
        const auto* m = std::get_if<MixedSignTypes>(&r.certificate);
        return m && valid_mixed(A, B, *m);
    }
    if (!std::holds_alternative<SingleSignType>(r.certificate)) return false;
    // Positive certificates carry no data; recompute the scan.
    const CoverDisjointResult again = disjoint_core(A, B);
    return again.verdict;
}

bool revalidate_embed(const SphereClass& A, const ManifoldResult& r, const DecisionConfig& config) {
    if (!r.verdict) {
        const auto* f = std::get_if<FailingTranslate>(&r.certificate);
        if (!f) return false;
        if (f->g.is_identity()) {
            const auto* e = std::get_if<ExcessPair>(&f->inner);
            return e && valid_excess(A, *e);
        }
        const auto* m = std::get_if<MixedSignTypes>(&f->inner);
        if (!m) return false;
        const SupportHull h = hull(A);
        const std::vector<ReducedWord> elements = overlap_elements(h, h, config.overlap_radius);
        if (!std::binary_search(elements.begin(), elements.end(), f->g, WordLess{})) return false;
        return valid_mixed(A, translate(f->g, A), *m);
    }
    const auto* t = std::get_if<TranslatesChecked>(&r.certificate);
    if (!t) return false;
    if (!embeddable_in_cover(A).verdict) return false;
    const SupportHull h = hull(A);
    const std::vector<ReducedWord> reps =
        inverse_pair_representatives(overlap_elements(h, h, config.overlap_radius));
    if (t->checked != reps) return false;
    for (const auto& g : reps) {
        if (!disjoint_core(A, translate(g, A)).verdict) return false;
    }
    return true;
}

bool revalidate_disjoint(const SphereClass& A, const SphereClass& B, const ManifoldResult& r,
                         const DecisionConfig& config) {
    const std::vector<ReducedWord> elements =
        overlap_elements(hull(A), hull(B), config.overlap_radius);
    if (!r.verdict) {
        const auto* f = std::get_if<FailingTranslate>(&r.certificate);
        if (!f) return false;
        const auto* m = std::get_if<MixedSignTypes>(&f->inner);
        if (!m) return false;
        if (!std::binary_search(elements.begin(), elements.end(), f->g, WordLess{})) return false;
        return valid_mixed(A, translate(f->g, B), *m);
    }
    const auto* t = std::get_if<TranslatesChecked>(&r.certificate);
    if (!t || t->checked != elements) return false;
    for (const auto& g : elements) {
        if (!disjoint_core(A, translate(g, B)).verdict) return false;
    }
    return true;
}

}  // namespace spheres
