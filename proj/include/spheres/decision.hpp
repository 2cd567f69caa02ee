#pragma once

#include <variant>
#include <vector>

#include "spheres/sphere_class.hpp"

namespace spheres {

struct DecisionConfig {
    // Extra tree distance allowed when enumerating overlapping translates.
    // Radius 0 collects exactly the g for which hull(A) meets g * hull(B).
    int overlap_radius = 0;
};

// Positive embeddability certificate: two-sided labeling of the hull
// boundary. Pairs within one side have intersection number 0; pairs across
// sides have absolute value exactly 1. side_two is empty only when every
// boundary pair value vanishes.
struct BoundaryPartition {
    std::vector<ReducedWord> side_one;   // contains the reference vertex
    std::vector<ReducedWord> side_two;
};

// Negative embeddability certificate: a boundary pair met at least twice.
struct ExcessPair {
    EndPair pair;
    Weight value;   // pair_intersection_number(pair, A), |value| >= 2
};

struct CoverEmbedResult {
    bool verdict;
    std::variant<BoundaryPartition, ExcessPair> certificate;
};

// One boundary pair of the joint hull with its value against each class.
struct SignWitness {
    EndPair pair;
    Weight value_a;
    Weight value_b;
};

// Positive disjointness certificate: the pairs with both values nonzero all
// carry one sign pattern, so nothing further needs recording.
struct SingleSignType {};

// Negative disjointness certificate: a same-sign and an opposite-sign pair,
// each the first in the canonical boundary-pair scan.
struct MixedSignTypes {
    SignWitness same_sign;       // values (1,1) or (-1,-1)
    SignWitness opposite_sign;   // values (1,-1) or (-1,1)
};

struct CoverDisjointResult {
    bool verdict;
    std::variant<SingleSignType, MixedSignTypes> certificate;
};

using InnerCertificate = std::variant<ExcessPair, MixedSignTypes>;

// Positive manifold certificate: every listed translate was checked.
struct TranslatesChecked {
    std::vector<ReducedWord> checked;
};

// Negative manifold certificate: the translate g on which the cover test
// fails, with the cover-level certificate. g is the identity when the class
// itself fails the cover test (or, for disjointness, when the classes
// already intersect untranslated).
struct FailingTranslate {
    ReducedWord g;
    InnerCertificate inner;
};

struct ManifoldResult {
    bool verdict;
    std::variant<TranslatesChecked, FailingTranslate> certificate;
};

// True iff every unordered pair of distinct boundary vertices of hull(A)
// has intersection number in {-1, 0, 1}. Throws ZeroClass on the zero class.
CoverEmbedResult embeddable_in_cover(const SphereClass& A);

// True iff the boundary pairs of hull(A, B) with both values nonzero do not
// realize both a same-sign and an opposite-sign pattern. Both arguments must
// be cover-embeddable (NotEmbeddable otherwise).
CoverDisjointResult disjoint_in_cover(const SphereClass& A, const SphereClass& B);

// All g whose translate of h2 comes within tree distance `radius` of h1,
// canonically sorted. Radius 0 gives { p q^-1 : p in h1, q in h2 }.
std::vector<ReducedWord> overlap_elements(const SupportHull& h1, const SupportHull& h2,
                                          int radius = 0);

// True iff A is cover-embeddable and disjoint in the cover from every
// nontrivially overlapping translate of itself. Only one representative per
// inverse pair {g, g^-1} is checked; the positive certificate lists the
// representatives examined.
ManifoldResult embeddable_in_M(const SphereClass& A, const DecisionConfig& config = {});

// True iff A and every overlapping translate of B are disjoint in the cover,
// the identity translate included. Both arguments must satisfy
// embeddable_in_M (NotEmbeddableInM otherwise).
ManifoldResult disjoint_in_M(const SphereClass& A, const SphereClass& B,
                             const DecisionConfig& config = {});

// Certificate re-validation by direct recomputation of the cited numbers,
// independent of the potential-based evaluation used by the deciders.
bool revalidate(const SphereClass& A, const CoverEmbedResult& r);
bool revalidate(const SphereClass& A, const SphereClass& B, const CoverDisjointResult& r);
bool revalidate_embed(const SphereClass& A, const ManifoldResult& r,
                      const DecisionConfig& config = {});
bool revalidate_disjoint(const SphereClass& A, const SphereClass& B, const ManifoldResult& r,
                         const DecisionConfig& config = {});

}  // namespace spheres
