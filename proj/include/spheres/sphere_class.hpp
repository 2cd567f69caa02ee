#pragma once

#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "spheres/free_group.hpp"

namespace spheres {

// Edge weights are 64-bit and all arithmetic on them is overflow-checked.
using Weight = std::int64_t;

// Same order as letter_cmp, extended to weights: |a| first, positive first.
int weight_cmp(Weight a, Weight b) noexcept;

Weight checked_add(Weight a, Weight b);
Weight checked_sub(Weight a, Weight b);
Weight checked_mul(Weight a, Weight b);

// The unoriented Cayley-tree edge {base, base * x_gen}, 1 <= gen <= k.
// Every unoriented edge of the tree has exactly one such presentation with
// positive gen, so no normalization step is needed.
struct CanonicalEdge {
    ReducedWord base;
    int gen;

    // The endpoint other than base.
    ReducedWord far_end() const { return append(base, gen); }

    friend bool operator==(const CanonicalEdge&, const CanonicalEdge&) = default;
};

int edge_cmp(const CanonicalEdge& a, const CanonicalEdge& b);

struct EdgeLess {
    bool operator()(const CanonicalEdge& a, const CanonicalEdge& b) const {
        return edge_cmp(a, b) < 0;
    }
};

// A single step seen as an edge crossing. Crossing from base toward
// base * x_gen counts with sign +1; the reverse crossing counts -1.
struct EdgeTraversal {
    CanonicalEdge edge;
    int sign;
};

// The canonical edge crossed when moving from `from` by `letter`, together
// with the crossing sign.
EdgeTraversal canonical_edge(const ReducedWord& from, Letter letter);

// Finitely supported integer weight system on canonical edges. Zero weights
// are never stored; equality is structural equality of the weight maps.
class SphereClass {
public:
    using WeightMap = std::map<CanonicalEdge, Weight, EdgeLess>;

    explicit SphereClass(Rank rank) : rank_(rank) {}

    SphereClass(Rank rank, std::initializer_list<std::pair<CanonicalEdge, Weight>> entries);

    // Entries must have distinct edges over `rank` and nonzero weights.
    static SphereClass from_entries(Rank rank,
                                    std::span<const std::pair<CanonicalEdge, Weight>> entries);

    const Rank& rank() const { return rank_; }
    const WeightMap& weights() const { return weights_; }
    bool is_zero() const { return weights_.empty(); }
    int support_size() const { return static_cast<int>(weights_.size()); }

    // 0 for edges outside the support.
    Weight weight_of(const CanonicalEdge& e) const;

    friend bool operator==(const SphereClass&, const SphereClass&) = default;

private:
    Rank rank_;
    WeightMap weights_;

    friend SphereClass translate(const ReducedWord& g, const SphereClass& A);
    friend SphereClass negate(const SphereClass& A);
    friend SphereClass add(const SphereClass& A, const SphereClass& B);
    friend SphereClass scale(Weight n, const SphereClass& A);
};

// Lexicographic on the sorted (edge, weight) entry sequences.
int class_cmp(const SphereClass& a, const SphereClass& b);

struct ClassLess {
    bool operator()(const SphereClass& a, const SphereClass& b) const {
        return class_cmp(a, b) < 0;
    }
};

// Deck transformation action: the weight of (v, i) in translate(g, A) is the
// weight of (g^-1 v, i) in A.
SphereClass translate(const ReducedWord& g, const SphereClass& A);

// Orientation reversal: every weight negated.
SphereClass negate(const SphereClass& A);

// Pointwise sum; vanishing entries are dropped.
SphereClass add(const SphereClass& A, const SphereClass& B);

// Every weight multiplied by n; n = 0 yields the zero class.
SphereClass scale(Weight n, const SphereClass& A);

// The minimal finite subtree of the Cayley tree containing every support
// edge of the inputs. `boundary` holds the hull vertices of hull-degree
// below 2k, i.e. those with at least one escaping tree edge; every leaf of
// the hull is an endpoint of a support edge.
struct SupportHull {
    std::vector<ReducedWord> vertices;   // canonically sorted
    std::vector<CanonicalEdge> edges;    // canonically sorted
    std::vector<ReducedWord> boundary;   // canonically sorted subset of vertices
};

// At least one input must have nonempty support (EmptySupport otherwise);
// all inputs must share one rank.
SupportHull hull(std::span<const SphereClass> classes);
SupportHull hull(const SphereClass& A);
SupportHull hull(const SphereClass& A, const SphereClass& B);

// Longest vertex distance realized inside the hull.
int hull_diameter(const SupportHull& h);

// Ordered pair of distinct vertices, the finite stand-in for a proper line:
// in certificates both components are boundary vertices of the hull under
// consideration, each of which extends to an end of the tree.
struct EndPair {
    ReducedWord source;
    ReducedWord target;

    friend bool operator==(const EndPair&, const EndPair&) = default;
};

int pair_cmp(const EndPair& a, const EndPair& b);

// Signed sum of support-edge weights crossed by the geodesic from source to
// target. Antisymmetric and additive over a middle vertex.
Weight pair_intersection_number(const EndPair& c, const SphereClass& A);

std::string to_string(const CanonicalEdge& e);
std::string to_string(const SphereClass& A);
std::ostream& operator<<(std::ostream& os, const CanonicalEdge& e);
std::ostream& operator<<(std::ostream& os, const SphereClass& A);

}  // namespace spheres
