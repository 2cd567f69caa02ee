#pragma once

#include <optional>
#include <string>

#include "spheres/decision.hpp"

namespace spheres {

// Canonical representative of A under the deck action and orientation
// reversal: the least, in the canonical class order, among the translates
// placing a hull vertex at the identity and their negations. Idempotent and
// constant on orbits.
SphereClass normalize(const SphereClass& A);

// Same splitting up to conjugacy and orientation.
bool vertex_equivalent(const SphereClass& A, const SphereClass& B);

struct SplittingVertex {
    SphereClass canonical;
    std::vector<int> sources;   // ascending input indices collapsing here
};

struct Rejection {
    int index;
    std::string reason;   // "zero_class" or "not_embeddable_in_m"
    std::optional<FailingTranslate> certificate;
};

// Finite subcomplex of the splitting complex spanned by the surviving
// inputs. Edges join vertices disjoint in the manifold; simplices are the
// cliques of the edge graph with at most dim_cap + 1 vertices (the complex
// is flag: simplices of dimension >= 2 are pairwise-compatible cliques).
struct ComplexOutput {
    std::vector<SplittingVertex> vertices;
    std::vector<std::pair<int, int>> edges;      // i < j, lexicographic
    std::vector<std::vector<int>> simplices;     // by size, then lexicographic
    std::vector<Rejection> rejected;
    int dim_cap;
};

ComplexOutput build_complex(std::span<const SphereClass> classes, int dim_cap = 5,
                            const DecisionConfig& config = {});

}  // namespace spheres
