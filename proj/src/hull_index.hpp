#pragma once

#include <map>
#include <vector>

#include "spheres/sphere_class.hpp"

namespace spheres::detail {

// Index view of a SupportHull: vertices and edges become dense indices so the
// decision procedures and the path enumerator can walk the tree without
// rebuilding words. Vertex indices follow the canonical vertex order.
struct HullIndex {
    const SupportHull* hull;

    struct Arc {
        int to;     // neighbor vertex index
        int edge;   // hull edge index
        int sign;   // +1 when the arc runs base -> base * x_gen
        Letter letter;
    };

    std::vector<std::vector<Arc>> adjacency;   // per vertex, sorted by `to`
    std::vector<int> boundary;                 // ascending vertex indices

    explicit HullIndex(const SupportHull& h);

    int vertex_count() const { return static_cast<int>(hull->vertices.size()); }
    const ReducedWord& word(int v) const { return hull->vertices[static_cast<std::size_t>(v)]; }

    // Weight of each hull edge in A, aligned with hull->edges.
    std::vector<Weight> edge_weights(const SphereClass& A) const;

    // phi[v] = signed crossing sum from vertex 0 to v, so the intersection
    // number of the pair (u, v) is phi[v] - phi[u].
    std::vector<Weight> potentials(const std::vector<Weight>& edge_weights) const;
};

}  // namespace spheres::detail
