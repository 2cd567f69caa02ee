#include "hull_index.hpp"

#include <algorithm>

namespace spheres::detail {

HullIndex::HullIndex(const SupportHull& h) : hull(&h) {
    std::map<ReducedWord, int, WordLess> index;
    for (std::size_t i = 0; i < h.vertices.size(); ++i) {
        index.emplace(h.vertices[i], static_cast<int>(i));
    }

    adjacency.resize(h.vertices.size());
    for (std::size_t e = 0; e < h.edges.size(); ++e) {
        const CanonicalEdge& edge = h.edges[e];
        const int u = index.at(edge.base);
        const int v = index.at(edge.far_end());
        adjacency[static_cast<std::size_t>(u)].push_back(
            Arc{v, static_cast<int>(e), +1, static_cast<Letter>(edge.gen)});
        adjacency[static_cast<std::size_t>(v)].push_back(
            Arc{u, static_cast<int>(e), -1, static_cast<Letter>(-edge.gen)});
    }
    for (auto& arcs : adjacency) {
        std::sort(arcs.begin(), arcs.end(), [](const Arc& a, const Arc& b) { return a.to < b.to; });
    }

    for (const auto& v : h.boundary) boundary.push_back(index.at(v));
    std::sort(boundary.begin(), boundary.end());
}

std::vector<Weight> HullIndex::edge_weights(const SphereClass& A) const {
    std::vector<Weight> out;
    out.reserve(hull->edges.size());
    for (const auto& e : hull->edges) out.push_back(A.weight_of(e));
    return out;
}

std::vector<Weight> HullIndex::potentials(const std::vector<Weight>& ew) const {
    std::vector<Weight> phi(hull->vertices.size(), 0);
    if (hull->vertices.empty()) return phi;
    std::vector<bool> seen(hull->vertices.size(), false);
    std::vector<int> stack{0};
    seen[0] = true;
    while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        for (const Arc& a : adjacency[static_cast<std::size_t>(v)]) {
            if (seen[static_cast<std::size_t>(a.to)]) continue;
            seen[static_cast<std::size_t>(a.to)] = true;
            const Weight w = ew[static_cast<std::size_t>(a.edge)];
            phi[static_cast<std::size_t>(a.to)] =
                checked_add(phi[static_cast<std::size_t>(v)],
                            a.sign > 0 ? w : checked_sub(0, w));
            stack.push_back(a.to);
        }
    }
    return phi;
}

}  // namespace spheres::detail
