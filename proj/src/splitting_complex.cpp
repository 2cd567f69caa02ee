#include "spheres/splitting_complex.hpp"

#include <algorithm>
#include <map>

#include "parallel.hpp"

namespace spheres {

SphereClass normalize(const SphereClass& A) {
    if (A.is_zero()) throw ZeroClass("normalize is undefined on the zero class");
    const SupportHull h = hull(A);

    std::optional<SphereClass> best;
    auto consider = [&](SphereClass candidate) {
        if (!best || class_cmp(candidate, *best) < 0) best = std::move(candidate);
    };
    for (const auto& q : h.vertices) {
        SphereClass moved = translate(invert(q), A);
        consider(negate(moved));
        consider(std::move(moved));
    }
    return *best;
}

bool vertex_equivalent(const SphereClass& A, const SphereClass& B) {
    if (!(A.rank() == B.rank())) {
        throw RankMismatch("vertex_equivalent over classes of rank " + std::to_string(A.rank().k) +
                           " and " + std::to_string(B.rank().k));
    }
    return normalize(A) == normalize(B);
}

namespace {

// All cliques of the given size bound, emitted by ascending size and then
// lexicographically.
std::vector<std::vector<int>> cliques_up_to(const std::vector<std::vector<bool>>& adjacent,
                                            int max_size) {
    const int n = static_cast<int>(adjacent.size());
    std::vector<std::vector<int>> out;
    std::vector<int> current;
    auto grow = [&](auto&& self, int from) -> void {
        for (int v = from; v < n; ++v) {
            bool ok = true;
            for (int u : current) {
                if (!adjacent[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)]) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            current.push_back(v);
            out.push_back(current);
            if (static_cast<int>(current.size()) < max_size) self(self, v + 1);
            current.pop_back();
        }
    };
    grow(grow, 0);
    std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    return out;
}

}  // namespace

ComplexOutput build_complex(std::span<const SphereClass> classes, int dim_cap,
                            const DecisionConfig& config) {
    if (dim_cap < 0) throw Error("dimension cap must be nonnegative");

    ComplexOutput out;
    out.dim_cap = dim_cap;

    std::map<SphereClass, std::vector<int>, ClassLess> groups;
    for (std::size_t i = 0; i < classes.size(); ++i) {
        const int index = static_cast<int>(i);
        const SphereClass& c = classes[i];
        if (c.is_zero()) {
            out.rejected.push_back(Rejection{index, "zero_class", std::nullopt});
            continue;
        }
        const ManifoldResult r = embeddable_in_M(c, config);
        if (!r.verdict) {
            out.rejected.push_back(Rejection{index, "not_embeddable_in_m",
                                             std::get<FailingTranslate>(r.certificate)});
            continue;
        }
        groups[normalize(c)].push_back(index);
    }

    for (auto& [canonical, sources] : groups) {
        out.vertices.push_back(SplittingVertex{canonical, sources});
    }

    const int n = static_cast<int>(out.vertices.size());
    std::vector<std::pair<int, int>> candidates;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) candidates.emplace_back(i, j);
    }
    std::vector<char> joined(candidates.size(), 0);
    detail::parallel_for(candidates.size(), [&](std::size_t p) {
        const auto [i, j] = candidates[p];
        joined[p] = disjoint_in_M(out.vertices[static_cast<std::size_t>(i)].canonical,
                                  out.vertices[static_cast<std::size_t>(j)].canonical, config)
                            .verdict
                        ? 1
                        : 0;
    });

    std::vector<std::vector<bool>> adjacent(static_cast<std::size_t>(n),
                                            std::vector<bool>(static_cast<std::size_t>(n), false));
    for (std::size_t p = 0; p < candidates.size(); ++p) {
        if (!joined[p]) continue;
        const auto [i, j] = candidates[p];
        out.edges.push_back(candidates[p]);
        adjacent[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = true;
        adjacent[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = true;
    }

    out.simplices = cliques_up_to(adjacent, dim_cap + 1);
    return out;
}

}  // namespace spheres
