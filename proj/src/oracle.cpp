#include "spheres/oracle.hpp"

#include <random>

#include "hull_index.hpp"

namespace spheres {

Weight path_intersection_sum(std::span<const GeodesicStep> path, const SphereClass& A) {
    Weight total = 0;
    for (std::size_t i = 0; i < path.size(); ++i) {
        const GeodesicStep& step = path[i];
        if (!(step.from.rank() == A.rank())) {
            throw RankMismatch("path step and class have different ranks");
        }
        if (i > 0 && !(path[i - 1].to() == step.from)) {
            throw BrokenPath("step " + std::to_string(i) + " starts at " + to_string(step.from) +
                             " but the previous step ends at " + to_string(path[i - 1].to()));
        }
        const EdgeTraversal t = canonical_edge(step.from, step.letter);
        const Weight w = A.weight_of(t.edge);
        if (w != 0) total = checked_add(total, t.sign > 0 ? w : checked_sub(0, w));
    }
    return total;
}

void enumerate_paths(const SupportHull& h, int max_len,
                     const std::function<void(const HullPath&)>& visit,
                     const OracleConfig& config) {
    if (max_len < 1) throw Error("max_len must be positive");
    if (max_len > config.max_len_cap) {
        throw LimitExceeded("max_len " + std::to_string(max_len) + " exceeds the cap of " +
                            std::to_string(config.max_len_cap));
    }
    if (h.vertices.empty()) throw EmptySupport("enumerate_paths over an empty hull");

    const detail::HullIndex H(h);
    std::vector<bool> is_boundary(h.vertices.size(), false);
    for (int b : H.boundary) is_boundary[static_cast<std::size_t>(b)] = true;

    HullPath path{h.vertices.front(), h.vertices.front(), {}};
    // Depth-first extension; a path is visited before any of its extensions.
    auto extend = [&](auto&& self, int at) -> void {
        if (is_boundary[static_cast<std::size_t>(at)]) visit(path);
        if (static_cast<int>(path.steps.size()) == max_len) return;
        for (const auto& arc : H.adjacency[static_cast<std::size_t>(at)]) {
            path.steps.push_back(GeodesicStep{H.word(at), arc.letter});
            path.end = H.word(arc.to);
            self(self, arc.to);
            path.steps.pop_back();
            path.end = H.word(at);
        }
    };
    for (int start : H.boundary) {
        path.start = H.word(start);
        path.end = path.start;
        extend(extend, start);
    }
}

namespace {

// Bounded draw from the engine; bias is irrelevant here, determinism is not.
std::uint64_t draw(std::mt19937_64& rng, std::uint64_t n) { return rng() % n; }

ReducedWord draw_word(std::mt19937_64& rng, Rank rank, int len) {
    std::vector<Letter> letters;
    letters.reserve(static_cast<std::size_t>(len));
    for (int i = 0; i < len; ++i) {
        if (letters.empty()) {
            const auto pick = static_cast<Letter>(draw(rng, 2 * static_cast<std::uint64_t>(rank.k)));
            letters.push_back(pick < rank.k ? pick + 1 : -(pick - rank.k + 1));
        } else {
            // 2k - 1 non-cancelling choices.
            const Letter forbidden = -letters.back();
            auto pick = static_cast<Letter>(draw(rng, 2 * static_cast<std::uint64_t>(rank.k) - 1));
            Letter l = pick < rank.k ? pick + 1 : -(pick - rank.k + 1);
            if (l == forbidden) l = -(rank.k);
            letters.push_back(l);
        }
    }
    return ReducedWord(rank, std::move(letters));
}

}  // namespace

SphereClass random_class(Rank rank, int support_bound, int radius, Weight weight_bound,
                         std::uint64_t seed) {
    if (support_bound < 1) throw Error("support bound must be positive");
    if (radius < 0) throw Error("radius must be nonnegative");
    if (weight_bound < 1) throw Error("weight bound must be positive");

    std::mt19937_64 rng(seed);
    const auto support = static_cast<int>(1 + draw(rng, static_cast<std::uint64_t>(support_bound)));

    std::vector<std::pair<CanonicalEdge, Weight>> entries;
    for (int i = 0; i < support; ++i) {
        const auto len = static_cast<int>(draw(rng, static_cast<std::uint64_t>(radius) + 1));
        ReducedWord base = draw_word(rng, rank, len);
        const auto gen = static_cast<int>(1 + draw(rng, static_cast<std::uint64_t>(rank.k)));
        const auto magnitude =
            static_cast<Weight>(1 + draw(rng, static_cast<std::uint64_t>(weight_bound)));
        const Weight w = draw(rng, 2) == 0 ? magnitude : -magnitude;
        entries.emplace_back(CanonicalEdge{std::move(base), gen}, w);
    }

    // Later draws of an already-drawn edge win; weights stay nonzero either way.
    std::map<CanonicalEdge, Weight, EdgeLess> dedup;
    for (const auto& [edge, w] : entries) dedup[edge] = w;
    std::vector<std::pair<CanonicalEdge, Weight>> flat(dedup.begin(), dedup.end());
    return SphereClass::from_entries(rank, flat);
}

}  // namespace spheres
