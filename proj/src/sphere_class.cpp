#include "spheres/sphere_class.hpp"

#include <algorithm>
#include <deque>
#include <ostream>
#include <set>
#include <sstream>

namespace spheres {

int weight_cmp(Weight a, Weight b) noexcept {
    // Magnitude comparison without taking |INT64_MIN|.
    const bool na = a < 0, nb = b < 0;
    const std::uint64_t ma = na ? ~static_cast<std::uint64_t>(a) + 1 : static_cast<std::uint64_t>(a);
    const std::uint64_t mb = nb ? ~static_cast<std::uint64_t>(b) + 1 : static_cast<std::uint64_t>(b);
    if (ma != mb) return ma < mb ? -1 : 1;
    if (na == nb) return 0;
    return na ? 1 : -1;
}

Weight checked_add(Weight a, Weight b) {
    Weight r;
    if (__builtin_add_overflow(a, b, &r)) {
        throw WeightOverflow("weight addition overflow: " + std::to_string(a) + " + " +
                             std::to_string(b));
    }
    return r;
}

Weight checked_sub(Weight a, Weight b) {
    Weight r;
    if (__builtin_sub_overflow(a, b, &r)) {
        throw WeightOverflow("weight subtraction overflow: " + std::to_string(a) + " - " +
                             std::to_string(b));
    }
    return r;
}

Weight checked_mul(Weight a, Weight b) {
    Weight r;
    if (__builtin_mul_overflow(a, b, &r)) {
        throw WeightOverflow("weight multiplication overflow: " + std::to_string(a) + " * " +
                             std::to_string(b));
    }
    return r;
}

int edge_cmp(const CanonicalEdge& a, const CanonicalEdge& b) {
    if (int c = word_cmp(a.base, b.base); c != 0) return c;
    if (a.gen != b.gen) return a.gen < b.gen ? -1 : 1;
    return 0;
}

EdgeTraversal canonical_edge(const ReducedWord& from, Letter letter) {
    check_letter(from.rank(), letter);
    if (letter > 0) {
        return EdgeTraversal{CanonicalEdge{from, letter}, +1};
    }
    return EdgeTraversal{CanonicalEdge{append(from, letter), -letter}, -1};
}

static void check_edge(Rank rank, const CanonicalEdge& e) {
    if (!(e.base.rank() == rank)) {
        throw RankMismatch("edge base has rank " + std::to_string(e.base.rank().k) +
                           ", expected " + std::to_string(rank.k));
    }
    if (e.gen < 1 || e.gen > rank.k) {
        throw LetterOutOfRange("edge generator " + std::to_string(e.gen) +
                               " out of range for rank " + std::to_string(rank.k));
    }
}

SphereClass::SphereClass(Rank rank,
                         std::initializer_list<std::pair<CanonicalEdge, Weight>> entries)
    : rank_(rank) {
    for (const auto& [edge, w] : entries) {
        check_edge(rank_, edge);
        if (w == 0) throw Error("zero weight on edge " + to_string(edge));
        if (!weights_.emplace(edge, w).second) {
            throw Error("duplicate edge " + to_string(edge));
        }
    }
}

SphereClass SphereClass::from_entries(Rank rank,
                                      std::span<const std::pair<CanonicalEdge, Weight>> entries) {
    SphereClass out(rank);
    for (const auto& [edge, w] : entries) {
        check_edge(rank, edge);
        if (w == 0) throw Error("zero weight on edge " + to_string(edge));
        if (!out.weights_.emplace(edge, w).second) {
            throw Error("duplicate edge " + to_string(edge));
        }
    }
    return out;
}

Weight SphereClass::weight_of(const CanonicalEdge& e) const {
    auto it = weights_.find(e);
    return it == weights_.end() ? 0 : it->second;
}

int class_cmp(const SphereClass& a, const SphereClass& b) {
    auto ia = a.weights().begin();
    auto ib = b.weights().begin();
    for (; ia != a.weights().end() && ib != b.weights().end(); ++ia, ++ib) {
        if (int c = edge_cmp(ia->first, ib->first); c != 0) return c;
        if (int c = weight_cmp(ia->second, ib->second); c != 0) return c;
    }
    if (ia != a.weights().end()) return 1;
    if (ib != b.weights().end()) return -1;
    return 0;
}

SphereClass translate(const ReducedWord& g, const SphereClass& A) {
    if (!(g.rank() == A.rank())) {
        throw RankMismatch("translating a rank " + std::to_string(A.rank().k) +
                           " class by a rank " + std::to_string(g.rank().k) + " word");
    }
    SphereClass out(A.rank());
    for (const auto& [edge, w] : A.weights()) {
        out.weights_.emplace(CanonicalEdge{multiply(g, edge.base), edge.gen}, w);
    }
    return out;
}

SphereClass negate(const SphereClass& A) {
    SphereClass out(A.rank());
    for (const auto& [edge, w] : A.weights()) {
        // -w never overflows: stored weights are nonzero and fit, and the
        // only problematic value INT64_MIN is rejected by checked negation.
        out.weights_.emplace(edge, checked_sub(0, w));
    }
    return out;
}

SphereClass add(const SphereClass& A, const SphereClass& B) {
    if (!(A.rank() == B.rank())) {
        throw RankMismatch("adding classes of rank " + std::to_string(A.rank().k) + " and " +
                           std::to_string(B.rank().k));
    }
    SphereClass out(A.rank());
    out.weights_ = A.weights_;
    for (const auto& [edge, w] : B.weights()) {
        auto [it, inserted] = out.weights_.emplace(edge, w);
        if (!inserted) {
            it->second = checked_add(it->second, w);
            if (it->second == 0) out.weights_.erase(it);
        }
    }
    return out;
}

SphereClass scale(Weight n, const SphereClass& A) {
    SphereClass out(A.rank());
    if (n == 0) return out;
    for (const auto& [edge, w] : A.weights()) {
        out.weights_.emplace(edge, checked_mul(n, w));
    }
    return out;
}

SupportHull hull(std::span<const SphereClass> classes) {
    if (classes.empty()) throw EmptySupport("hull of an empty class list");
    const Rank rank = classes.front().rank();
    for (const auto& c : classes) {
        if (!(c.rank() == rank)) {
            throw RankMismatch("hull over classes of rank " + std::to_string(rank.k) + " and " +
                               std::to_string(c.rank().k));
        }
    }

    std::vector<ReducedWord> endpoints;
    for (const auto& c : classes) {
        for (const auto& [edge, w] : c.weights()) {
            endpoints.push_back(edge.base);
            endpoints.push_back(edge.far_end());
        }
    }
    if (endpoints.empty()) throw EmptySupport("hull of classes with empty support");

    // Union of geodesics from one fixed endpoint to all others; the result
    // does not depend on which endpoint is fixed.
    const ReducedWord& root = endpoints.front();
    std::set<ReducedWord, WordLess> vertices{root};
    std::set<CanonicalEdge, EdgeLess> edges;
    for (const auto& p : endpoints) {
        for (const auto& step : geodesic(root, p)) {
            const EdgeTraversal t = canonical_edge(step.from, step.letter);
            edges.insert(t.edge);
            vertices.insert(step.from);
            vertices.insert(step.to());
        }
        vertices.insert(p);
    }

    std::map<ReducedWord, int, WordLess> degree;
    for (const auto& e : edges) {
        ++degree[e.base];
        ++degree[e.far_end()];
    }

    SupportHull out;
    out.vertices.assign(vertices.begin(), vertices.end());
    out.edges.assign(edges.begin(), edges.end());
    for (const auto& v : out.vertices) {
        auto it = degree.find(v);
        const int d = it == degree.end() ? 0 : it->second;
        if (d < 2 * rank.k) out.boundary.push_back(v);
    }
    return out;
}

SupportHull hull(const SphereClass& A) {
    return hull(std::span<const SphereClass>(&A, 1));
}

SupportHull hull(const SphereClass& A, const SphereClass& B) {
    const SphereClass both[] = {A, B};
    return hull(std::span<const SphereClass>(both, 2));
}

int hull_diameter(const SupportHull& h) {
    if (h.vertices.empty()) return 0;
    std::map<ReducedWord, std::vector<ReducedWord>, WordLess> adj;
    for (const auto& e : h.edges) {
        ReducedWord far = e.far_end();
        adj[e.base].push_back(far);
        adj[far].push_back(e.base);
    }
    auto farthest = [&](const ReducedWord& start) {
        std::map<ReducedWord, int, WordLess> dist{{start, 0}};
        std::deque<ReducedWord> queue{start};
        std::pair<ReducedWord, int> best{start, 0};
        while (!queue.empty()) {
            ReducedWord v = queue.front();
            queue.pop_front();
            const int d = dist[v];
            if (d > best.second) best = {v, d};
            for (const auto& w : adj[v]) {
                if (dist.emplace(w, d + 1).second) queue.push_back(w);
            }
        }
        return best;
    };
    auto [far, d1] = farthest(h.vertices.front());
    return farthest(far).second;
}

int pair_cmp(const EndPair& a, const EndPair& b) {
    if (int c = word_cmp(a.source, b.source); c != 0) return c;
    return word_cmp(a.target, b.target);
}

Weight pair_intersection_number(const EndPair& c, const SphereClass& A) {
    if (!(c.source.rank() == A.rank()) || !(c.target.rank() == A.rank())) {
        throw RankMismatch("end pair and class have different ranks");
    }
    Weight total = 0;
    for (const auto& step : geodesic(c.source, c.target)) {
        const EdgeTraversal t = canonical_edge(step.from, step.letter);
        const Weight w = A.weight_of(t.edge);
        if (w != 0) total = checked_add(total, t.sign > 0 ? w : checked_sub(0, w));
    }
    return total;
}

std::string to_string(const CanonicalEdge& e) {
    return "(" + to_string(e.base) + "," + std::to_string(e.gen) + ")";
}

std::string to_string(const SphereClass& A) {
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (const auto& [edge, w] : A.weights()) {
        if (!first) os << ", ";
        first = false;
        os << to_string(edge) << ":" << w;
    }
    os << '}';
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const CanonicalEdge& e) {
    return os << to_string(e);
}

std::ostream& operator<<(std::ostream& os, const SphereClass& A) {
    return os << to_string(A);
}

}  // namespace spheres
