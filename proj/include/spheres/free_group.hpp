#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "spheres/errors.hpp"

namespace spheres {

// Number of free generators. The Cayley tree of F_k is 2k-regular.
struct Rank {
    int k;

    explicit Rank(int k_) : k(k_) {
        if (k < 1) throw Error("rank must be at least 1, got " + std::to_string(k_));
    }

    friend bool operator==(const Rank&, const Rank&) = default;
};

// Signed generator index: +i denotes x_i and -i its inverse, 1 <= i <= k.
// Zero is never a letter.
using Letter = std::int32_t;

// Throws LetterOutOfRange unless 1 <= |letter| <= rank.k.
void check_letter(Rank rank, Letter letter);

// Canonical order on letters: by magnitude, positive before negative, so
// 1 < -1 < 2 < -2 < ...  Every deterministic choice in the library (witness
// selection, normal forms, output ordering) reduces to this order.
int letter_cmp(Letter a, Letter b) noexcept;

// A freely reduced word over x_1..x_k; the empty word is the identity.
// Immutable value type: all operations build new words.
class ReducedWord {
public:
    explicit ReducedWord(Rank rank) : rank_(rank) {}

    // Validating constructor: `letters` must be in range and already reduced.
    // Throws LetterOutOfRange or NonReducedWord.
    ReducedWord(Rank rank, std::vector<Letter> letters);

    const Rank& rank() const { return rank_; }
    const std::vector<Letter>& letters() const { return letters_; }
    int length() const { return static_cast<int>(letters_.size()); }
    bool is_identity() const { return letters_.empty(); }

    friend bool operator==(const ReducedWord&, const ReducedWord&) = default;

private:
    Rank rank_;
    std::vector<Letter> letters_;
};

// Shortlex over letter_cmp: shorter words first, ties letterwise.
int word_cmp(const ReducedWord& a, const ReducedWord& b);

struct WordLess {
    bool operator()(const ReducedWord& a, const ReducedWord& b) const {
        return word_cmp(a, b) < 0;
    }
};

// Free reduction of an arbitrary letter sequence (cascading cancellations).
ReducedWord reduce(Rank rank, std::span<const Letter> letters);

ReducedWord multiply(const ReducedWord& u, const ReducedWord& v);
ReducedWord invert(const ReducedWord& u);

// u extended by one letter, cancelling against the last letter if needed.
ReducedWord append(const ReducedWord& u, Letter letter);

// The first n letters of u; 0 <= n <= u.length().
ReducedWord prefix(const ReducedWord& u, int n);

// One edge traversal in the Cayley tree: from `from` to `from * x_letter`.
struct GeodesicStep {
    ReducedWord from;
    Letter letter;

    ReducedWord to() const { return append(from, letter); }

    friend bool operator==(const GeodesicStep&, const GeodesicStep&) = default;
};

// The unique backtracking-free edge path from u to v: descend from u to the
// longest common prefix, then ascend to v. Empty iff u == v. Its length is
// |u| + |v| - 2 * |common prefix|.
std::vector<GeodesicStep> geodesic(const ReducedWord& u, const ReducedWord& v);

// Debug rendering, e.g. "[1,-2]".
std::string to_string(const ReducedWord& w);
std::ostream& operator<<(std::ostream& os, const ReducedWord& w);

}  // namespace spheres
