#include "spheres/free_group.hpp"

#include <ostream>
#include <sstream>

namespace spheres {

void check_letter(Rank rank, Letter letter) {
    if (letter == 0 || letter > rank.k || letter < -rank.k) {
        throw LetterOutOfRange("letter " + std::to_string(letter) +
                               " is not a generator of rank " + std::to_string(rank.k));
    }
}

int letter_cmp(Letter a, Letter b) noexcept {
    const Letter aa = a < 0 ? -a : a;
    const Letter bb = b < 0 ? -b : b;
    if (aa != bb) return aa < bb ? -1 : 1;
    if (a == b) return 0;
    return a > 0 ? -1 : 1;
}

ReducedWord::ReducedWord(Rank rank, std::vector<Letter> letters)
    : rank_(rank), letters_(std::move(letters)) {
    for (std::size_t i = 0; i < letters_.size(); ++i) {
        check_letter(rank_, letters_[i]);
        if (i > 0 && letters_[i] == -letters_[i - 1]) {
            throw NonReducedWord("letters " + std::to_string(letters_[i - 1]) + ", " +
                                 std::to_string(letters_[i]) + " cancel at position " +
                                 std::to_string(i - 1));
        }
    }
}

int word_cmp(const ReducedWord& a, const ReducedWord& b) {
    if (a.length() != b.length()) return a.length() < b.length() ? -1 : 1;
    const auto& la = a.letters();
    const auto& lb = b.letters();
    for (std::size_t i = 0; i < la.size(); ++i) {
        if (int c = letter_cmp(la[i], lb[i]); c != 0) return c;
    }
    return 0;
}

ReducedWord reduce(Rank rank, std::span<const Letter> letters) {
    std::vector<Letter> out;
    out.reserve(letters.size());
    for (Letter l : letters) {
        check_letter(rank, l);
        if (!out.empty() && out.back() == -l) {
            out.pop_back();
        } else {
            out.push_back(l);
        }
    }
    return ReducedWord(rank, std::move(out));
}

ReducedWord multiply(const ReducedWord& u, const ReducedWord& v) {
    if (!(u.rank() == v.rank())) {
        throw RankMismatch("multiplying words of rank " + std::to_string(u.rank().k) +
                           " and " + std::to_string(v.rank().k));
    }
    const auto& a = u.letters();
    const auto& b = v.letters();
    std::size_t i = a.size();
    std::size_t j = 0;
    while (i > 0 && j < b.size() && a[i - 1] == -b[j]) {
        --i;
        ++j;
    }
    std::vector<Letter> out;
    out.reserve(i + b.size() - j);
    out.insert(out.end(), a.begin(), a.begin() + static_cast<std::ptrdiff_t>(i));
    out.insert(out.end(), b.begin() + static_cast<std::ptrdiff_t>(j), b.end());
    return ReducedWord(u.rank(), std::move(out));
}

ReducedWord invert(const ReducedWord& u) {
    std::vector<Letter> out(u.letters().rbegin(), u.letters().rend());
    for (Letter& l : out) l = -l;
    return ReducedWord(u.rank(), std::move(out));
}

ReducedWord append(const ReducedWord& u, Letter letter) {
    check_letter(u.rank(), letter);
    std::vector<Letter> out = u.letters();
    if (!out.empty() && out.back() == -letter) {
        out.pop_back();
    } else {
        out.push_back(letter);
    }
    return ReducedWord(u.rank(), std::move(out));
}

ReducedWord prefix(const ReducedWord& u, int n) {
    if (n < 0 || n > u.length()) {
        throw Error("prefix length " + std::to_string(n) + " out of range for word of length " +
                    std::to_string(u.length()));
    }
    std::vector<Letter> out(u.letters().begin(), u.letters().begin() + n);
    return ReducedWord(u.rank(), std::move(out));
}

std::vector<GeodesicStep> geodesic(const ReducedWord& u, const ReducedWord& v) {
    if (!(u.rank() == v.rank())) {
        throw RankMismatch("geodesic between words of rank " + std::to_string(u.rank().k) +
                           " and " + std::to_string(v.rank().k));
    }
    const auto& a = u.letters();
    const auto& b = v.letters();
    std::size_t cp = 0;
    while (cp < a.size() && cp < b.size() && a[cp] == b[cp]) ++cp;

    std::vector<GeodesicStep> steps;
    steps.reserve(a.size() + b.size() - 2 * cp);
    ReducedWord cur = u;
    for (std::size_t i = a.size(); i > cp; --i) {
        const Letter back = -a[i - 1];
        steps.push_back(GeodesicStep{cur, back});
        cur = prefix(cur, static_cast<int>(i - 1));
    }
    for (std::size_t i = cp; i < b.size(); ++i) {
        steps.push_back(GeodesicStep{cur, b[i]});
        cur = append(cur, b[i]);
    }
    return steps;
}

std::string to_string(const ReducedWord& w) {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < w.letters().size(); ++i) {
        if (i > 0) os << ',';
        os << w.letters()[i];
    }
    os << ']';
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const ReducedWord& w) {
    return os << to_string(w);
}

}  // namespace spheres
