#include <vector>

#include "doctest.h"
#include "spheres/free_group.hpp"
#include "test_util.hpp"

using namespace spheres;
using testutil::W;

TEST_CASE("rank must be positive") {
    CHECK_THROWS_AS(Rank{0}, Error);
    CHECK_THROWS_AS(Rank{-3}, Error);
    CHECK(Rank{1}.k == 1);
}

TEST_CASE("letter validation") {
    const Rank k2{2};
    CHECK_NOTHROW(check_letter(k2, 1));
    CHECK_NOTHROW(check_letter(k2, -2));
    CHECK_THROWS_AS(check_letter(k2, 0), LetterOutOfRange);
    CHECK_THROWS_AS(check_letter(k2, 3), LetterOutOfRange);
    CHECK_THROWS_AS(check_letter(k2, -3), LetterOutOfRange);
}

TEST_CASE("letter order puts the positive generator first") {
    CHECK(letter_cmp(1, -1) < 0);
    CHECK(letter_cmp(-1, 2) < 0);
    CHECK(letter_cmp(2, -2) < 0);
    CHECK(letter_cmp(1, 1) == 0);
    CHECK(letter_cmp(-2, 1) > 0);
}

TEST_CASE("reduced word constructor validates") {
    const Rank k2{2};
    CHECK(ReducedWord(k2).is_identity());
    CHECK(ReducedWord(k2, {1, 2, -1}).length() == 3);
    CHECK_THROWS_AS(ReducedWord(k2, {1, 3}), LetterOutOfRange);
    CHECK_THROWS_AS(ReducedWord(k2, {1, 0}), LetterOutOfRange);
    CHECK_THROWS_AS(ReducedWord(k2, {1, -1}), NonReducedWord);
    CHECK_THROWS_AS(ReducedWord(k2, {2, -1, 1, 2}), NonReducedWord);
}

TEST_CASE("shortlex word order") {
    const int k = 2;
    CHECK(word_cmp(W(k, {}), W(k, {1})) < 0);
    CHECK(word_cmp(W(k, {1}), W(k, {-1})) < 0);
    CHECK(word_cmp(W(k, {-1}), W(k, {2})) < 0);
    CHECK(word_cmp(W(k, {-2}), W(k, {1, 1})) < 0);
    CHECK(word_cmp(W(k, {1, 2}), W(k, {1, -2})) < 0);
    CHECK(word_cmp(W(k, {2, 1}), W(k, {1, 2})) > 0);
    CHECK(word_cmp(W(k, {1, 2}), W(k, {1, 2})) == 0);
}

TEST_CASE("free reduction cascades") {
    const Rank k3{3};
    const std::vector<Letter> input{1, 2, -2, -1, 3};
    CHECK(reduce(k3, input) == W(3, {3}));
    const std::vector<Letter> all_cancel{1, 2, -2, -1};
    CHECK(reduce(k3, all_cancel).is_identity());
    const std::vector<Letter> none{1, 2, 3};
    CHECK(reduce(k3, none) == W(3, {1, 2, 3}));
}

TEST_CASE("multiplication cancels at the seam") {
    const int k = 3;
    CHECK(multiply(W(k, {1, 2}), W(k, {-2, -1, 3})) == W(k, {3}));
    CHECK(multiply(W(k, {1, 2}), W(k, {-2, -1})).is_identity());
    CHECK(multiply(W(k, {1}), W(k, {2})) == W(k, {1, 2}));
    CHECK(multiply(W(k, {}), W(k, {2})) == W(k, {2}));
}

TEST_CASE("inverse reverses and negates") {
    const int k = 2;
    CHECK(invert(W(k, {1, -2})) == W(k, {2, -1}));
    CHECK(invert(W(k, {})).is_identity());
    CHECK(multiply(W(k, {1, 2, -1}), invert(W(k, {1, 2, -1}))).is_identity());
}

TEST_CASE("append and prefix") {
    const int k = 2;
    CHECK(append(W(k, {1}), 2) == W(k, {1, 2}));
    CHECK(append(W(k, {1, 2}), -2) == W(k, {1}));
    CHECK(prefix(W(k, {1, 2, -1}), 2) == W(k, {1, 2}));
    CHECK(prefix(W(k, {1, 2}), 0).is_identity());
}

TEST_CASE("geodesic descends then ascends") {
    const int k = 2;
    const auto path = geodesic(W(k, {1}), W(k, {2}));
    REQUIRE(path.size() == 2);
    CHECK(path[0].from == W(k, {1}));
    CHECK(path[0].letter == -1);
    CHECK(path[1].from == W(k, {}));
    CHECK(path[1].letter == 2);
    CHECK(path[1].to() == W(k, {2}));

    CHECK(geodesic(W(k, {1, 2}), W(k, {1, 2})).empty());
}

TEST_CASE("geodesic length and chaining on random pairs") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        const int k = 1 + static_cast<int>(rng() % 3);
        const ReducedWord u = testutil::random_word(rng, k, 6);
        const ReducedWord v = testutil::random_word(rng, k, 6);
        const auto path = geodesic(u, v);

        int common = 0;
        while (common < u.length() && common < v.length() &&
               u.letters()[static_cast<std::size_t>(common)] ==
                   v.letters()[static_cast<std::size_t>(common)]) {
            ++common;
        }
        CHECK(static_cast<int>(path.size()) == u.length() + v.length() - 2 * common);

        ReducedWord at = u;
        for (const GeodesicStep& step : path) {
            CHECK(step.from == at);
            at = step.to();
        }
        CHECK(at == v);
    }
}

TEST_CASE("word rendering") {
    CHECK(to_string(W(2, {1, -2})) == "[1,-2]");
    CHECK(to_string(W(2, {})) == "[]");
}
