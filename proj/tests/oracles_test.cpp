#include <doctest.h>

#include <algorithm>
#include <stdexcept>

#include "terai/oracles.hpp"

using namespace terai;

TEST_CASE("cohn window reproduces the catalogue") {
    auto hits = cohn_search(10, 1000);
    // trivial family (1, 1, k) for k = 3..10, plus the lone sporadic hit
    REQUIRE(hits.size() == 9);
    std::size_t sporadic = 0;
    for (const CohnHit& hit : hits) {
        if (hit.y == 1) {
            CHECK(hit.z == 1);
        } else {
            CHECK(hit.y == 239);
            CHECK(hit.z == 13);
            CHECK(hit.k == 4);
            ++sporadic;
        }
    }
    CHECK(sporadic == 1);
    CHECK(Natural(2) * 13 * 13 * 13 * 13 == Natural(239) * 239 + 1);

    auto small = cohn_search(3, 5);
    REQUIRE(small.size() == 1);
    CHECK(small[0] == CohnHit{1, 1, 3});

    auto clipped = cohn_search(4, 12);  // z_max below 13 hides the sporadic hit
    REQUIRE(clipped.size() == 2);
    CHECK(clipped[0] == CohnHit{1, 1, 3});
    CHECK(clipped[1] == CohnHit{1, 1, 4});

    auto nontrivial = cohn_search(10, 1000, false);
    REQUIRE(nontrivial.size() == 1);
    CHECK(nontrivial[0] == CohnHit{239, 13, 4});

    CHECK_THROWS_AS(cohn_search(2, 10), std::invalid_argument);
    CHECK_THROWS_AS(cohn_search(3, 0), std::invalid_argument);
}

TEST_CASE("enlarging the cohn window never drops hits") {
    auto inner = cohn_search(6, 50);
    auto outer = cohn_search(8, 200);
    for (const CohnHit& hit : inner)
        CHECK(std::find(outer.begin(), outer.end(), hit) != outer.end());
}

TEST_CASE("wide cohn window stays on catalogue") {
    for (const CohnHit& hit : cohn_search(20, 2000, false)) {
        CHECK(hit.y == 239);
        CHECK(hit.z == 13);
        CHECK(hit.k == 4);
    }
}

TEST_CASE("consecutive-square detection") {
    CHECK(consecutive_square_root(5) == Natural(1));
    CHECK(consecutive_square_root(28561) == Natural(119));  // 13^4 = 119^2 + 120^2
    CHECK(!consecutive_square_root(37));
    CHECK(consecutive_square_root(1) == Natural(0));
    CHECK(!consecutive_square_root(0));
    for (unsigned long a = 1; a <= 10000; ++a) {
        Natural n = Natural(a) * a + Natural(a + 1) * (a + 1);
        REQUIRE(consecutive_square_root(n) == Natural(a));
    }
}

TEST_CASE("odd-exponent power equation has no consecutive-square hits") {
    CHECK(corollary_c_search(500, {3, 5, 7, 9, 11}).empty());
    CHECK(corollary_c_search(1, {3}).empty());
    CHECK_THROWS_AS(corollary_c_search(13, {4}), std::invalid_argument);
    CHECK_THROWS_AS(corollary_c_search(10, {3, 2}), std::invalid_argument);
    CHECK_THROWS_AS(corollary_c_search(10, {1}), std::invalid_argument);
}

TEST_CASE("two-prime-square equation windows are empty") {
    CHECK(lemma_l2_search(7, 5, 4, 200).empty());
    CHECK(lemma_l2_search(3, 7, 4, 200).empty());

    CHECK_THROWS_AS(lemma_l2_search(7, 3, 4, 200), std::invalid_argument);   // n <= 3
    CHECK_THROWS_AS(lemma_l2_search(9, 5, 4, 200), std::invalid_argument);   // composite p
    CHECK_THROWS_AS(lemma_l2_search(7, 15, 4, 200), std::invalid_argument);  // composite n
}

TEST_CASE("consecutive-square filter is what keeps the window empty") {
    // 79^2 + 3^2 = 2 * 5^5 solves the raw equation, but y = 5 = 1 + 4 is a
    // sum of two consecutive squares, so the lemma's hypothesis drops it.
    CHECK(Natural(79) * 79 + 9 == 2 * Natural(3125));
    CHECK(consecutive_square_root(5) == Natural(1));
    CHECK(lemma_l2_search(3, 5, 2, 10).empty());
}
