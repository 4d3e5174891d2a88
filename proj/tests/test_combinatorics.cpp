#include <doctest.h>

#include <algorithm>

#include "hlag/combinatorics.hpp"

using namespace hlag;

TEST_CASE("binomial basics") {
    CHECK(binomial(0, 0) == 1);
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(4, 3) == 4);
    CHECK(binomial(6, 3) == 20);
    CHECK(binomial(3, 5) == 0);
    CHECK(binomial(-1, 0) == 0);
    CHECK(binomial(52, 5) == 2598960);
    CHECK_THROWS_AS((void)binomial(140, 70), std::overflow_error);
    CHECK(binomial(101, 2) == 5050);
}

TEST_CASE("colex comparison") {
    // 246 < 156 because the largest disagreeing element lies in 156.
    CHECK(colex_compare({2, 4, 6}, {1, 5, 6}) == std::strong_ordering::less);
    CHECK(colex_compare({1, 2, 3}, {1, 2, 3}) == std::strong_ordering::equal);
    CHECK(colex_compare({3, 4, 5}, {1, 2, 6}) == std::strong_ordering::less);
    CHECK(colex_compare({1, 5, 6}, {2, 4, 6}) == std::strong_ordering::greater);
    CHECK_THROWS_AS(colex_compare({1, 2}, {1, 2, 3}), std::invalid_argument);
}

TEST_CASE("colex unrank matches the listed ordering") {
    CHECK(colex_unrank(3, 1) == VertexSet{1, 2, 3});
    CHECK(colex_unrank(3, 2) == VertexSet{1, 2, 4});
    CHECK(colex_unrank(3, 5) == VertexSet{1, 2, 5});

    // Cross-check the 17th element by sorting all small 3-sets explicitly.
    std::vector<VertexSet> all = all_subsets(8, 3);
    std::sort(all.begin(), all.end(), [](const VertexSet& a, const VertexSet& b) {
        return colex_compare(a, b) == std::strong_ordering::less;
    });
    CHECK(all[16] == VertexSet{1, 5, 6});
    CHECK(colex_unrank(3, 17) == VertexSet{1, 5, 6});

    CHECK_THROWS_AS(colex_unrank(3, 0), std::invalid_argument);
}

TEST_CASE("rank and unrank are inverse") {
    for (int r : {2, 3, 4, 5}) {
        for (std::uint64_t k = 1; k <= 5000; ++k) {
            VertexSet s = colex_unrank(r, k);
            CHECK(is_strictly_increasing(s));
            REQUIRE(colex_rank(s) == k);
        }
    }
}

TEST_CASE("rank orders agree with colex_compare") {
    std::vector<VertexSet> all = all_subsets(7, 3);
    for (std::size_t i = 0; i < all.size(); ++i)
        for (std::size_t j = 0; j < all.size(); ++j) {
            auto by_rank = colex_rank(all[i]) <=> colex_rank(all[j]);
            CHECK(colex_compare(all[i], all[j]) == by_rank);
        }
}
