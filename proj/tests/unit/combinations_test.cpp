#include "prismdom/combinations.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <vector>

using namespace prismdom;

TEST_SUITE("combinations")
{
    TEST_CASE("binomial table")
    {
        BinomialTable b(30, 7);
        CHECK(b(30, 7) == 2'035'800);
        CHECK(b(14, 3) == 364);
        CHECK(b(5, 0) == 1);
        CHECK(b(3, 5) == 0);
        BinomialTable big(200, 100);
        CHECK(big(200, 100) == BinomialTable::saturated);
    }

    TEST_CASE("colex order: ranks are consecutive and unrank inverts rank")
    {
        for (int n = 1; n <= 10; ++n) {
            for (int k = 1; k <= n; ++k) {
                BinomialTable b(n, k);
                std::vector<int> c(static_cast<std::size_t>(k));
                std::iota(c.begin(), c.end(), 0);
                std::uint64_t expected = 0;
                std::vector<int> back(static_cast<std::size_t>(k));
                do {
                    CHECK(std::is_sorted(c.begin(), c.end()));
                    CHECK(colex_rank(c, b) == expected);
                    colex_unrank(expected, back, b);
                    CHECK(back == c);
                    ++expected;
                } while (next_colex(c, n));
                CHECK(expected == b(n, k));
            }
        }
    }

    TEST_CASE("colex order compares largest elements first")
    {
        BinomialTable b(6, 2);
        const std::vector<int> a{0, 3}, c{1, 2};
        CHECK(colex_rank(c, b) < colex_rank(a, b));
    }
}
