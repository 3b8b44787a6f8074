#include "clebsch/binomial.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <vector>

using clebsch::bigint;
using clebsch::binomial;

TEST_CASE("binomial examples") {
    CHECK(binomial(4, 2) == 6);
    CHECK(binomial(0, 0) == 1);
    CHECK(binomial(5, 7) == 0);
    CHECK(binomial(5, -1) == 0);
    CHECK(binomial(64, 32) == bigint("1832624140942590534"));
    CHECK_THROWS_AS(binomial(-1, 0), std::invalid_argument);
}

// Independent oracle: Pascal's rule, row by row.
TEST_CASE("binomial agrees with Pascal recursion up to n = 64") {
    std::vector<bigint> row{1};
    for (int n = 0; n <= 64; ++n) {
        for (int k = 0; k <= n; ++k) CHECK(binomial(n, k) == row[k]);
        CHECK(binomial(n, n + 1) == 0);
        std::vector<bigint> next(row.size() + 1, 1);
        for (std::size_t k = 1; k < row.size(); ++k) next[k] = row[k - 1] + row[k];
        row = std::move(next);
    }
}

TEST_CASE("Vandermonde identity up to l1, l2 = 16") {
    for (int l1 = 0; l1 <= 16; ++l1)
        for (int l2 = 0; l2 <= 16; ++l2)
            for (int k = 0; k <= l1 + l2; ++k) {
                bigint sum = 0;
                for (int k1 = 0; k1 <= k; ++k1) sum += binomial(l1, k1) * binomial(l2, k - k1);
                CHECK(sum == binomial(l1 + l2, k));
            }
}
