#include "clebsch/signed_sqrt_rational.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using clebsch::merge_error;
using clebsch::rational;
using clebsch::signed_sqrt_rational;
using clebsch::ssr_sum;

namespace {
signed_sqrt_rational ssr(int sign, std::int64_t num, std::int64_t den) {
    return {sign, rational(num, den)};
}
}  // namespace

TEST_CASE("construction invariants") {
    CHECK(signed_sqrt_rational().is_zero());
    CHECK(signed_sqrt_rational(1, rational(0)).sign() == 0);  // zero radicand forces sign 0
    CHECK_THROWS_AS(signed_sqrt_rational(0, rational(1, 2)), std::invalid_argument);
    CHECK_THROWS_AS(signed_sqrt_rational(2, rational(1)), std::invalid_argument);
    CHECK_THROWS_AS(signed_sqrt_rational(1, rational(-1, 2)), std::invalid_argument);
    CHECK(signed_sqrt_rational::positive_sqrt(rational(0)).is_zero());
}

TEST_CASE("multiplication examples") {
    CHECK(ssr(1, 1, 2) * ssr(1, 1, 2) == ssr(1, 1, 4));
    CHECK(ssr(-1, 2, 3) * ssr(1, 3, 2) == ssr(-1, 1, 1));
    CHECK((ssr(-1, 7, 5) * signed_sqrt_rational::zero()).is_zero());
}

TEST_CASE("merge-rule addition examples") {
    CHECK(ssr(1, 1, 6) + ssr(1, 1, 6) == ssr(1, 2, 3));
    CHECK((ssr(1, 1, 2) + ssr(-1, 1, 2)).is_zero());
    CHECK_THROWS_AS(ssr(1, 2, 1) + ssr(1, 3, 1), merge_error);
    // mixed radicands in the same square-free class
    CHECK(ssr(1, 1, 6) + ssr(1, 2, 3) == ssr(1, 3, 2));   // sqrt(1/6) + 2*sqrt(1/6)
    CHECK(ssr(1, 8, 1) + ssr(-1, 2, 1) == ssr(1, 2, 1));  // 2*sqrt2 - sqrt2
}

TEST_CASE("squared magnitude") {
    CHECK(ssr(-1, 1, 3).squared() == rational(1, 3));
    CHECK(signed_sqrt_rational::zero().squared() == rational(0));
    CHECK(ssr(1, 2, 3).squared() == rational(2, 3));
}

TEST_CASE("algebraic properties on random mergeable values") {
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<std::int64_t> num(1, 40);
    std::uniform_int_distribution<std::int64_t> den(1, 40);
    std::uniform_int_distribution<int> sign(0, 1);
    std::uniform_int_distribution<std::int64_t> scale(0, 12);

    for (int i = 0; i < 2000; ++i) {
        rational base(num(rng), den(rng));
        // two members of the same square-free class: (u^2) * base and (v^2) * base
        std::int64_t u = scale(rng), v = scale(rng);
        signed_sqrt_rational a(u == 0 ? 0 : (sign(rng) ? 1 : -1), rational(u * u) * base);
        signed_sqrt_rational b(v == 0 ? 0 : (sign(rng) ? 1 : -1), rational(v * v) * base);

        CHECK(a + b == b + a);
        CHECK(a + signed_sqrt_rational::zero() == a);
        CHECK(signed_sqrt_rational::zero() + a == a);
        CHECK((a + (-a)).is_zero());

        signed_sqrt_rational c(sign(rng) ? 1 : -1, rational(num(rng), den(rng)));
        CHECK((a * c).squared() == a.squared() * c.squared());
        CHECK(a * c == c * a);
        // distributivity over a mergeable pair
        CHECK((a + b) * c == a * c + b * c);
    }
}

TEST_CASE("ssr_sum groups square-free classes") {
    ssr_sum sum;
    sum.add(ssr(1, 2, 1));    // sqrt 2
    sum.add(ssr(1, 3, 1));    // sqrt 3
    sum.add(ssr(-1, 8, 1));   // -2 sqrt 2
    sum.add(ssr(1, 2, 1));    // sqrt 2
    sum.add(ssr(-1, 27, 1));  // -3 sqrt 3
    sum.add(ssr(1, 12, 1));   // 2 sqrt 3
    CHECK(sum.is_zero());

    ssr_sum nonzero;
    nonzero.add(ssr(1, 2, 1));
    nonzero.add(ssr(-1, 3, 1));
    CHECK_FALSE(nonzero.is_zero());
    CHECK_THROWS_AS(nonzero.value(), merge_error);

    ssr_sum single;
    single.add(ssr(1, 1, 6));
    single.add(ssr(1, 1, 6));
    CHECK(single.value() == ssr(1, 2, 3));
}
