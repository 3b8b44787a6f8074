#include "clebsch/rational.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using clebsch::bigint;
using clebsch::rational;
using clebsch::rational_sqrt;

TEST_CASE("rational canonical form") {
    CHECK(rational(2, 4) == rational(1, 2));
    CHECK(rational(-2, 4) == rational(-1, 2));
    CHECK(rational(2, -4) == rational(-1, 2));
    CHECK(rational(-2, -4) == rational(1, 2));
    CHECK(rational(0, 7) == rational(0));
    CHECK(rational(0, -7).denominator() == 1);
    CHECK(rational(6, 3).is_integer());
    CHECK_THROWS_AS(rational(1, 0), std::domain_error);
}

TEST_CASE("rational arithmetic") {
    CHECK(rational(1, 2) + rational(1, 3) == rational(5, 6));
    CHECK(rational(1, 2) - rational(1, 2) == rational(0));
    CHECK(rational(2, 3) * rational(3, 4) == rational(1, 2));
    CHECK(rational(1, 2) / rational(3, 2) == rational(1, 3));
    CHECK(-rational(1, 2) == rational(-1, 2));
    CHECK_THROWS_AS(rational(1) / rational(0), std::domain_error);
    CHECK(rational(1, 3) < rational(1, 2));
    CHECK(rational(-1, 2) < rational(-1, 3));
    CHECK(clebsch::pow(rational(2, 3), 3) == rational(8, 27));
    CHECK(clebsch::pow(rational(2, 3), 0) == rational(1));
}

TEST_CASE("rational arithmetic properties against int64 ground truth") {
    std::mt19937_64 rng(20240811);
    std::uniform_int_distribution<std::int64_t> num(-50, 50);
    std::uniform_int_distribution<std::int64_t> den(1, 50);
    for (int i = 0; i < 2000; ++i) {
        rational a(num(rng), den(rng)), b(num(rng), den(rng)), c(num(rng), den(rng));
        CHECK((a + b) - b == a);
        CHECK(a + b == b + a);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * (b + c) == a * b + a * c);
        if (!b.is_zero()) CHECK((a / b) * b == a);
        // canonical form invariants
        rational s = a * b + c;
        CHECK(s.denominator() > 0);
        CHECK(boost::multiprecision::gcd(boost::multiprecision::abs(s.numerator()),
                                         s.denominator()) == 1);
    }
}

TEST_CASE("rational_sqrt examples") {
    CHECK(rational_sqrt(rational(4, 9)) == rational(2, 3));
    CHECK_FALSE(rational_sqrt(rational(2)).has_value());
    CHECK(rational_sqrt(rational(0)) == rational(0));
    CHECK_FALSE(rational_sqrt(rational(1, 2)).has_value());
    CHECK(rational_sqrt(rational(1)) == rational(1));
    CHECK_THROWS_AS(rational_sqrt(rational(-1, 4)), std::invalid_argument);
}

TEST_CASE("rational_sqrt properties") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<std::int64_t> num(0, 300);
    std::uniform_int_distribution<std::int64_t> den(1, 300);
    for (int i = 0; i < 2000; ++i) {
        rational r(num(rng), den(rng));
        auto root = rational_sqrt(r);
        if (root) {
            CHECK(*root * *root == r);
            CHECK_FALSE(root->is_negative());
        }
        // a perfect square always has a root
        auto square_root = rational_sqrt(r * r);
        REQUIRE(square_root.has_value());
        CHECK(*square_root == clebsch::abs(r));
    }
    // product of perfect squares
    for (int i = 0; i < 500; ++i) {
        rational r(num(rng), den(rng)), s(num(rng), den(rng));
        auto root = rational_sqrt(r * r * s * s);
        REQUIRE(root.has_value());
        CHECK(*root == clebsch::abs(r) * clebsch::abs(s));
    }
}

TEST_CASE("parse_rational") {
    CHECK(clebsch::parse_rational("3/8") == rational(3, 8));
    CHECK(clebsch::parse_rational("-2") == rational(-2));
    CHECK(clebsch::parse_rational("+4/6") == rational(2, 3));
    CHECK(clebsch::parse_rational("0") == rational(0));
    CHECK_THROWS_AS(clebsch::parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(clebsch::parse_rational("a/b"), std::invalid_argument);
    CHECK_THROWS_AS(clebsch::parse_rational(""), std::invalid_argument);
    CHECK_THROWS_AS(clebsch::parse_rational("1.5"), std::invalid_argument);
}

TEST_CASE("rational to_string and to_double") {
    CHECK(rational(2, 3).to_string() == "2/3");
    CHECK(rational(-5).to_string() == "-5");
    CHECK(rational(0).to_string() == "0");
    CHECK(rational(1, 2).to_double() == 0.5);
}
