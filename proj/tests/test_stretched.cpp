#include "clebsch/stretched.hpp"

#include <catch2/catch_amalgamated.hpp>

using clebsch::rational;
using clebsch::signed_sqrt_rational;
using clebsch::spin;
using clebsch::stretched_cg_squared;
using clebsch::stretched_state;
using clebsch::verify_stretched_agreement;

TEST_CASE("stretched_cg_squared spot values") {
    CHECK(stretched_cg_squared(2, 1, 2, 1) == rational(2, 3));
    CHECK(stretched_cg_squared(2, 0, 2, 2) == rational(1, 6));
    CHECK(stretched_cg_squared(2, 2, 2, 0) == rational(1, 6));
    CHECK(stretched_cg_squared(5, 0, 7, 0) == rational(1));
    CHECK(stretched_cg_squared(3, 5, 2, 0) == rational(0));   // k1 out of range
    CHECK(stretched_cg_squared(3, -1, 2, 1) == rational(0));  // negative k1
    CHECK_THROWS_AS(stretched_cg_squared(-1, 0, 2, 0), std::invalid_argument);
}

TEST_CASE("stretched_state examples") {
    auto state = stretched_state(2, 2, 1);
    CHECK(state.J_twice == 4);
    CHECK(state.M_twice == 2);
    CHECK(state.amplitudes.at(2) == signed_sqrt_rational(1, rational(1, 2)));
    CHECK(state.amplitudes.at(0) == signed_sqrt_rational(1, rational(1, 2)));

    state = stretched_state(2, 2, 2);
    CHECK(state.amplitudes.at(2) == signed_sqrt_rational(1, rational(1, 6)));
    CHECK(state.amplitudes.at(0) == signed_sqrt_rational(1, rational(2, 3)));
    CHECK(state.amplitudes.at(-2) == signed_sqrt_rational(1, rational(1, 6)));

    state = stretched_state(2, 2, 4);
    REQUIRE(state.amplitudes.size() == 1);
    CHECK(state.M_twice == -4);
    CHECK(state.amplitudes.at(-2) == signed_sqrt_rational(1, rational(1)));

    CHECK_THROWS_AS(stretched_state(2, 2, 5), clebsch::range_error);
    CHECK_THROWS_AS(stretched_state(2, 2, -1), clebsch::range_error);
}

TEST_CASE("hypergeometric normalization up to l1, l2 = 16") {
    for (int l1 = 0; l1 <= 16; ++l1)
        for (int l2 = 0; l2 <= 16; ++l2)
            for (int k = 0; k <= l1 + l2; ++k) {
                rational total;
                for (int k1 = 0; k1 <= k; ++k1)
                    total += stretched_cg_squared(l1, k1, l2, k - k1);
                CHECK(total == rational(1));
            }
}

TEST_CASE("symmetry and reflection") {
    for (int l1 = 0; l1 <= 6; ++l1)
        for (int l2 = 0; l2 <= 6; ++l2)
            for (int k1 = 0; k1 <= l1; ++k1)
                for (int k2 = 0; k2 <= l2; ++k2) {
                    rational value = stretched_cg_squared(l1, k1, l2, k2);
                    CHECK(value == stretched_cg_squared(l2, k2, l1, k1));
                    CHECK(value == stretched_cg_squared(l1, l1 - k1, l2, l2 - k2));
                }
}

namespace {
// Enumeration oracle for the comparison count: one comparison per admissible
// split k1 + k2 = k with 0 <= k1 <= l1 and 0 <= k2 <= l2, over all k.
int expected_comparisons(int l1, int l2) {
    int count = 0;
    for (int k = 0; k <= l1 + l2; ++k)
        for (int k1 = 0; k1 <= l1; ++k1)
            if (k - k1 >= 0 && k - k1 <= l2) ++count;
    return count;
}
}  // namespace

TEST_CASE("verify_stretched_agreement reports") {
    auto report = verify_stretched_agreement(spin(2), spin(2));
    CHECK(report.pass);
    CHECK(report.comparisons.size() == 9);

    report = verify_stretched_agreement(spin(0), spin(0));
    CHECK(report.pass);
    CHECK(report.comparisons.size() == 1);

    report = verify_stretched_agreement(spin(3), spin(2));
    CHECK(report.pass);
    CHECK(report.comparisons.size() == 12);
    CHECK(report.comparisons.size() == std::size_t(expected_comparisons(3, 2)));
}

TEST_CASE("ladder equivalence for all pairs up to 12") {
    for (int a = 0; a <= 12; ++a)
        for (int b = 0; b <= 12; ++b) {
            auto report = verify_stretched_agreement(spin(a), spin(b));
            CHECK(report.pass);
            CHECK(report.comparisons.size() == std::size_t(expected_comparisons(a, b)));
        }
}

TEST_CASE("stretched_state equals the ladder multiplet including signs") {
    for (int a = 0; a <= 6; ++a)
        for (int b = 0; b <= 6; ++b) {
            auto state = clebsch::highest_weight(spin(a), spin(b), a + b);
            for (int k = 0;; ++k) {
                auto closed = stretched_state(a, b, k);
                REQUIRE(closed.M_twice == state.M_twice);
                REQUIRE(closed.amplitudes.size() == state.amplitudes.size());
                for (const auto& [m1, amp] : state.amplitudes)
                    CHECK(closed.amplitudes.at(m1) == amp);
                if (state.M_twice == -(a + b)) break;
                state = clebsch::lower(state, spin(a), spin(b));
            }
        }
}
