#pragma once

/**
 * @file stretched.hpp
 * @brief Closed-form squared CG coefficients for the stretched multiplet
 *        J = j1 + j2, as a hypergeometric ratio of binomials.
 */

#include "clebsch/binomial.hpp"
#include "clebsch/errors.hpp"
#include "clebsch/ladder.hpp"
#include "clebsch/rational.hpp"
#include "clebsch/spin.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace clebsch {

/// Squared amplitude <m1 = l1/2 - k1, m2 = l2/2 - k2 | J = l/2, M = l/2 - k>
/// with l = l1 + l2 and k = k1 + k2:
///
///     C(l1, k1) * C(l2, k2) / C(l, k)
///
/// l1, l2 are twice-spins; out-of-range k1 or k2 yields 0 (pmf convention).
inline rational stretched_cg_squared(int l1, std::int64_t k1, int l2, std::int64_t k2) {
    if (l1 < 0 || l2 < 0) throw std::invalid_argument("stretched_cg_squared: negative l");
    bigint numerator = binomial(l1, k1) * binomial(l2, k2);
    if (numerator == 0) return rational(0);
    return rational(numerator, binomial(std::int64_t(l1) + l2, k1 + k2));
}

/// The stretched state |J = (l1+l2)/2, M = J - k> with all-positive
/// amplitudes sqrt(C(l1,k1) C(l2,k2) / C(l,k)) over the splits k1 + k2 = k.
inline coupled_state_vector stretched_state(int l1, int l2, int k) {
    if (l1 < 0 || l2 < 0) throw std::invalid_argument("stretched_state: negative l");
    if (k < 0 || k > l1 + l2)
        throw range_error("stretched_state: k=" + std::to_string(k) + " outside 0.." +
                          std::to_string(l1 + l2));
    coupled_state_vector state;
    state.J_twice = l1 + l2;
    state.M_twice = l1 + l2 - 2 * k;
    spin j1(l1), j2(l2);
    for (int m1 : cg_table::m1_range(j1, j2, state.M_twice)) {
        int k1 = (l1 - m1) / 2;
        int k2 = k - k1;
        state.amplitudes.emplace(
            m1, signed_sqrt_rational::positive_sqrt(stretched_cg_squared(l1, k1, l2, k2)));
    }
    return state;
}

struct stretched_comparison {
    int M_twice;
    int m1_twice;
    rational ladder_squared;
    rational closed_form_squared;
    bool equal;
};

struct stretched_agreement_report {
    spin j1;
    spin j2;
    std::vector<stretched_comparison> comparisons;
    bool pass = true;
};

/// Builds the J = j1 + j2 multiplet with the ladder engine and compares every
/// squared amplitude against the closed form, exactly. Failures are report
/// content, not errors.
inline stretched_agreement_report verify_stretched_agreement(spin j1, spin j2) {
    stretched_agreement_report report{j1, j2, {}, true};
    int J = j1.twice + j2.twice;
    coupled_state_vector state = highest_weight(j1, j2, J);
    for (;;) {
        int k = (J - state.M_twice) / 2;
        for (const auto& [m1, amp] : state.amplitudes) {
            int k1 = (j1.twice - m1) / 2;
            rational ladder_sq = amp.squared();
            rational closed_sq = stretched_cg_squared(j1.twice, k1, j2.twice, k - k1);
            bool equal = ladder_sq == closed_sq;
            report.comparisons.push_back({state.M_twice, m1, ladder_sq, closed_sq, equal});
            report.pass = report.pass && equal;
        }
        if (state.M_twice == -J) break;
        state = lower(state, j1, j2);
    }
    return report;
}

}  // namespace clebsch
