#pragma once

/**
 * @file conditional.hpp
 * @brief Exact conditional joint distributions of two spin spectra given
 *        their total, and the cross-check against stretched CG squares.
 */

#include "clebsch/errors.hpp"
#include "clebsch/rational.hpp"
#include "clebsch/spectrum.hpp"
#include "clebsch/spin.hpp"
#include "clebsch/stretched.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace clebsch {

struct conditional_cell_key {
    int m1_twice;
    int m2_twice;

    // m1 desc; m2 is determined by the total but kept for reporting.
    friend bool operator<(const conditional_cell_key& a, const conditional_cell_key& b) {
        return a.m1_twice != b.m1_twice ? a.m1_twice > b.m1_twice : a.m2_twice > b.m2_twice;
    }
    friend bool operator==(const conditional_cell_key& a, const conditional_cell_key& b) {
        return a.m1_twice == b.m1_twice && a.m2_twice == b.m2_twice;
    }
};

/// One cross-check of a conditional probability against a CG square.
struct cg_square_comparison {
    conditional_cell_key cell;
    rational conditional_prob;
    rational cg_squared;
    bool equal;
};

struct conditional_report {
    int total_m_twice = 0;
    std::map<conditional_cell_key, rational> entries;  // sums to exactly 1
    std::vector<cg_square_comparison> cg_comparisons;  // filled by verifiers
};

/// P(M1 = m1, M2 = m2 | M1 + M2 = total) for every pair of spectrum m-values
/// with m1 + m2 = total, as exact rationals (zero-probability cells kept).
/// Throws conditioning_on_null when P(M1 + M2 = total) = 0.
inline conditional_report conditional_joint(const spectrum_distribution& d1,
                                            const spectrum_distribution& d2,
                                            int total_m_twice) {
    conditional_report report;
    report.total_m_twice = total_m_twice;

    rational event_prob;
    for (const auto& [m1, p1] : d1.probs()) {
        int m2 = total_m_twice - m1;
        if (!valid_m(d2.carrier(), m2)) continue;
        rational joint = p1 * d2.prob(m2);
        report.entries.emplace(conditional_cell_key{m1, m2}, joint);
        event_prob += joint;
    }
    if (report.entries.empty() || event_prob.is_zero())
        throw conditioning_on_null("conditional_joint: P(M1 + M2 = " +
                                   std::to_string(total_m_twice) + ") = 0");
    for (auto& [cell, prob] : report.entries) prob /= event_prob;
    return report;
}

struct conditional_agreement_report {
    spin j1;
    spin j2;
    rational p_first;
    rational p_second;
    int M_twice = 0;
    conditional_report conditional;     // at p_first
    bool matches_cg = true;             // every cell equals the stretched CG square
    bool p_independent = true;          // identical entries at p_second
};

/// Conditional joint of the two binomial spectra B(l1, p), B(l2, p) at the
/// given total M, compared cell by cell with the stretched closed form; then
/// recomputed at a second p value to witness that p cancels. Requires
/// 0 < p < 1; failures are report content.
inline conditional_agreement_report verify_conditional_agreement(spin j1, spin j2, const rational& p, int M_twice) {
    if (p <= rational(0) || p >= rational(1))
        throw std::invalid_argument("verify_conditional_agreement: p outside (0, 1)");
    conditional_agreement_report report;
    report.j1 = j1;
    report.j2 = j2;
    report.p_first = p;
    report.p_second = (p + rational(1)) / rational(2);  // distinct and inside (0, 1)
    report.M_twice = M_twice;

    report.conditional = conditional_joint(spectrum_from_binomial(j1.twice, p),
                                           spectrum_from_binomial(j2.twice, p), M_twice);
    for (const auto& [cell, prob] : report.conditional.entries) {
        int k1 = (j1.twice - cell.m1_twice) / 2;
        int k2 = (j2.twice - cell.m2_twice) / 2;
        rational cg_sq = stretched_cg_squared(j1.twice, k1, j2.twice, k2);
        bool equal = prob == cg_sq;
        report.conditional.cg_comparisons.push_back({cell, prob, cg_sq, equal});
        report.matches_cg = report.matches_cg && equal;
    }

    conditional_report second = conditional_joint(spectrum_from_binomial(j1.twice, report.p_second),
                                                  spectrum_from_binomial(j2.twice, report.p_second),
                                                  M_twice);
    report.p_independent = second.entries == report.conditional.entries;
    return report;
}

}  // namespace clebsch
