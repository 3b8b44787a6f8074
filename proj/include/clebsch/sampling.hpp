#pragma once

/**
 * @file sampling.hpp
 * @brief Seeded Monte Carlo witness of the conditional distributions.
 *
 * Pairs (M1, M2) are drawn independently from the two spectra by inverse-CDF
 * lookup on a std::mt19937_64 stream and rejected unless M1 + M2 equals the
 * requested total, until n pairs are accepted. The inverse-CDF thresholds are
 * floor(cdf * 2^64) computed in exact integer arithmetic, so a draw r selects
 * the first category with r < threshold; identical (seed, inputs) give
 * bit-identical results on a given build.
 *
 * A sample budget may be partitioned across independently seeded streams
 * (sub-seeds derived from the master seed by splitmix64); streams are merged
 * in stream order, so the partitioned result is deterministic as well.
 */

#include "clebsch/conditional.hpp"
#include "clebsch/errors.hpp"
#include "clebsch/rational.hpp"
#include "clebsch/spectrum.hpp"

#include <cmath>
#include <cstdint>
#include <map>
#include <random>
#include <stdexcept>
#include <vector>

namespace clebsch {

namespace detail {

/// Inverse-CDF sampler over m_twice values with exact 64-bit thresholds.
/// Zero-probability categories are dropped, so every stored cumulative is
/// strictly below 1 and floor(cdf * 2^64) fits in 64 bits; the final
/// category needs no threshold (it catches everything else).
class spectrum_sampler {
public:
    explicit spectrum_sampler(const spectrum_distribution& d) {
        bigint common_den = 1;
        for (const auto& [m, prob] : d.probs()) common_den *= prob.denominator();
        bigint cum = 0;
        for (const auto& [m, prob] : d.probs()) {
            if (prob.is_zero()) continue;
            cum += prob.numerator() * (common_den / prob.denominator());
            values_.push_back(m);
            if (cum < common_den)
                thresholds_.push_back(((cum << 64) / common_den).convert_to<std::uint64_t>());
        }
    }

    int draw(std::mt19937_64& rng) const {
        std::uint64_t r = rng();
        for (std::size_t i = 0; i < thresholds_.size(); ++i)
            if (r < thresholds_[i]) return values_[i];
        return values_.back();
    }

private:
    std::vector<int> values_;        // positive-probability m values
    std::vector<std::uint64_t> thresholds_;  // one per value except the last
};

inline std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace detail

struct sample_cell {
    int m1_twice;
    int m2_twice;
    std::uint64_t count = 0;
    double frequency = 0.0;
    rational exact_prob;
    double abs_error = 0.0;  // |frequency - exact|
    double std_error = 0.0;  // sqrt(exact (1 - exact) / n)
};

struct sample_report {
    int total_m_twice = 0;
    std::uint64_t accepted = 0;   // equals the requested n
    std::uint64_t attempts = 0;   // total pairs drawn
    double acceptance_rate = 0.0;
    std::uint64_t seed = 0;
    unsigned streams = 1;
    std::vector<sample_cell> cells;  // m1 descending

    friend bool operator==(const sample_report& a, const sample_report& b) {
        if (a.total_m_twice != b.total_m_twice || a.accepted != b.accepted ||
            a.attempts != b.attempts || a.seed != b.seed || a.streams != b.streams ||
            a.cells.size() != b.cells.size())
            return false;
        for (std::size_t i = 0; i < a.cells.size(); ++i)
            if (a.cells[i].m1_twice != b.cells[i].m1_twice || a.cells[i].count != b.cells[i].count)
                return false;
        return true;
    }
};

/// Rejection-samples n accepted pairs with M1 + M2 = total. The conditioning
/// event must have positive probability and n must be at least 1. `streams`
/// partitions the budget across sub-seeded generators (deterministic merge).
inline sample_report sample_conditional(const spectrum_distribution& d1,
                                        const spectrum_distribution& d2,
                                        int total_m_twice, std::uint64_t n,
                                        std::uint64_t seed, unsigned streams = 1) {
    if (n == 0) throw std::invalid_argument("sample_conditional: n must be >= 1");
    if (streams == 0) throw std::invalid_argument("sample_conditional: streams must be >= 1");

    // Exact targets; also rejects a null conditioning event up front.
    conditional_report exact = conditional_joint(d1, d2, total_m_twice);

    detail::spectrum_sampler sampler1(d1);
    detail::spectrum_sampler sampler2(d2);

    std::map<conditional_cell_key, std::uint64_t> counts;
    for (const auto& [cell, prob] : exact.entries) counts.emplace(cell, 0);

    sample_report report;
    report.total_m_twice = total_m_twice;
    report.seed = seed;
    report.streams = streams;

    std::uint64_t seed_state = seed;
    for (unsigned s = 0; s < streams; ++s) {
        std::uint64_t stream_seed = streams == 1 ? seed : detail::splitmix64(seed_state);
        std::uint64_t budget = n / streams + (s < n % streams ? 1 : 0);
        std::mt19937_64 rng(stream_seed);
        std::uint64_t accepted = 0;
        while (accepted < budget) {
            int m1 = sampler1.draw(rng);
            int m2 = sampler2.draw(rng);
            ++report.attempts;
            if (m1 + m2 != total_m_twice) continue;
            ++accepted;
            ++counts.at({m1, m2});
        }
        report.accepted += accepted;
    }
    report.acceptance_rate = static_cast<double>(report.accepted) / report.attempts;

    for (const auto& [cell, prob] : exact.entries) {
        sample_cell out;
        out.m1_twice = cell.m1_twice;
        out.m2_twice = cell.m2_twice;
        out.count = counts.at(cell);
        out.frequency = static_cast<double>(out.count) / report.accepted;
        out.exact_prob = prob;
        double pe = prob.to_double();
        out.abs_error = std::abs(out.frequency - pe);
        out.std_error = std::sqrt(pe * (1.0 - pe) / static_cast<double>(report.accepted));
        report.cells.push_back(out);
    }
    return report;
}

}  // namespace clebsch
