#pragma once

/**
 * @file ladder.hpp
 * @brief Exact CG table construction by ladder operators.
 *
 * For each allowed J the highest-weight state |J, J> is built from the
 * condition that the total raising operator annihilates it, with the
 * Condon-Shortley convention (amplitude at maximal m1 strictly positive).
 * The rest of the multiplet follows by repeated application of the total
 * lowering operator. Every amplitude stays a single signed sqrt-rational
 * throughout, so all comparisons downstream are exact.
 */

#include "clebsch/cg_table.hpp"
#include "clebsch/errors.hpp"
#include "clebsch/rational.hpp"
#include "clebsch/signed_sqrt_rational.hpp"
#include "clebsch/spin.hpp"

#include <functional>
#include <map>
#include <string>
#include <utility>

namespace clebsch {

enum class ladder_direction { raise, lower };

/// The radicand (l -+ m)(l +- m + 1) of the one-particle ladder factor, as an
/// exact rational evaluated from twice-values: for lowering this is
/// ((l+m)/2) * ((l-m)/2 + 1). Requires |m| <= l and matching parity.
inline rational ladder_radicand(int l_twice, int m_twice, ladder_direction direction) {
    if ((l_twice - m_twice) % 2 != 0)
        throw std::invalid_argument("ladder_radicand: parity mismatch between l and m");
    if (m_twice < -l_twice || m_twice > l_twice)
        throw std::invalid_argument("ladder_radicand: |m| exceeds l");
    int towards = direction == ladder_direction::lower ? (l_twice + m_twice) / 2
                                                       : (l_twice - m_twice) / 2;
    int away = direction == ladder_direction::lower ? (l_twice - m_twice) / 2 + 1
                                                    : (l_twice + m_twice) / 2 + 1;
    return rational(std::int64_t(towards) * away);
}

/// One coupled state |J, M> expanded over product kets |m1, m2 = M - m1>,
/// with an explicit amplitude (possibly zero) for every valid m1.
struct coupled_state_vector {
    int J_twice = 0;
    int M_twice = 0;
    std::map<int, signed_sqrt_rational, std::greater<int>> amplitudes;  // m1_twice -> amplitude
};

namespace detail {

/// Image of a state under the total ladder operator L1^dir + L2^dir, as raw
/// amplitudes on the target M level (not renormalized). Contributions landing
/// on the same product ket are merged exactly.
inline coupled_state_vector apply_total_ladder(const coupled_state_vector& state,
                                               spin j1, spin j2,
                                               ladder_direction direction) {
    int step = direction == ladder_direction::lower ? -2 : 2;
    coupled_state_vector image;
    image.J_twice = state.J_twice;
    image.M_twice = state.M_twice + step;
    for (int m1 : cg_table::m1_range(j1, j2, image.M_twice))
        image.amplitudes.emplace(m1, signed_sqrt_rational::zero());

    for (const auto& [m1, amp] : state.amplitudes) {
        if (amp.is_zero()) continue;
        int m2 = state.M_twice - m1;
        // Act on particle 1: |m1, m2> -> |m1 + step, m2>.
        if (valid_m(j1, m1 + step)) {
            auto factor = signed_sqrt_rational::positive_sqrt(ladder_radicand(j1.twice, m1, direction));
            auto it = image.amplitudes.find(m1 + step);
            it->second = it->second + amp * factor;
        }
        // Act on particle 2: |m1, m2> -> |m1, m2 + step>.
        if (valid_m(j2, m2 + step)) {
            auto factor = signed_sqrt_rational::positive_sqrt(ladder_radicand(j2.twice, m2, direction));
            auto it = image.amplitudes.find(m1);
            it->second = it->second + amp * factor;
        }
    }
    return image;
}

}  // namespace detail

/// Normalized highest-weight state |J, M = J>. Solved from the two-term
/// recurrence expressing that every raised product ket's amplitude vanishes:
///
///   c(m1) * sqrt((j1 - m1)(j1 + m1 + 1)) + c(m1 + 1) * sqrt((j2 - m2)(j2 + m2 + 1)) = 0
///
/// with m2 = J - m1 - 1. The chain has no additions, so every amplitude is a
/// single signed sqrt-rational by construction.
inline coupled_state_vector highest_weight(spin j1, spin j2, int J_twice) {
    if (!valid_coupled_ket(j1, j2, {J_twice, J_twice}))
        throw range_error("highest_weight: J_twice=" + std::to_string(J_twice) +
                          " outside the allowed coupling range");

    coupled_state_vector state;
    state.J_twice = J_twice;
    state.M_twice = J_twice;

    // Unnormalized chain, seeded +1 at maximal m1 (Condon-Shortley sign).
    std::map<int, signed_sqrt_rational, std::greater<int>> chain;
    int m1_max = std::min(j1.twice, J_twice + j2.twice);
    int m1_min = std::max(-j1.twice, J_twice - j2.twice);
    chain.emplace(m1_max, signed_sqrt_rational(1, rational(1)));
    for (int m1 = m1_max; m1 > m1_min; m1 -= 2) {
        // The raised ket |m1, J - m1 + 2> receives contributions from
        // (m1 - 2, raised on particle 1) and (m1, raised on particle 2);
        // their sum must vanish.
        rational raise1 = ladder_radicand(j1.twice, m1 - 2, ladder_direction::raise);
        rational raise2 = ladder_radicand(j2.twice, J_twice - m1, ladder_direction::raise);
        auto ratio = signed_sqrt_rational(-1, raise2 / raise1);
        chain.emplace(m1 - 2, chain.at(m1) * ratio);
    }

    rational norm;
    for (const auto& [m1, amp] : chain) norm += amp.squared();
    auto inv_norm = signed_sqrt_rational::positive_sqrt(rational(1) / norm);
    for (const auto& [m1, amp] : chain) state.amplitudes.emplace(m1, amp * inv_norm);
    return state;
}

/// Applies the total lowering operator L1^- + L2^- and divides by the total-J
/// ladder factor sqrt((J + M)(J - M + 1)), all exactly. The result is the
/// normalized state at M - 2 (twice-units).
inline coupled_state_vector lower(const coupled_state_vector& state, spin j1, spin j2) {
    if (state.M_twice <= -state.J_twice)
        throw range_error("lower: already at M = -J");
    coupled_state_vector next = detail::apply_total_ladder(state, j1, j2, ladder_direction::lower);
    rational total = ladder_radicand(state.J_twice, state.M_twice, ladder_direction::lower);
    auto inv = signed_sqrt_rational::positive_sqrt(rational(1) / total);
    for (auto& [m1, amp] : next.amplitudes) amp = amp * inv;
    return next;
}

/// True when the total raising operator maps the state to the exact zero
/// vector, i.e. the state is a highest-weight state. Non-mergeable
/// contributions propagate as merge_error (an internal-algebra bug signal).
inline bool raising_annihilates(const coupled_state_vector& state, spin j1, spin j2) {
    if (state.M_twice >= j1.twice + j2.twice) return true;  // no target level exists
    coupled_state_vector image = detail::apply_total_ladder(state, j1, j2, ladder_direction::raise);
    for (const auto& [m1, amp] : image.amplitudes)
        if (!amp.is_zero()) return false;
    return true;
}

/// Full exact table: highest-weight construction plus lowering for every
/// allowed J, J descending and M descending within J.
inline cg_table build_cg_table(spin j1, spin j2) {
    cg_table::entry_map entries;
    for (int J : allowed_J_range(j1, j2)) {
        coupled_state_vector state = highest_weight(j1, j2, J);
        for (;;) {
            for (const auto& [m1, amp] : state.amplitudes)
                entries.emplace(table_key{J, state.M_twice, m1}, amp);
            if (state.M_twice == -J) break;
            state = lower(state, j1, j2);
        }
    }
    return cg_table(j1, j2, std::move(entries));
}

}  // namespace clebsch
