#pragma once

/**
 * @file spin.hpp
 * @brief Twice-value encoding of angular momentum quantum numbers.
 *
 * Every j and m is stored as the integer 2j or 2m, so half-integer spins are
 * exact and parity constraints (m_twice congruent to j_twice mod 2) are plain
 * integer arithmetic.
 */

#include <stdexcept>
#include <vector>

namespace clebsch {

struct spin {
    int twice = 0;  // 2j, nonnegative

    spin() = default;
    explicit spin(int twice_value) : twice(twice_value) {
        if (twice < 0) throw std::invalid_argument("spin: negative twice-value");
    }

    friend bool operator==(spin a, spin b) { return a.twice == b.twice; }
    friend bool operator!=(spin a, spin b) { return a.twice != b.twice; }
};

struct product_ket {
    int m1_twice = 0;
    int m2_twice = 0;
};

struct coupled_ket {
    int J_twice = 0;
    int M_twice = 0;
};

/// m_twice values of a single spin, descending: 2j, 2j-2, ..., -2j.
inline std::vector<int> m_values(spin s) {
    std::vector<int> result;
    result.reserve(s.twice + 1);
    for (int m = s.twice; m >= -s.twice; m -= 2) result.push_back(m);
    return result;
}

/// Total angular momenta reachable by coupling j1 and j2, as J_twice values
/// descending from j1.twice + j2.twice to |j1.twice - j2.twice| in steps of 2.
inline std::vector<int> allowed_J_range(spin j1, spin j2) {
    int lo = j1.twice > j2.twice ? j1.twice - j2.twice : j2.twice - j1.twice;
    int hi = j1.twice + j2.twice;
    std::vector<int> result;
    result.reserve((hi - lo) / 2 + 1);
    for (int J = hi; J >= lo; J -= 2) result.push_back(J);
    return result;
}

inline bool valid_m(spin s, int m_twice) {
    return m_twice >= -s.twice && m_twice <= s.twice && (s.twice - m_twice) % 2 == 0;
}

inline bool valid_product_ket(spin j1, spin j2, product_ket k) {
    return valid_m(j1, k.m1_twice) && valid_m(j2, k.m2_twice);
}

inline bool valid_coupled_ket(spin j1, spin j2, coupled_ket k) {
    int lo = j1.twice > j2.twice ? j1.twice - j2.twice : j2.twice - j1.twice;
    if (k.J_twice < lo || k.J_twice > j1.twice + j2.twice) return false;
    if ((j1.twice + j2.twice - k.J_twice) % 2 != 0) return false;
    return k.M_twice >= -k.J_twice && k.M_twice <= k.J_twice &&
           (k.J_twice - k.M_twice) % 2 == 0;
}

}  // namespace clebsch
