#pragma once

/**
 * @file table_checks.hpp
 * @brief Exact orthonormality sweeps over a CG table.
 *
 * Cross terms are summed with ssr_sum, so orthogonality is decided exactly
 * even when the products fall into different square-free classes.
 */

#include "clebsch/cg_table.hpp"
#include "clebsch/signed_sqrt_rational.hpp"
#include "clebsch/spin.hpp"

#include <vector>

namespace clebsch {

struct table_check_result {
    bool row_normalization = true;     // sum over m1 of c^2 = 1 for each (J, M)
    bool row_orthogonality = true;     // rows of different J at fixed M are orthogonal
    bool completeness = true;          // sum over J of c^2 = 1 for each (m1, m2)
    bool column_orthogonality = true;  // columns of different m1 at fixed M are orthogonal

    bool pass() const {
        return row_normalization && row_orthogonality && completeness && column_orthogonality;
    }
};

inline table_check_result check_table_invariants(const cg_table& table) {
    table_check_result result;
    spin j1 = table.j1(), j2 = table.j2();
    std::vector<int> Js = allowed_J_range(j1, j2);

    for (int M = j1.twice + j2.twice; M >= -(j1.twice + j2.twice); M -= 2) {
        std::vector<int> m1s = cg_table::m1_range(j1, j2, M);
        if (m1s.empty()) continue;
        std::vector<int> Js_here;
        for (int J : Js)
            if (M >= -J && M <= J) Js_here.push_back(J);

        for (std::size_t a = 0; a < Js_here.size(); ++a) {
            rational norm;
            for (int m1 : m1s) norm += table.lookup(Js_here[a], M, m1).squared();
            result.row_normalization = result.row_normalization && norm == rational(1);

            for (std::size_t b = a + 1; b < Js_here.size(); ++b) {
                ssr_sum dot;
                for (int m1 : m1s)
                    dot.add(table.lookup(Js_here[a], M, m1) * table.lookup(Js_here[b], M, m1));
                result.row_orthogonality = result.row_orthogonality && dot.is_zero();
            }
        }

        for (std::size_t a = 0; a < m1s.size(); ++a) {
            rational norm;
            for (int J : Js_here) norm += table.lookup(J, M, m1s[a]).squared();
            result.completeness = result.completeness && norm == rational(1);

            for (std::size_t b = a + 1; b < m1s.size(); ++b) {
                ssr_sum dot;
                for (int J : Js_here)
                    dot.add(table.lookup(J, M, m1s[a]) * table.lookup(J, M, m1s[b]));
                result.column_orthogonality = result.column_orthogonality && dot.is_zero();
            }
        }
    }
    return result;
}

}  // namespace clebsch
