#pragma once

/**
 * @file float_oracle.hpp
 * @brief Independent floating-point route to squared CG coefficients.
 *
 * Builds the matrix of the total J^2 operator in the product basis, block by
 * block over fixed M (J_z is diagonal, so blocks decouple), and diagonalizes
 * each block with Eigen. Within a block the eigenvalues j(j+1) are distinct
 * and increase with J, so sorting them ascending identifies each eigenvector's
 * J. Squared eigenvector components are the squared CG coefficients; the
 * eigenvector phase is fixed by making the component at maximal m1 positive.
 *
 * This path shares no arithmetic with the exact ladder construction and is
 * the only place in the library (outside display code) where floating point
 * is used.
 */

#include "clebsch/cg_table.hpp"
#include "clebsch/spin.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <cstdlib>
#include <map>
#include <vector>

namespace clebsch {

/// (J_twice, M_twice, m1_twice) -> signed overlap <m1, m2 | J, M> computed in
/// floating point, phase-fixed per (J, M) as described above.
inline std::map<table_key, double> float_cg_overlaps(spin j1, spin j2) {
    std::map<table_key, double> overlaps;
    double pj1 = j1.twice / 2.0, pj2 = j2.twice / 2.0;
    double casimir1 = pj1 * (pj1 + 1.0), casimir2 = pj2 * (pj2 + 1.0);

    for (int M = j1.twice + j2.twice; M >= -(j1.twice + j2.twice); M -= 2) {
        std::vector<int> m1s = cg_table::m1_range(j1, j2, M);
        int dim = static_cast<int>(m1s.size());
        if (dim == 0) continue;

        Eigen::MatrixXd block(dim, dim);
        block.setZero();
        for (int a = 0; a < dim; ++a) {
            double pm1 = m1s[a] / 2.0;
            double pm2 = (M - m1s[a]) / 2.0;
            block(a, a) = casimir1 + casimir2 + 2.0 * pm1 * pm2;
            // J1^+ J2^-: |m1, m2> -> |m1 + 1, m2 - 1>, which is index a - 1
            // in the m1-descending ordering.
            if (a > 0 && m1s[a - 1] == m1s[a] + 2) {
                double up1 = (pj1 - pm1) * (pj1 + pm1 + 1.0);
                double down2 = (pj2 + pm2) * (pj2 - pm2 + 1.0);
                double element = std::sqrt(up1) * std::sqrt(down2);
                block(a - 1, a) += element;
                block(a, a - 1) += element;
            }
        }

        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(block);
        // Eigenvalues ascending <-> J ascending; the smallest J at this M is
        // max(|M|, |j1 - j2|).
        int J_min = std::max(std::abs(M), std::abs(j1.twice - j2.twice));
        for (int idx = 0; idx < dim; ++idx) {
            int J = J_min + 2 * idx;
            Eigen::VectorXd vec = solver.eigenvectors().col(idx);
            if (vec(0) < 0.0) vec = -vec;  // Condon-Shortley: maximal-m1 component positive
            for (int a = 0; a < dim; ++a) overlaps[{J, M, m1s[a]}] = vec(a);
        }
    }
    return overlaps;
}

/// Largest |exact squared amplitude - float squared overlap| over the table.
inline double max_squared_deviation(const cg_table& table) {
    std::map<table_key, double> overlaps = float_cg_overlaps(table.j1(), table.j2());
    double worst = 0.0;
    for (const auto& [key, amp] : table.entries()) {
        double overlap = overlaps.at(key);
        double deviation = std::abs(amp.squared().to_double() - overlap * overlap);
        worst = std::max(worst, deviation);
    }
    return worst;
}

}  // namespace clebsch
