#pragma once

/**
 * @file cg_table.hpp
 * @brief Complete exact Clebsch-Gordan table for one (j1, j2) pair.
 *
 * Entries are keyed by (J_twice, M_twice, m1_twice); m2_twice is always
 * M_twice - m1_twice and is not stored. The table holds an entry for every
 * valid key, including coefficients that are exactly zero, and iterates in
 * the fixed order J descending, M descending, m1 descending.
 */

#include "clebsch/errors.hpp"
#include "clebsch/signed_sqrt_rational.hpp"
#include "clebsch/spin.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <tuple>
#include <vector>

namespace clebsch {

struct table_key {
    int J_twice;
    int M_twice;
    int m1_twice;

    // J desc, M desc, m1 desc.
    friend bool operator<(const table_key& a, const table_key& b) {
        return std::tie(a.J_twice, a.M_twice, a.m1_twice) >
               std::tie(b.J_twice, b.M_twice, b.m1_twice);
    }
    friend bool operator==(const table_key& a, const table_key& b) {
        return std::tie(a.J_twice, a.M_twice, a.m1_twice) ==
               std::tie(b.J_twice, b.M_twice, b.m1_twice);
    }
};

class cg_table {
public:
    using entry_map = std::map<table_key, signed_sqrt_rational>;

    /// Validates that the keys are exactly the valid (J, M, m1) index set for
    /// (j1, j2); the coefficient values themselves are the builder's business.
    cg_table(spin j1, spin j2, entry_map entries)
        : j1_(j1), j2_(j2), entries_(std::move(entries)) {
        entry_map::const_iterator it = entries_.begin();
        for (const table_key& key : valid_keys(j1_, j2_)) {
            if (it == entries_.end() || !(it->first == key))
                throw std::invalid_argument("cg_table: entry set does not match the valid index set");
            ++it;
        }
        if (it != entries_.end())
            throw std::invalid_argument("cg_table: entry set does not match the valid index set");
    }

    spin j1() const { return j1_; }
    spin j2() const { return j2_; }

    bool contains(int J_twice, int M_twice, int m1_twice) const {
        if (!valid_coupled_ket(j1_, j2_, {J_twice, M_twice})) return false;
        return valid_product_ket(j1_, j2_, {m1_twice, M_twice - m1_twice});
    }

    /// Coefficient <m1, m2 = M - m1 | J, M>; throws index_error for indices
    /// outside the valid set (range or parity violations).
    const signed_sqrt_rational& lookup(int J_twice, int M_twice, int m1_twice) const {
        if (!contains(J_twice, M_twice, m1_twice))
            throw index_error("cg_table: invalid index (J_twice=" + std::to_string(J_twice) +
                              ", M_twice=" + std::to_string(M_twice) +
                              ", m1_twice=" + std::to_string(m1_twice) + ")");
        return entries_.at({J_twice, M_twice, m1_twice});
    }

    const entry_map& entries() const { return entries_; }
    std::size_t coefficient_count() const { return entries_.size(); }

    /// m1_twice values valid at a given M level, descending.
    static std::vector<int> m1_range(spin j1, spin j2, int M_twice) {
        std::vector<int> result;
        int hi = std::min(j1.twice, M_twice + j2.twice);
        int lo = std::max(-j1.twice, M_twice - j2.twice);
        for (int m1 = hi; m1 >= lo; m1 -= 2) result.push_back(m1);
        return result;
    }

    /// All valid keys for (j1, j2) in table order.
    static std::vector<table_key> valid_keys(spin j1, spin j2) {
        std::vector<table_key> keys;
        for (int J : allowed_J_range(j1, j2))
            for (int M = J; M >= -J; M -= 2)
                for (int m1 : m1_range(j1, j2, M)) keys.push_back({J, M, m1});
        return keys;
    }

private:
    spin j1_;
    spin j2_;
    entry_map entries_;
};

}  // namespace clebsch
