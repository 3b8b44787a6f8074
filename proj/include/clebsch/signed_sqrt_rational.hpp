#pragma once

/**
 * @file signed_sqrt_rational.hpp
 * @brief The coefficient domain of exact Clebsch-Gordan tables.
 *
 * A signed_sqrt_rational represents s * sqrt(r) with s in {-1, 0, +1} and r a
 * nonnegative rational, with s = 0 exactly when r = 0. Multiplication is
 * total. Addition is partial: a + b is defined only when one operand is zero
 * or the radicand ratio is the square of a rational, in which case
 *
 *     s_a*sqrt(r_a) + s_b*sqrt(r_b) = (s_a*(u/v) + s_b) * sqrt(r_b)
 *
 * with u/v = sqrt(r_a/r_b). Ladder-operator sums stay inside this domain
 * (sqrt(a) +- sqrt(b) = sqrt(c) with a, b, c rational forces a/b to be a
 * rational square), so a failed merge signals a bug upstream, and addition
 * throws merge_error rather than widening the domain.
 */

#include "clebsch/errors.hpp"
#include "clebsch/rational.hpp"

#include <cmath>
#include <string>
#include <vector>

namespace clebsch {

class signed_sqrt_rational {
public:
    /// Zero: sign 0, radicand 0.
    signed_sqrt_rational() : sign_(0), radicand_() {}

    signed_sqrt_rational(int sign, rational radicand)
        : sign_(sign), radicand_(std::move(radicand)) {
        if (radicand_.is_negative())
            throw std::invalid_argument("signed_sqrt_rational: negative radicand");
        if (sign_ < -1 || sign_ > 1)
            throw std::invalid_argument("signed_sqrt_rational: sign outside {-1,0,+1}");
        if (radicand_.is_zero())
            sign_ = 0;
        else if (sign_ == 0)
            throw std::invalid_argument("signed_sqrt_rational: zero sign with nonzero radicand");
    }

    static signed_sqrt_rational zero() { return {}; }

    /// +sqrt(r); r must be nonnegative.
    static signed_sqrt_rational positive_sqrt(rational r) {
        return {r.is_zero() ? 0 : 1, std::move(r)};
    }

    int sign() const { return sign_; }
    const rational& radicand() const { return radicand_; }
    bool is_zero() const { return sign_ == 0; }

    /// Squared magnitude; the sign is discarded.
    rational squared() const { return radicand_; }

    signed_sqrt_rational operator-() const {
        return signed_sqrt_rational(-sign_, radicand_);
    }

    friend signed_sqrt_rational operator*(const signed_sqrt_rational& a,
                                          const signed_sqrt_rational& b) {
        if (a.sign_ == 0 || b.sign_ == 0) return zero();
        return {a.sign_ * b.sign_, a.radicand_ * b.radicand_};
    }

    /// Merge-rule addition; throws merge_error when the radicand ratio is not
    /// a perfect rational square.
    friend signed_sqrt_rational operator+(const signed_sqrt_rational& a,
                                          const signed_sqrt_rational& b) {
        if (a.sign_ == 0) return b;
        if (b.sign_ == 0) return a;
        auto root = rational_sqrt(a.radicand_ / b.radicand_);
        if (!root)
            throw merge_error("signed_sqrt_rational: non-mergeable radicands " +
                              a.radicand_.to_string() + " and " + b.radicand_.to_string());
        rational coeff = rational(a.sign_) * *root + rational(b.sign_);
        return {coeff.sign(), coeff * coeff * b.radicand_};
    }

    friend signed_sqrt_rational operator-(const signed_sqrt_rational& a,
                                          const signed_sqrt_rational& b) {
        return a + (-b);
    }

    friend bool operator==(const signed_sqrt_rational& a, const signed_sqrt_rational& b) {
        return a.sign_ == b.sign_ && a.radicand_ == b.radicand_;
    }
    friend bool operator!=(const signed_sqrt_rational& a, const signed_sqrt_rational& b) {
        return !(a == b);
    }

    double to_double() const { return sign_ * std::sqrt(radicand_.to_double()); }

    /// "0", "+1", "-sqrt(1/3)", ...
    std::string to_string() const {
        if (sign_ == 0) return "0";
        std::string s = sign_ < 0 ? "-" : "+";
        if (radicand_ == rational(1)) return s + "1";
        return s + "sqrt(" + radicand_.to_string() + ")";
    }

private:
    int sign_;
    rational radicand_;
};

/// Exact sum of arbitrarily many signed sqrt-rationals, for zero tests.
///
/// Terms whose radicand ratio is a rational square share a class and merge;
/// distinct classes are linearly independent over the rationals, so the whole
/// sum is zero iff every class merged to zero. This makes orthogonality
/// checks total even when the terms are not globally mergeable.
class ssr_sum {
public:
    void add(const signed_sqrt_rational& term) {
        if (term.is_zero()) return;
        for (auto it = classes_.begin(); it != classes_.end(); ++it) {
            if (rational_sqrt(term.radicand() / it->radicand())) {
                signed_sqrt_rational merged = *it + term;
                if (merged.is_zero())
                    classes_.erase(it);  // keep only nonzero classes
                else
                    *it = merged;
                return;
            }
        }
        classes_.push_back(term);
    }

    bool is_zero() const { return classes_.empty(); }

    /// The summed value when all surviving terms fell into one class; throws
    /// merge_error if classes with distinct square-free parts remain.
    signed_sqrt_rational value() const {
        signed_sqrt_rational result;
        for (const auto& cls : classes_) result = result + cls;
        return result;
    }

private:
    std::vector<signed_sqrt_rational> classes_;  // pairwise non-mergeable, all nonzero
};

}  // namespace clebsch
