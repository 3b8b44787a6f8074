#pragma once

/**
 * @file rational.hpp
 * @brief Arbitrary-precision rational numbers in canonical form.
 *
 * Every value is kept reduced to lowest terms with a strictly positive
 * denominator, so equality is structural and hashing/ordering need no
 * normalization pass. Zero is uniquely 0/1.
 */

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace clebsch {

using bigint = boost::multiprecision::cpp_int;

class rational {
public:
    rational() : num_(0), den_(1) {}
    rational(bigint n) : num_(std::move(n)), den_(1) {}  // NOLINT: implicit by design
    rational(std::int64_t n) : num_(n), den_(1) {}       // NOLINT
    rational(int n) : num_(n), den_(1) {}                // NOLINT

    rational(bigint n, bigint d) : num_(std::move(n)), den_(std::move(d)) {
        if (den_ == 0) throw std::domain_error("rational: zero denominator");
        canonicalize();
    }
    rational(std::int64_t n, std::int64_t d) : rational(bigint(n), bigint(d)) {}

    const bigint& numerator() const { return num_; }
    const bigint& denominator() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }
    bool is_negative() const { return num_ < 0; }

    // -1, 0 or +1.
    int sign() const { return num_ < 0 ? -1 : (num_ == 0 ? 0 : 1); }

    rational operator-() const { return rational(canonical_tag{}, -num_, den_); }

    friend rational operator+(const rational& a, const rational& b) {
        return rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend rational operator-(const rational& a, const rational& b) {
        return rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend rational operator*(const rational& a, const rational& b) {
        return rational(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend rational operator/(const rational& a, const rational& b) {
        if (b.num_ == 0) throw std::domain_error("rational: division by zero");
        return rational(a.num_ * b.den_, a.den_ * b.num_);
    }

    rational& operator+=(const rational& o) { return *this = *this + o; }
    rational& operator-=(const rational& o) { return *this = *this - o; }
    rational& operator*=(const rational& o) { return *this = *this * o; }
    rational& operator/=(const rational& o) { return *this = *this / o; }

    friend bool operator==(const rational& a, const rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const rational& a, const rational& b) { return !(a == b); }
    friend bool operator<(const rational& a, const rational& b) {
        return a.num_ * b.den_ < b.num_ * a.den_;
    }
    friend bool operator>(const rational& a, const rational& b) { return b < a; }
    friend bool operator<=(const rational& a, const rational& b) { return !(b < a); }
    friend bool operator>=(const rational& a, const rational& b) { return !(a < b); }

    // Display only; all decisions in the library are made exactly.
    double to_double() const {
        return num_.convert_to<double>() / den_.convert_to<double>();
    }

    // "2/3", "-5", "0".
    std::string to_string() const {
        std::string s = num_.str();
        if (den_ != 1) s += "/" + den_.str();
        return s;
    }

private:
    struct canonical_tag {};
    rational(canonical_tag, bigint n, bigint d) : num_(std::move(n)), den_(std::move(d)) {}

    void canonicalize() {
        if (num_ == 0) {
            den_ = 1;
            return;
        }
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        bigint g = boost::multiprecision::gcd(boost::multiprecision::abs(num_), den_);
        if (g != 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    bigint num_;  // carries the sign
    bigint den_;  // > 0
};

inline rational abs(const rational& r) { return r.is_negative() ? -r : r; }

inline rational pow(const rational& base, unsigned exp) {
    rational result(1);
    for (unsigned i = 0; i < exp; ++i) result *= base;
    return result;
}

// Floor of the integer square root; n must be nonnegative.
inline bigint isqrt(const bigint& n) {
    if (n < 0) throw std::invalid_argument("isqrt: negative argument");
    return boost::multiprecision::sqrt(n);
}

inline bool is_perfect_square(const bigint& n) {
    if (n < 0) return false;
    bigint s = boost::multiprecision::sqrt(n);
    return s * s == n;
}

/// Exact square root of a nonnegative rational, or nullopt when irrational.
/// Because r is in lowest terms, it suffices to test numerator and
/// denominator for perfect squares independently.
inline std::optional<rational> rational_sqrt(const rational& r) {
    if (r.is_negative()) throw std::invalid_argument("rational_sqrt: negative argument");
    bigint sn = isqrt(r.numerator());
    if (sn * sn != r.numerator()) return std::nullopt;
    bigint sd = isqrt(r.denominator());
    if (sd * sd != r.denominator()) return std::nullopt;
    return rational(sn, sd);
}

/// Parses "n", "-n" or "n/d" with optional sign. Throws std::invalid_argument
/// on malformed input or a zero denominator.
inline rational parse_rational(std::string_view text) {
    auto parse_int = [](std::string_view s) -> bigint {
        if (s.empty()) throw std::invalid_argument("parse_rational: empty integer");
        bool negative = s[0] == '-';
        std::string_view digits = (s[0] == '+' || s[0] == '-') ? s.substr(1) : s;
        if (digits.empty()) throw std::invalid_argument("parse_rational: lone sign");
        for (char c : digits)
            if (c < '0' || c > '9')
                throw std::invalid_argument("parse_rational: bad digit in '" + std::string(s) + "'");
        bigint value{std::string(digits)};
        return negative ? -value : value;
    };
    std::size_t slash = text.find('/');
    if (slash == std::string_view::npos) return rational(parse_int(text));
    bigint den = parse_int(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("parse_rational: zero denominator");
    return rational(parse_int(text.substr(0, slash)), den);
}

}  // namespace clebsch
