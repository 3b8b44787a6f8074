#pragma once

/// Exact binomial coefficients over arbitrary-precision integers.

#include "clebsch/rational.hpp"

#include <cstdint>
#include <stdexcept>

namespace clebsch {

/// C(n, k) for n >= 0, with the pmf convention C(n, k) = 0 for k < 0 or
/// k > n. The running product is divisible by i at every step, so the
/// division is exact.
inline bigint binomial(std::int64_t n, std::int64_t k) {
    if (n < 0) throw std::invalid_argument("binomial: negative n");
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    bigint result = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        result *= n - k + i;
        result /= i;
    }
    return result;
}

}  // namespace clebsch
