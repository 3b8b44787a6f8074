#pragma once

/**
 * @file spectrum.hpp
 * @brief Exact probability distributions over a particle's m-values.
 */

#include "clebsch/binomial.hpp"
#include "clebsch/rational.hpp"
#include "clebsch/spin.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <vector>

namespace clebsch {

/// Exact binomial pmf C(l, k) p^k (1-p)^(l-k); zero outside 0..l.
/// Requires 0 <= p <= 1.
inline rational binomial_pmf(int l, const rational& p, std::int64_t k) {
    if (l < 0) throw std::invalid_argument("binomial_pmf: negative l");
    if (p.is_negative() || p > rational(1))
        throw std::invalid_argument("binomial_pmf: p outside [0, 1]");
    if (k < 0 || k > l) return rational(0);
    return rational(binomial(l, k)) * pow(p, static_cast<unsigned>(k)) *
           pow(rational(1) - p, static_cast<unsigned>(l - k));
}

/// Exact convolution of B(l1, p) and B(l2, p); index k runs 0..l1+l2.
/// Equals binomial_pmf(l1 + l2, p, k) for every k.
inline std::vector<rational> convolve(int l1, int l2, const rational& p) {
    if (l1 < 0 || l2 < 0) throw std::invalid_argument("convolve: negative l");
    std::vector<rational> result(static_cast<std::size_t>(l1) + l2 + 1);
    for (int k = 0; k <= l1 + l2; ++k) {
        rational sum;
        for (int k1 = 0; k1 <= l1; ++k1)
            sum += binomial_pmf(l1, p, k1) * binomial_pmf(l2, p, std::int64_t(k) - k1);
        result[k] = sum;
    }
    return result;
}

/// Finite pmf over the m_twice values of a carrier spin. Probabilities are
/// exact rationals, keys are exactly the carrier's m-values (explicit zeros
/// included), and the total mass is exactly 1.
class spectrum_distribution {
public:
    using prob_map = std::map<int, rational, std::greater<int>>;

    /// Unspecified m-values get probability zero. Throws on keys outside the
    /// carrier's m-values, negative masses, or total mass != 1.
    spectrum_distribution(int l_twice, const prob_map& probs) : carrier_(l_twice) {
        for (int m : m_values(carrier_)) probs_.emplace(m, rational(0));
        rational total;
        for (const auto& [m, prob] : probs) {
            auto it = probs_.find(m);
            if (it == probs_.end())
                throw std::invalid_argument("spectrum_distribution: m_twice=" + std::to_string(m) +
                                            " is not an m-value of the carrier spin");
            if (prob.is_negative())
                throw std::invalid_argument("spectrum_distribution: negative probability");
            it->second = prob;
            total += prob;
        }
        if (total != rational(1))
            throw std::invalid_argument("spectrum_distribution: total mass is " +
                                        total.to_string() + ", expected 1");
    }

    spin carrier() const { return carrier_; }
    int l_twice() const { return carrier_.twice; }
    const prob_map& probs() const { return probs_; }

    const rational& prob(int m_twice) const {
        auto it = probs_.find(m_twice);
        if (it == probs_.end())
            throw std::invalid_argument("spectrum_distribution: m_twice=" +
                                        std::to_string(m_twice) + " outside the carrier spectrum");
        return it->second;
    }

    friend bool operator==(const spectrum_distribution& a, const spectrum_distribution& b) {
        return a.carrier_ == b.carrier_ && a.probs_ == b.probs_;
    }

private:
    spin carrier_;
    prob_map probs_;
};

/// Spectrum induced by M = l/2 - K with K ~ B(l, p):
/// probs[m_twice] = binomial_pmf(l, p, (l_twice - m_twice) / 2).
inline spectrum_distribution spectrum_from_binomial(int l_twice, const rational& p) {
    spectrum_distribution::prob_map probs;
    for (int m : m_values(spin(l_twice)))
        probs.emplace(m, binomial_pmf(l_twice, p, (std::int64_t(l_twice) - m) / 2));
    return spectrum_distribution(l_twice, probs);
}

/// Equal mass 1/(l_twice + 1) on every m-value.
inline spectrum_distribution uniform_spectrum(int l_twice) {
    spectrum_distribution::prob_map probs;
    rational mass(1, std::int64_t(l_twice) + 1);
    for (int m : m_values(spin(l_twice))) probs.emplace(m, mass);
    return spectrum_distribution(l_twice, probs);
}

}  // namespace clebsch
