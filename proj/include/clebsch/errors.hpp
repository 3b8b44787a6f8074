#pragma once

#include <stdexcept>
#include <string>

namespace clebsch {

// Adding two signed sqrt-rationals whose radicand ratio is not the square
// of a rational. Inside table construction this is unreachable; reaching it
// means an algebraic invariant was violated upstream.
class merge_error : public std::domain_error {
public:
    explicit merge_error(const std::string& what) : std::domain_error(what) {}
};

// Quantum number outside its admissible range (J outside the coupling
// range, lowering past M = -J, ...).
class range_error : public std::out_of_range {
public:
    explicit range_error(const std::string& what) : std::out_of_range(what) {}
};

// Table lookup with indices that violate range or parity constraints.
class index_error : public std::out_of_range {
public:
    explicit index_error(const std::string& what) : std::out_of_range(what) {}
};

// Conditioning on an event of probability zero.
class conditioning_on_null : public std::domain_error {
public:
    explicit conditioning_on_null(const std::string& what) : std::domain_error(what) {}
};

}  // namespace clebsch
