#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "ramsey/bigcomb.hpp"

namespace ramsey {

// Exact fraction, always in lowest terms with positive denominator
// (maintained by cpp_rational). Comparisons against Natural are exact.
using ExactRational = boost::multiprecision::cpp_rational;

inline bool is_integer(const ExactRational& q) {
    return boost::multiprecision::denominator(q) == 1;
}

// "p/q", or just "p" when q divides p.
std::string to_fraction_string(const ExactRational& q);

// Fixed-point decimal with `places` digits after the point, rounded half away
// from zero, computed in exact integer arithmetic.
std::string to_decimal_string(const ExactRational& q, int places);

} // namespace ramsey
