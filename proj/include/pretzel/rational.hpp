#pragma once

#include <cstdint>
#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

namespace pretzel {

// Exact arithmetic for the 1/4 and 1/8 coefficients that appear in every
// closed form.  Values are tiny; arbitrary precision just removes the
// overflow question entirely.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline bool is_integer(const Rational& r) { return denominator(r) == 1; }

// Collapse a rational that must be integral.  Throwing here (rather than
// rounding) is the contract: a non-integral result is a bug, not an input
// problem.
inline long long require_integer(const Rational& r, const char* what) {
  if (!is_integer(r)) throw std::logic_error(std::string("non-integral value in ") + what);
  return numerator(r).convert_to<long long>();
}

}  // namespace pretzel
