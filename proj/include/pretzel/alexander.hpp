#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "pretzel/diagram.hpp"
#include "pretzel/rational.hpp"

namespace pretzel {

// Thrown when a diagram exceeds the configured oracle size; callers that
// sweep grids catch this and skip the oracle route.
struct OracleCapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Alexander polynomial in its symmetric normalization: palindromic
// coefficients c_{-k},...,c_{k} with value 1 at t = 1.
struct SymmetricAlexander {
  std::vector<BigInt> coeffs;  // ascending exponent, starting at min_exp
  int min_exp = 0;

  int max_exp() const { return min_exp + static_cast<int>(coeffs.size()) - 1; }
  std::string to_string() const;
};

inline constexpr int kDefaultOracleCap = 20;

// Wirtinger presentation of the knot group read off the diagram, one
// generator column and one relator row deleted, determinant taken by
// fraction-free elimination over integer polynomials, then normalized.
SymmetricAlexander alexander_poly(const Diagram& d, int crossing_cap = kDefaultOracleCap);

// Second Conway coefficient from the symmetric Alexander polynomial
// (half its second derivative at 1).
long long a2_alexander(const Diagram& d, int crossing_cap = kDefaultOracleCap);

long long a2_from_alexander(const SymmetricAlexander& poly);

}  // namespace pretzel
