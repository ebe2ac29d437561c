#pragma once

#include "pretzel/twist.hpp"

namespace pretzel {

// Closed-form a2 for the all-odd family (n odd, any signs):
//   (1/4) * sum_{i<j} p_i p_j + (1/8)(n-1).
// Cross-checked internally against the equivalent expanded form
//   (1/8){(sum p_i)^2 - sum p_i^2} + (1/8)(n-1).
// Throws std::domain_error when the parity hypotheses fail.
long long a2_odd_formula(const TwistVector& v);

// Closed-form a2 for the one-even-entry family; the even entry is rotated
// to the front (a cyclic symmetry of the pretzel) before evaluating:
//   n even: (1/8) sum p_i^2       + (1/4) p_1 sum_{i>=2} p_i - (1/8)(n-1)
//   n odd:  (1/8) sum_{i>=2} p_i^2 - (1/4) p_1 sum_{i>=2} p_i - (1/8)(n-1)
long long a2_even_formula(const TwistVector& v);

// Routes to the matching closed form; every knot vector satisfies exactly
// one of the two hypotheses.
long long a2_formula(const TwistVector& v);

// (p^2-1)(q^2-1)/24 for coprime p,q >= 1; integrality is asserted and
// doubles as the input validator.  Throws std::domain_error otherwise.
long long a2_torus(long long p, long long q);
long long u_delta_torus(long long p, long long q);

// Delta-unknotting number of a positive pretzel knot: equals the matching
// a2 closed form.  Throws std::domain_error unless is_positive(v).
long long u_delta_positive_formula(const TwistVector& v);

// Delta-unknotting number for the family (-1, p2,...,pn) with every p_i
// odd positive and n odd:
//   -(1/4) sum_{i>=2} p_i + (1/4) sum_{2<=i<j} p_i p_j + (1/8)(n-1).
long long u_delta_oddone_formula(const TwistVector& v);

}  // namespace pretzel
