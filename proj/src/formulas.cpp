#include "pretzel/formulas.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "pretzel/rational.hpp"

namespace pretzel {

namespace {

bool odd(long long x) { return x % 2 != 0; }

Rational pair_sum(const TwistVector& v, std::size_t from) {
  Rational s = 0;
  for (std::size_t i = from; i < v.size(); ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j)
      s += static_cast<long long>(v[i]) * v[j];
  return s;
}

}  // namespace

long long a2_odd_formula(const TwistVector& v) {
  if (v.empty()) throw std::domain_error("empty twist vector");
  const long long n = static_cast<long long>(v.size());
  if (!odd(n) || !std::all_of(v.begin(), v.end(), [](int p) { return odd(p); }))
    throw std::domain_error("a2_odd_formula needs all entries odd and n odd");

  Rational value = pair_sum(v, 0) / 4 + Rational(n - 1) / 8;

  Rational total = 0, squares = 0;
  for (int p : v) {
    total += p;
    squares += static_cast<long long>(p) * p;
  }
  Rational alt = (total * total - squares) / 8 + Rational(n - 1) / 8;
  if (value != alt) throw std::logic_error("the two odd-family forms disagree");

  return require_integer(value, "a2_odd_formula");
}

long long a2_even_formula(const TwistVector& v) {
  if (v.empty()) throw std::domain_error("empty twist vector");
  auto even_it = std::find_if(v.begin(), v.end(), [](int p) { return !odd(p); });
  if (even_it == v.end() ||
      std::count_if(v.begin(), v.end(), [](int p) { return !odd(p); }) != 1)
    throw std::domain_error("a2_even_formula needs exactly one even entry");

  TwistVector w = rotated(v, static_cast<std::size_t>(even_it - v.begin()));
  const long long n = static_cast<long long>(w.size());
  const long long p1 = w[0];
  Rational tail_sum = 0, tail_squares = 0;
  for (std::size_t i = 1; i < w.size(); ++i) {
    tail_sum += w[i];
    tail_squares += static_cast<long long>(w[i]) * w[i];
  }

  Rational value;
  if (n % 2 == 0)
    value = (Rational(p1 * p1) + tail_squares) / 8 + Rational(p1) * tail_sum / 4 -
            Rational(n - 1) / 8;
  else
    value = tail_squares / 8 - Rational(p1) * tail_sum / 4 - Rational(n - 1) / 8;
  return require_integer(value, "a2_even_formula");
}

long long a2_formula(const TwistVector& v) {
  if (!is_knot_vector(v)) throw std::domain_error("a2 closed forms are defined for knots only");
  bool all_odd = std::all_of(v.begin(), v.end(), [](int p) { return odd(p); });
  return all_odd ? a2_odd_formula(v) : a2_even_formula(v);
}

long long a2_torus(long long p, long long q) {
  if (p < 1 || q < 1) throw std::domain_error("torus parameters must be positive");
  if (std::gcd(p, q) != 1) throw std::domain_error("torus parameters must be coprime");
  Rational value = Rational((p * p - 1)) * (q * q - 1) / 24;
  return require_integer(value, "a2_torus");
}

long long u_delta_torus(long long p, long long q) { return a2_torus(p, q); }

long long u_delta_positive_formula(const TwistVector& v) {
  if (!is_knot_vector(v) || !is_positive(v))
    throw std::domain_error("u_delta_positive_formula needs a positive pretzel knot");
  return a2_formula(v);
}

long long u_delta_oddone_formula(const TwistVector& v) {
  const long long n = static_cast<long long>(v.size());
  if (v.empty() || v[0] != -1 || !odd(n))
    throw std::domain_error("u_delta_oddone_formula needs the shape (-1, p2,...,pn), n odd");
  for (std::size_t i = 1; i < v.size(); ++i)
    if (!odd(v[i]) || v[i] < 1)
      throw std::domain_error("u_delta_oddone_formula needs odd positive p2,...,pn");

  Rational tail_sum = 0;
  for (std::size_t i = 1; i < v.size(); ++i) tail_sum += v[i];
  Rational value = -tail_sum / 4 + pair_sum(v, 1) / 4 + Rational(n - 1) / 8;
  return require_integer(value, "u_delta_oddone_formula");
}

}  // namespace pretzel
