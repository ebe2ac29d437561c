#include "pretzel/alexander.hpp"

#include <algorithm>
#include <utility>

namespace pretzel {

namespace {

// Machine-word coefficients with overflow detection.  The determinant work
// almost always fits in 64 bits; on overflow the computation is redone with
// arbitrary precision.
struct I64 {
  long long v = 0;
  I64() = default;
  I64(long long x) : v(x) {}
  friend I64 operator+(I64 a, I64 b) {
    long long r;
    if (__builtin_add_overflow(a.v, b.v, &r)) throw std::overflow_error("i64 add");
    return r;
  }
  friend I64 operator-(I64 a, I64 b) {
    long long r;
    if (__builtin_sub_overflow(a.v, b.v, &r)) throw std::overflow_error("i64 sub");
    return r;
  }
  friend I64 operator*(I64 a, I64 b) {
    long long r;
    if (__builtin_mul_overflow(a.v, b.v, &r)) throw std::overflow_error("i64 mul");
    return r;
  }
  I64 operator-() const { return I64(0) - *this; }
  friend I64 exact_div(I64 a, I64 b) {
    if (b.v == 0 || a.v % b.v != 0) throw std::logic_error("inexact coefficient division");
    return a.v / b.v;
  }
  bool is_zero() const { return v == 0; }
  BigInt to_big() const { return BigInt(v); }
};

struct Big {
  BigInt v = 0;
  Big() = default;
  Big(long long x) : v(x) {}
  Big(BigInt x) : v(std::move(x)) {}
  friend Big operator+(const Big& a, const Big& b) { return Big(a.v + b.v); }
  friend Big operator-(const Big& a, const Big& b) { return Big(a.v - b.v); }
  friend Big operator*(const Big& a, const Big& b) { return Big(a.v * b.v); }
  Big operator-() const { return Big(-v); }
  friend Big exact_div(const Big& a, const Big& b) {
    if (b.v == 0 || a.v % b.v != 0) throw std::logic_error("inexact coefficient division");
    return Big(a.v / b.v);
  }
  bool is_zero() const { return v == 0; }
  BigInt to_big() const { return v; }
};

// Dense polynomial over T, ascending exponents, no trailing zeros.
template <typename T>
struct Poly {
  std::vector<T> c;

  static Poly zero() { return {}; }
  static Poly constant(long long k) {
    Poly p;
    if (k != 0) p.c = {T(k)};
    return p;
  }
  static Poly term(long long k, int deg) {
    Poly p;
    if (k != 0) {
      p.c.assign(deg + 1, T(0));
      p.c[deg] = T(k);
    }
    return p;
  }
  bool is_zero() const { return c.empty(); }
  int degree() const { return static_cast<int>(c.size()) - 1; }
  void trim() {
    while (!c.empty() && c.back().is_zero()) c.pop_back();
  }
  friend Poly operator+(const Poly& a, const Poly& b) {
    Poly r;
    r.c.assign(std::max(a.c.size(), b.c.size()), T(0));
    for (std::size_t i = 0; i < a.c.size(); ++i) r.c[i] = r.c[i] + a.c[i];
    for (std::size_t i = 0; i < b.c.size(); ++i) r.c[i] = r.c[i] + b.c[i];
    r.trim();
    return r;
  }
  friend Poly operator-(const Poly& a, const Poly& b) {
    Poly r;
    r.c.assign(std::max(a.c.size(), b.c.size()), T(0));
    for (std::size_t i = 0; i < a.c.size(); ++i) r.c[i] = r.c[i] + a.c[i];
    for (std::size_t i = 0; i < b.c.size(); ++i) r.c[i] = r.c[i] - b.c[i];
    r.trim();
    return r;
  }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return zero();
    Poly r;
    r.c.assign(a.c.size() + b.c.size() - 1, T(0));
    for (std::size_t i = 0; i < a.c.size(); ++i)
      for (std::size_t j = 0; j < b.c.size(); ++j) r.c[i + j] = r.c[i + j] + a.c[i] * b.c[j];
    r.trim();
    return r;
  }
  // Exact division (the Bareiss pivot divisions are exact over Z[t]).
  friend Poly exact_div(Poly a, const Poly& b) {
    if (b.is_zero()) throw std::logic_error("polynomial division by zero");
    if (a.is_zero()) return zero();
    Poly q;
    q.c.assign(a.c.size() >= b.c.size() ? a.c.size() - b.c.size() + 1 : 0, T(0));
    while (!a.is_zero() && a.degree() >= b.degree()) {
      int shift = a.degree() - b.degree();
      T coef = exact_div(a.c.back(), b.c.back());
      q.c[shift] = coef;
      for (std::size_t i = 0; i < b.c.size(); ++i)
        a.c[shift + i] = a.c[shift + i] - coef * b.c[i];
      a.trim();
    }
    if (!a.is_zero()) throw std::logic_error("inexact polynomial division");
    q.trim();
    return q;
  }
};

template <typename T>
Poly<T> bareiss_determinant(std::vector<std::vector<Poly<T>>> m) {
  const int n = static_cast<int>(m.size());
  if (n == 0) return Poly<T>::constant(1);
  int sign = 1;
  Poly<T> prev = Poly<T>::constant(1);
  for (int k = 0; k < n; ++k) {
    if (m[k][k].is_zero()) {
      int r = k + 1;
      while (r < n && m[r][k].is_zero()) ++r;
      if (r == n) return Poly<T>::zero();
      std::swap(m[k], m[r]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j)
        m[i][j] = exact_div(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev);
      m[i][k] = Poly<T>::zero();
    }
    prev = m[k][k];
  }
  Poly<T> det = m[n - 1][n - 1];
  if (sign < 0) det = Poly<T>::zero() - det;
  return det;
}

struct WirtingerData {
  int generators = 0;
  // per relation: (incoming under, outgoing under, over, crossing sign)
  struct Relation {
    int in_gen, out_gen, over_gen, sign;
  };
  std::vector<Relation> relations;
};

WirtingerData wirtinger_presentation(const Diagram& d) {
  const int m = d.crossing_count();

  // Walk the knot, recording each passage.
  struct Passage {
    int crossing;
    bool under;
  };
  std::vector<Passage> walk;
  int a = 0;
  do {
    ArcEnd head = d.arc_forward(a) ? d.arc_ends(a)[1] : d.arc_ends(a)[0];
    bool on_nwse = head.slot == Slot::NW || head.slot == Slot::SE;
    bool over = (d.crossings()[head.crossing].over == OverDiag::NWSE) == on_nwse;
    walk.push_back({head.crossing, !over});
    Slot exit = head.slot == Slot::NW   ? Slot::SE
                : head.slot == Slot::SE ? Slot::NW
                : head.slot == Slot::NE ? Slot::SW
                                        : Slot::NE;
    a = d.arc_at(head.crossing, exit);
  } while (a != 0);
  if (static_cast<int>(walk.size()) != 2 * m)
    throw std::logic_error("knot walk did not cover the diagram");

  // Wirtinger generator j is the over-strand segment ending at the j-th
  // under-passage of the walk.
  std::vector<int> gen_of_pos(walk.size());
  std::vector<int> under_pos;
  {
    int unders_before = 0;
    for (std::size_t t = 0; t < walk.size(); ++t) {
      gen_of_pos[t] = unders_before;  // mod m applied below
      if (walk[t].under) {
        under_pos.push_back(static_cast<int>(t));
        ++unders_before;
      }
    }
    if (unders_before != m) throw std::logic_error("each crossing must be passed under once");
    for (auto& g : gen_of_pos) g %= m;
  }
  std::vector<int> over_pos(m, -1);
  for (std::size_t t = 0; t < walk.size(); ++t)
    if (!walk[t].under) over_pos[walk[t].crossing] = static_cast<int>(t);

  WirtingerData w;
  w.generators = m;
  for (int j = 0; j < m; ++j) {
    int crossing = walk[under_pos[j]].crossing;
    WirtingerData::Relation rel;
    rel.in_gen = j;
    rel.out_gen = (j + 1) % m;
    rel.over_gen = gen_of_pos[over_pos[crossing]];
    rel.sign = d.sign(crossing);
    w.relations.push_back(rel);
  }
  return w;
}

template <typename T>
std::vector<BigInt> alexander_raw(const WirtingerData& w) {
  const int m = w.generators;
  // Fox-derivative rows, scaled into Z[t]:
  //   positive crossing:  u: t,  out: -1,  over: 1 - t
  //   negative crossing:  u: 1,  out: -t,  over: t - 1
  std::vector<std::vector<Poly<T>>> rows(m, std::vector<Poly<T>>(m, Poly<T>::zero()));
  for (int j = 0; j < m; ++j) {
    const auto& rel = w.relations[j];
    auto& row = rows[j];
    if (rel.sign > 0) {
      row[rel.in_gen] = row[rel.in_gen] + Poly<T>::term(1, 1);
      row[rel.out_gen] = row[rel.out_gen] + Poly<T>::constant(-1);
      row[rel.over_gen] = row[rel.over_gen] + (Poly<T>::constant(1) - Poly<T>::term(1, 1));
    } else {
      row[rel.in_gen] = row[rel.in_gen] + Poly<T>::constant(1);
      row[rel.out_gen] = row[rel.out_gen] - Poly<T>::term(1, 1);
      row[rel.over_gen] = row[rel.over_gen] + (Poly<T>::term(1, 1) - Poly<T>::constant(1));
    }
  }
  // Delete the last generator column and the last relator row.
  std::vector<std::vector<Poly<T>>> minor(m - 1, std::vector<Poly<T>>(m - 1));
  for (int i = 0; i + 1 < m; ++i)
    for (int j = 0; j + 1 < m; ++j) minor[i][j] = rows[i][j];
  Poly<T> det = bareiss_determinant(std::move(minor));
  std::vector<BigInt> out;
  out.reserve(det.c.size());
  for (const auto& coef : det.c) out.push_back(coef.to_big());
  return out;
}

SymmetricAlexander normalize(std::vector<BigInt> c) {
  std::size_t low = 0;
  while (low < c.size() && c[low] == 0) ++low;
  c.erase(c.begin(), c.begin() + low);
  while (!c.empty() && c.back() == 0) c.pop_back();
  if (c.empty()) throw std::logic_error("vanishing Alexander polynomial on a knot diagram");

  const int d = static_cast<int>(c.size()) - 1;
  if (d % 2 != 0) throw std::logic_error("odd-degree Alexander polynomial on a knot diagram");
  for (int i = 0; i <= d; ++i)
    if (c[i] != c[d - i]) throw std::logic_error("non-palindromic Alexander polynomial");

  BigInt at_one = 0;
  for (const auto& x : c) at_one += x;
  if (at_one != 1 && at_one != -1)
    throw std::logic_error("Alexander polynomial does not evaluate to a unit at 1");
  if (at_one == -1)
    for (auto& x : c) x = -x;

  SymmetricAlexander out;
  out.coeffs = std::move(c);
  out.min_exp = -d / 2;
  return out;
}

}  // namespace

std::string SymmetricAlexander::to_string() const {
  std::string s;
  for (int i = static_cast<int>(coeffs.size()) - 1; i >= 0; --i) {
    const BigInt& k = coeffs[i];
    if (k == 0) continue;
    int e = min_exp + i;
    if (!s.empty()) s += k > 0 ? " + " : " - ";
    else if (k < 0) s += "-";
    BigInt mag = abs(k);
    if (mag != 1 || e == 0) s += mag.str();
    if (e != 0) {
      if (mag != 1) s += "*";
      s += "t";
      if (e != 1) s += "^" + std::to_string(e);
    }
  }
  if (s.empty()) s = "0";
  return s;
}

SymmetricAlexander alexander_poly(const Diagram& d, int crossing_cap) {
  if (d.crossing_count() == 0) {
    if (d.free_loops() == 1 && d.traced_components() == 0)
      return SymmetricAlexander{{BigInt(1)}, 0};
    throw std::invalid_argument("Alexander oracle requires a knot diagram");
  }
  if (d.traced_components() != 1 || d.free_loops() != 0)
    throw std::invalid_argument("Alexander oracle requires a knot diagram");
  if (d.crossing_count() > crossing_cap)
    throw OracleCapExceeded("diagram has " + std::to_string(d.crossing_count()) +
                            " crossings, oracle cap is " + std::to_string(crossing_cap));

  WirtingerData w = wirtinger_presentation(d);
  std::vector<BigInt> raw;
  try {
    raw = alexander_raw<I64>(w);
  } catch (const std::overflow_error&) {
    raw = alexander_raw<Big>(w);
  }
  return normalize(std::move(raw));
}

long long a2_from_alexander(const SymmetricAlexander& poly) {
  // With the palindromic normalization the odd part vanishes, so half the
  // second derivative at 1 reduces to (1/2) * sum of c_j * j^2.
  BigInt sum = 0;
  for (std::size_t i = 0; i < poly.coeffs.size(); ++i) {
    long long e = poly.min_exp + static_cast<long long>(i);
    sum += poly.coeffs[i] * e * e;
  }
  if (sum % 2 != 0) throw std::logic_error("a2 from the Alexander polynomial must be integral");
  return BigInt(sum / 2).convert_to<long long>();
}

long long a2_alexander(const Diagram& d, int crossing_cap) {
  return a2_from_alexander(alexander_poly(d, crossing_cap));
}

}  // namespace pretzel
