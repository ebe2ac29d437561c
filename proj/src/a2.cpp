#include "pretzel/a2.hpp"

#include <algorithm>
#include <cstdlib>
#include <mutex>
#include <stdexcept>

#include "pretzel/alexander.hpp"
#include "pretzel/diagram.hpp"
#include "pretzel/formulas.hpp"
#include "pretzel/rational.hpp"

namespace pretzel {

namespace {

// a2 of the (2,m)-torus knot, m odd of either sign (mirroring preserves a2).
long long torus_two_strand_a2(long long m) {
  Rational r = Rational(m * m - 1) / 8;
  return require_integer(r, "torus base case");
}

}  // namespace

TwistVector SkeinEngine::key(const TwistVector& v) const {
  return sorted_keys_ ? canonical_key(v) : v;
}

long long SkeinEngine::a2(const TwistVector& v) {
  if (!is_knot_vector(v)) throw std::invalid_argument("a2 is defined for knot vectors only");
  return eval(v, nullptr);
}

SkeinTrace SkeinEngine::a2_traced(const TwistVector& v) {
  if (!is_knot_vector(v)) throw std::invalid_argument("a2 is defined for knot vectors only");
  SkeinTrace trace;
  eval(v, &trace);
  return trace;
}

long long SkeinEngine::eval(const TwistVector& v, SkeinTrace* trace) {
  if (!trace) {
    std::shared_lock lock(mutex_);
    auto it = cache_.find(key(v));
    if (it != cache_.end()) return it->second;
  }

  const std::size_t n = v.size();
  long long value;

  auto zero_it = std::find(v.begin(), v.end(), 0);
  bool all_units = std::all_of(v.begin(), v.end(), [](int p) { return p == 1 || p == -1; });

  if (n == 1) {
    value = 0;
    if (trace) trace->base = {v, value, "trivial"};
  } else if (zero_it != v.end()) {
    // P(0, p2,...,pn) is the connected sum of the torus knots T(2, p_i);
    // a2 adds over connected sums.
    if (std::count(v.begin(), v.end(), 0) != 1)
      throw std::logic_error("knot vector cannot contain two zero entries");
    Rational sum = 0;
    for (int p : v) {
      if (p == 0) continue;
      if (p % 2 == 0) throw std::logic_error("connected-sum base case needs odd companions");
      sum += Rational(static_cast<long long>(p) * p - 1) / 8;
    }
    value = require_integer(sum, "connected-sum base case");
    if (trace) trace->base = {v, value, "connected-sum"};
  } else if (all_units) {
    // Cancel (+1,-1) pairs; what remains is a (2,m)-torus knot.
    TwistVector w = v;
    while (true) {
      auto reduced = cancel_unit_pair(w);
      if (!reduced) break;
      w = std::move(*reduced);
    }
    if (w.empty() || std::abs(w.front()) != 1 ||
        std::adjacent_find(w.begin(), w.end(), std::not_equal_to<>()) != w.end())
      throw std::logic_error("unit-vector base case did not reduce to a torus knot");
    long long m = static_cast<long long>(w.size()) * (w.front() > 0 ? 1 : -1);
    value = torus_two_strand_a2(m);
    if (trace) trace->base = {v, value, "torus"};
  } else {
    std::size_t band = 0;
    while (band < n && std::abs(v[band]) < 2) ++band;
    if (band == n) throw std::logic_error("no reducible band in skein step");

    Diagram d = build_diagram(v);
    int c = top_crossing_of_band(d, static_cast<int>(band) + 1);
    int sign = d.sign(c);
    long long lk = linking_number(smooth_crossing(d, c));
    long long contribution = static_cast<long long>(sign) * lk;

    TwistVector next = v;
    next[band] += next[band] > 0 ? -2 : 2;

    if (trace) trace->steps.push_back({v, static_cast<int>(band) + 1, sign, lk, contribution});
    Rational total = Rational(eval(next, trace)) + contribution;
    value = require_integer(total, "skein accumulation");
  }

  {
    std::unique_lock lock(mutex_);
    cache_.emplace(key(v), value);
  }
  return value;
}

long long a2_skein(const TwistVector& v) {
  SkeinEngine engine;
  return engine.a2(v);
}

std::string method_name(A2Method m) {
  switch (m) {
    case A2Method::Skein: return "skein";
    case A2Method::Alexander: return "alexander";
    case A2Method::Formula: return "formula";
    case A2Method::All: return "all";
  }
  std::abort();
}

A2Method parse_method(const std::string& name) {
  if (name == "skein") return A2Method::Skein;
  if (name == "alexander") return A2Method::Alexander;
  if (name == "formula") return A2Method::Formula;
  if (name == "all") return A2Method::All;
  throw std::invalid_argument("unknown a2 method '" + name + "'");
}

A2Value a2(const TwistVector& v, A2Method method, const A2Options& opts) {
  if (!is_knot_vector(v)) throw std::invalid_argument("a2 is defined for knot vectors only");

  A2Value out;
  out.method = method;

  SkeinEngine local;
  SkeinEngine& engine = opts.engine ? *opts.engine : local;

  auto run_skein = [&] {
    if (opts.want_trace) {
      SkeinTrace trace = engine.a2_traced(v);
      long long total = trace.base.value;
      for (const auto& s : trace.steps) total += s.contribution;
      out.trace = std::move(trace);
      return total;
    }
    return engine.a2(v);
  };

  switch (method) {
    case A2Method::Skein:
      out.value = out.skein.emplace(run_skein());
      return out;
    case A2Method::Alexander:
      out.value = out.alexander.emplace(a2_alexander(build_diagram(v), opts.oracle_cap));
      return out;
    case A2Method::Formula:
      out.value = out.formula.emplace(a2_formula(v));
      return out;
    case A2Method::All: {
      out.skein = run_skein();
      out.formula = a2_formula(v);
      try {
        out.alexander = a2_alexander(build_diagram(v), opts.oracle_cap);
      } catch (const OracleCapExceeded&) {
        // Oracle route not applicable at this size.
      }
      if (*out.skein != *out.formula ||
          (out.alexander && *out.alexander != *out.skein)) {
        std::string msg = "a2 methods disagree on (" + format_twists(v) + "): skein=" +
                          std::to_string(*out.skein) + " formula=" + std::to_string(*out.formula);
        if (out.alexander) msg += " alexander=" + std::to_string(*out.alexander);
        throw MethodDisagreement(msg);
      }
      out.value = *out.skein;
      return out;
    }
  }
  std::abort();
}

}  // namespace pretzel
