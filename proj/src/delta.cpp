#include "pretzel/delta.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

#include "pretzel/a2.hpp"
#include "pretzel/formulas.hpp"
#include "pretzel/rational.hpp"

namespace pretzel {

namespace {

bool odd(int x) { return x % 2 != 0; }

bool all_ones(const TwistVector& v) {
  return std::all_of(v.begin(), v.end(), [](int p) { return p == 1; });
}

bool oddone_shape(const TwistVector& v) {
  if (v.size() < 3 || v.size() % 2 == 0 || v[0] != -1) return false;
  for (std::size_t i = 1; i < v.size(); ++i)
    if (!odd(v[i]) || v[i] < 1) return false;
  return true;
}

// First rotation/reflection matching the (-1, odd positives) shape.
std::optional<TwistVector> find_oddone_variant(const TwistVector& v) {
  for (const TwistVector& w : pretzel_symmetries(v))
    if (oddone_shape(w)) return w;
  return std::nullopt;
}

struct ExactMatch {
  long long value;
  ExactRule rule;
};

std::optional<ExactMatch> match_exact(const TwistVector& v) {
  if (all_ones(v))
    return ExactMatch{u_delta_torus(2, static_cast<long long>(v.size())),
                      ExactRule::TorusTwoStrand};
  if (is_positive(v)) {
    bool odd_type = std::all_of(v.begin(), v.end(), [](int p) { return odd(p); });
    return ExactMatch{u_delta_positive_formula(v),
                      odd_type ? ExactRule::PositiveOdd : ExactRule::PositiveEven};
  }
  if (auto w = find_oddone_variant(v))
    return ExactMatch{u_delta_oddone_formula(*w), ExactRule::MinusOneOdd};
  return std::nullopt;
}

Rational sum_from(const TwistVector& v, std::size_t from) {
  Rational s = 0;
  for (std::size_t i = from; i < v.size(); ++i) s += v[i];
  return s;
}

}  // namespace

std::string rule_name(ExactRule r) {
  switch (r) {
    case ExactRule::TorusTwoStrand: return "torus-two-strand";
    case ExactRule::PositiveOdd: return "positive-odd";
    case ExactRule::PositiveEven: return "positive-even";
    case ExactRule::MinusOneOdd: return "minus-one-odd";
  }
  std::abort();
}

LowerBound lower_bound(const TwistVector& v) {
  if (!is_knot_vector(v)) throw std::invalid_argument("lower_bound is defined for knots only");
  return LowerBound{std::llabs(a2_skein(v))};
}

DeltaResult u_delta(const TwistVector& v, const KnotTable* table) {
  if (!is_knot_vector(v)) throw std::invalid_argument("u_delta is defined for knots only");

  DeltaResult out;
  out.a2 = a2_skein(v);
  out.lower = std::llabs(out.a2);

  std::optional<ExactMatch> match = match_exact(v);
  bool mirrored = false;
  if (!match) {
    match = match_exact(mirror(v));
    mirrored = match.has_value();
  }
  if (match) {
    out.exact = true;
    out.value = match->value;
    out.rule = match->rule;
    out.mirrored = mirrored;
    // Every covered class satisfies u_delta = a2; a mismatch is a bug.
    if (out.value != out.a2)
      throw std::logic_error("exact u_delta disagrees with a2 on a covered class");
  }
  if (table) {
    if (const KnotTableEntry* e = table->find(v)) out.table_values = e->u_delta_known;
  }
  return out;
}

DeltaCertificate build_certificate_oddone(const TwistVector& v) {
  if (!oddone_shape(v))
    throw std::domain_error(
        "certificate construction needs (-1, p2,...,pn) with p_i odd positive and n odd");

  const long long step_cost = require_integer((sum_from(v, 2) - 1) / 2, "step cost");
  const long long step_count = (v[1] - 1) / 2;

  DeltaCertificate cert;
  cert.initial = v;
  TwistVector cur = v;
  for (long long s = 0; s < step_count; ++s) {
    CertStep step;
    step.before = cur;
    cur[1] -= 2;
    step.after = cur;
    step.band = 2;
    step.cost = step_cost;
    cert.steps.push_back(std::move(step));
  }

  cert.leaf.vector = TwistVector(v.begin() + 2, v.end());
  cert.leaf.cited_cost = a2_odd_formula(cert.leaf.vector);
  cert.leaf.citation = kLeafCitation;
  cert.total = step_count * step_cost + cert.leaf.cited_cost;

  if (cert.total != u_delta_oddone_formula(v))
    throw std::logic_error("certificate total disagrees with the closed form");
  return cert;
}

VerifyReport verify_certificate(const DeltaCertificate& c) {
  VerifyReport rep;
  auto fail = [&](const std::string& why) {
    rep.pass = false;
    rep.first_violation = why;
    return rep;
  };

  try {
    if (!oddone_shape(c.initial)) return fail("initial vector is not of the certified shape");

    TwistVector cur = c.initial;
    for (std::size_t s = 0; s < c.steps.size(); ++s) {
      const CertStep& step = c.steps[s];
      std::string at = "step " + std::to_string(s) + ": ";
      if (step.before != cur) return fail(at + "before-vector does not chain");
      if (!oddone_shape(step.before)) return fail(at + "before-vector leaves the certified shape");
      if (step.band != 2) return fail(at + "band is not the reduced band");
      if (step.before[1] < 3) return fail(at + "band-2 entry has no room to reduce");
      TwistVector expect = step.before;
      expect[1] -= 2;
      if (step.after != expect) return fail(at + "after-vector is not one 2-step reduction");
      Rational want = (sum_from(step.before, 2) - 1) / 2;
      if (!is_integer(want) || step.cost != require_integer(want, "step cost"))
        return fail(at + "cost does not match the crossing-change cost rule");
      cur = step.after;
    }

    if (cur[1] != 1) return fail("steps do not reduce the band-2 entry to 1");
    if (c.leaf.vector != TwistVector(cur.begin() + 2, cur.end()))
      return fail("leaf vector does not match the fully reduced vector");
    if (c.leaf.citation != kLeafCitation) return fail("unrecognized leaf citation");

    long long leaf_a2;
    try {
      leaf_a2 = a2_odd_formula(c.leaf.vector);
    } catch (const std::exception&) {
      return fail("leaf vector is outside the cited class");
    }
    if (!is_positive(c.leaf.vector)) return fail("leaf vector is not a positive pretzel knot");
    if (c.leaf.cited_cost != leaf_a2) return fail("cited leaf cost is wrong");

    long long sum = c.leaf.cited_cost;
    for (const CertStep& s : c.steps) sum += s.cost;
    if (sum != c.total) return fail("total does not equal step costs plus leaf cost");

    long long a2_initial = a2_skein(c.initial);
    long long lo = std::llabs(a2_initial);
    if (c.total < lo || (c.total - lo) % 2 != 0)
      return fail("total violates the parity lower bound against a2");
  } catch (const std::exception& e) {
    return fail(std::string("verification error: ") + e.what());
  }
  return rep;
}

ordered_json certificate_to_json(const DeltaCertificate& c) {
  ordered_json j;
  j["initial"] = c.initial;
  j["steps"] = ordered_json::array();
  for (const CertStep& s : c.steps) {
    ordered_json js;
    js["before"] = s.before;
    js["after"] = s.after;
    js["band"] = s.band;
    js["cost"] = s.cost;
    j["steps"].push_back(std::move(js));
  }
  j["leaf"] = {{"vector", c.leaf.vector},
               {"citedCost", c.leaf.cited_cost},
               {"citation", c.leaf.citation}};
  j["total"] = c.total;
  return j;
}

DeltaCertificate certificate_from_json(const ordered_json& j) {
  try {
    DeltaCertificate c;
    c.initial = j.at("initial").get<TwistVector>();
    for (const auto& js : j.at("steps")) {
      CertStep s;
      s.before = js.at("before").get<TwistVector>();
      s.after = js.at("after").get<TwistVector>();
      s.band = js.at("band").get<int>();
      s.cost = js.at("cost").get<long long>();
      c.steps.push_back(std::move(s));
    }
    c.leaf.vector = j.at("leaf").at("vector").get<TwistVector>();
    c.leaf.cited_cost = j.at("leaf").at("citedCost").get<long long>();
    c.leaf.citation = j.at("leaf").at("citation").get<std::string>();
    c.total = j.at("total").get<long long>();
    return c;
  } catch (const ordered_json::exception& e) {
    throw std::invalid_argument(std::string("malformed certificate JSON: ") + e.what());
  }
}

}  // namespace pretzel
