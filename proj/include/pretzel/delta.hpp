#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "pretzel/table.hpp"
#include "pretzel/twist.hpp"

namespace pretzel {

enum class ExactRule {
  TorusTwoStrand,  // all-ones vector, i.e. the (2,n)-torus knot
  PositiveOdd,
  PositiveEven,
  MinusOneOdd,  // (-1, p2,...,pn), p_i odd positive, n odd
};

std::string rule_name(ExactRule r);

// Either an exact delta-unknotting value with the rule that applies, or an
// honest lower bound |a2| together with its parity class {|a2|, |a2|+2,...}.
struct DeltaResult {
  long long a2 = 0;
  long long lower = 0;  // |a2|
  bool exact = false;
  long long value = 0;         // meaningful when exact
  ExactRule rule = ExactRule::TorusTwoStrand;
  bool mirrored = false;       // rule matched the mirror image
  std::optional<std::set<long long>> table_values;

  bool admissible(long long u) const { return u >= lower && (u - lower) % 2 == 0; }
};

// Dispatch over the covered classes.  Hypotheses are checked on the vector
// as given, up to cyclic rotation, reversal and mirroring only (symmetries
// under which the invariant provably agrees) - never arbitrary
// permutations.  Vectors outside every covered class get bounds, with the
// known-value set attached when the optional table recognizes the knot.
DeltaResult u_delta(const TwistVector& v, const KnotTable* table = nullptr);

struct LowerBound {
  long long value = 0;  // |a2|
  bool admissible(long long u) const { return u >= value && (u - value) % 2 == 0; }
};

LowerBound lower_bound(const TwistVector& v);

// One crossing-change step of the cost accounting: the band-2 entry drops
// by 2 at a price of half the remaining-band twist total minus one.
struct CertStep {
  TwistVector before, after;
  int band = 2;  // 1-based
  long long cost = 0;
};

struct CertLeaf {
  TwistVector vector;
  long long cited_cost = 0;
  std::string citation;
};

// Auditable move-cost certificate: constructed steps plus a cited leaf
// whose cost is not re-derived here (it comes from the positive-pretzel
// equality u_delta = a2).
struct DeltaCertificate {
  TwistVector initial;
  std::vector<CertStep> steps;
  CertLeaf leaf;
  long long total = 0;
};

inline constexpr const char* kLeafCitation = "positive-pretzel-u-delta-equals-a2";

// Builds the certificate for (-1, p2,...,pn) with p_i odd positive, n odd:
// (p2-1)/2 steps, each costing (sum_{i>=3} p_i - 1)/2, down to the leaf
// (p3,...,pn).  The total always equals u_delta_oddone_formula(v).
DeltaCertificate build_certificate_oddone(const TwistVector& v);

struct VerifyReport {
  bool pass = true;
  std::string first_violation;
};

// Recomputes every step cost, successor relation, the leaf citation, the
// total, and the parity/lower-bound gate against an independently computed
// a2.  Never throws: problems are reported, not raised.
VerifyReport verify_certificate(const DeltaCertificate& c);

ordered_json certificate_to_json(const DeltaCertificate& c);
DeltaCertificate certificate_from_json(const ordered_json& j);

}  // namespace pretzel
