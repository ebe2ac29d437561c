#pragma once

#include <map>
#include <optional>
#include <shared_mutex>
#include <string>
#include <vector>

#include "pretzel/twist.hpp"

namespace pretzel {

enum class A2Method { Skein, Alexander, Formula, All };

// One crossing-change step of the skein recursion: the diagram-derived
// crossing sign and the linking number of the oriented smoothing.
struct SkeinStep {
  TwistVector vector;
  int band = 0;  // 1-based
  int crossing_sign = 0;
  long long lk = 0;
  long long contribution = 0;  // crossing_sign * lk
};

struct SkeinBase {
  TwistVector vector;
  long long value = 0;
  std::string kind;  // "trivial" | "connected-sum" | "torus"
};

struct SkeinTrace {
  std::vector<SkeinStep> steps;
  SkeinBase base;
};

struct A2Value {
  long long value = 0;
  A2Method method = A2Method::Skein;
  std::optional<SkeinTrace> trace;
  // Filled by the dispatcher when several routes ran.
  std::optional<long long> skein, alexander, formula;
};

// Crossing-change recursion driven by diagram-computed linking numbers.
// The cache may be shared across threads; entries are pure values.
class SkeinEngine {
 public:
  explicit SkeinEngine(bool sorted_keys = false) : sorted_keys_(sorted_keys) {}

  long long a2(const TwistVector& v);

  // Full descent (memo reads bypassed on the spine) so the trace reaches a
  // genuine base case and sums back to the value.
  SkeinTrace a2_traced(const TwistVector& v);

 private:
  long long eval(const TwistVector& v, SkeinTrace* trace);
  TwistVector key(const TwistVector& v) const;

  bool sorted_keys_;
  std::map<TwistVector, long long> cache_;
  mutable std::shared_mutex mutex_;
};

// One-shot skein evaluation with a private engine.
long long a2_skein(const TwistVector& v);

struct A2Options {
  int oracle_cap = 20;
  bool want_trace = false;
  SkeinEngine* engine = nullptr;  // optional shared cache
};

struct MethodDisagreement : std::logic_error {
  using std::logic_error::logic_error;
};

// Routes to the skein recursion, the Alexander oracle, and the closed-form
// evaluators.  Method All runs every applicable route and throws
// MethodDisagreement if they differ.
A2Value a2(const TwistVector& v, A2Method method, const A2Options& opts = {});

std::string method_name(A2Method m);
A2Method parse_method(const std::string& name);

}  // namespace pretzel
