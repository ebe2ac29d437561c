#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pretzel/a2.hpp"
#include "pretzel/alexander.hpp"
#include "pretzel/table.hpp"
#include "pretzel/twist.hpp"

namespace pretzel {

// Enumeration bounds for the agreement grids.  Odd entries range over odd
// magnitudes <= max_odd (both signs); the single even entry of the
// one-even grid ranges over even magnitudes <= max_even (both signs,
// including 0) and may sit at any position.
struct GridSpec {
  std::vector<int> odd_n;
  std::vector<int> even_n;
  int max_odd = 5;
  int max_even = -1;  // -1: max_odd + 1

  int effective_max_even() const { return max_even >= 0 ? max_even : max_odd + 1; }
};

std::vector<TwistVector> enumerate_grid(const GridSpec& spec);

struct VectorResult {
  TwistVector v;
  long long skein = 0;
  long long formula = 0;
  std::optional<long long> alexander;
  bool agree = true;
};

struct CrossCheckReport {
  std::string description;
  std::vector<VectorResult> results;
  std::size_t total = 0;
  std::size_t with_oracle = 0;
  std::size_t disagreements = 0;
  std::string first_failure;

  bool ok() const { return disagreements == 0; }
};

// Runs every applicable a2 route over the grid; the Alexander oracle is
// skipped above oracle_cap crossings.  jobs <= 0 means hardware parallelism;
// results are ordered by enumeration index either way.
CrossCheckReport run_crosscheck(const GridSpec& spec, int oracle_cap = kDefaultOracleCap,
                                int jobs = 1);

// Contribution sign(c)*lk predicted by the quoted reduction formulas for
// smoothing a band-`band` crossing (1-based), when their hypotheses apply:
// all-odd vectors with a run of leading ones, and one-even vectors with the
// even entry in front.
std::optional<long long> closed_form_contribution(const TwistVector& v, int band);

struct LkCheckReport {
  std::size_t vectors = 0;
  std::size_t steps_replayed = 0;
  std::size_t closed_form_hits = 0;
  std::size_t direct_checks = 0;
  std::size_t mismatches = 0;
  std::string first_failure;

  bool ok() const { return mismatches == 0; }
};

// Replays every skein trace step against a freshly built diagram, checks
// matching steps against the closed forms, and sweeps the closed forms
// directly over every grid smoothing their hypotheses cover.
LkCheckReport run_lkcheck(const std::vector<int>& ns, int max_odd, int max_even = -1);

struct TableCheckRow {
  std::string name;
  TwistVector twists;
  long long a2_known = 0;
  long long a2_skein = 0;
  long long a2_formula = 0;
  std::optional<long long> a2_alexander;
  bool a2_match = false;
  std::set<long long> u_values;
  long long lower = 0;
  bool u_admissible = false;
  std::optional<long long> exact_value;
  bool exact_consistent = true;

  bool ok() const { return a2_match && u_admissible && exact_consistent; }
};

struct TableCheckReport {
  std::vector<TableCheckRow> rows;
  std::string first_failure;
  bool ok = true;
};

TableCheckReport run_table_check(const KnotTable& table, int oracle_cap = kDefaultOracleCap);

}  // namespace pretzel
