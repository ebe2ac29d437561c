#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace pretzel {

// The parameter sequence (p1,...,pn) of a pretzel link: one signed
// half-twist count per band.  Everything else in the toolkit is a function
// of this vector.
using TwistVector = std::vector<int>;

enum class Kind { Knot, Link };

enum class KnotType {
  OddType,        // all entries odd, n odd (n >= 3)
  EvenType,       // exactly one even entry
  Trivial,        // n == 1
  NotApplicable,  // links
};

struct PretzelClass {
  Kind kind = Kind::Link;
  int component_count = 0;
  KnotType knot_type = KnotType::NotApplicable;
  bool positive = false;
  std::optional<std::size_t> even_entry_index;  // position of the unique even entry
};

// Knot criterion: precisely one even entry, or all odd with n odd.
// Component counts for links come from diagram tracing.
PretzelClass classify(const TwistVector& v);

bool is_knot_vector(const TwistVector& v);

// Positivity by parameter shape: (all odd positive, n odd) or
// (n even, one even positive, rest odd positive) or
// (n odd, one even negative, rest odd positive).  The even entry may sit at
// any position: a cyclic rotation moves it to the front.
// Throws std::invalid_argument for links.
bool is_positive(const TwistVector& v);

TwistVector mirror(const TwistVector& v);

// Removes one +1 entry and one -1 entry (the first of each); nullopt when
// no such pair exists.  Preserves the knot criterion and a2.
std::optional<TwistVector> cancel_unit_pair(const TwistVector& v);

// Sorted copy, for use as a cache key once permutation invariance has been
// established for the cached quantity.
TwistVector canonical_key(const TwistVector& v);

TwistVector rotated(const TwistVector& v, std::size_t shift);
TwistVector reversed(const TwistVector& v);

// All vectors reachable by cyclic rotation and reversal (the symmetries of
// the pretzel template itself), deduplicated, in deterministic order.
std::vector<TwistVector> pretzel_symmetries(const TwistVector& v);

// Lexicographically smallest vector over rotations, reversal and mirror.
// Used only as a lookup key for the knot table.
TwistVector table_key(const TwistVector& v);

// Parses "p1,p2,...,pn".  Whitespace is tolerated; both ASCII '-' and the
// U+2212 minus sign are accepted.  Throws std::invalid_argument with a
// description on malformed input.
TwistVector parse_twists(const std::string& text);

std::string format_twists(const TwistVector& v);

}  // namespace pretzel
