#include "pretzel/twist.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <stdexcept>

#include "pretzel/diagram.hpp"

namespace pretzel {

namespace {

bool odd(int x) { return x % 2 != 0; }

std::size_t count_even(const TwistVector& v) {
  std::size_t c = 0;
  for (int x : v)
    if (!odd(x)) ++c;
  return c;
}

}  // namespace

bool is_knot_vector(const TwistVector& v) {
  if (v.empty()) return false;
  std::size_t e = count_even(v);
  return e == 1 || (e == 0 && odd(static_cast<int>(v.size())));
}

PretzelClass classify(const TwistVector& v) {
  if (v.empty()) throw std::invalid_argument("twist vector must have at least one entry");
  PretzelClass out;
  std::size_t e = count_even(v);
  if (e == 1) {
    out.even_entry_index = static_cast<std::size_t>(
        std::find_if(v.begin(), v.end(), [](int x) { return !odd(x); }) - v.begin());
  }
  if (is_knot_vector(v)) {
    out.kind = Kind::Knot;
    out.component_count = 1;
    if (v.size() == 1)
      out.knot_type = KnotType::Trivial;
    else
      out.knot_type = (e == 0) ? KnotType::OddType : KnotType::EvenType;
    out.positive = is_positive(v);
  } else {
    out.kind = Kind::Link;
    out.knot_type = KnotType::NotApplicable;
    if (e == 0) {
      out.component_count = 2;  // all odd, n even
    } else {
      out.component_count = component_count(build_diagram(v));
    }
  }
  return out;
}

bool is_positive(const TwistVector& v) {
  if (v.empty()) throw std::invalid_argument("twist vector must have at least one entry");
  if (!is_knot_vector(v)) throw std::invalid_argument("is_positive is defined for knots only");
  std::size_t n = v.size();
  std::size_t e = count_even(v);
  bool odd_rest_positive = std::all_of(v.begin(), v.end(), [](int x) { return odd(x) ? x > 0 : true; });
  if (e == 0) return odd(static_cast<int>(n)) && odd_rest_positive;
  int even_entry = *std::find_if(v.begin(), v.end(), [](int x) { return !odd(x); });
  if (!odd_rest_positive) return false;
  if (!odd(static_cast<int>(n))) return even_entry > 0;
  return even_entry < 0;
}

TwistVector mirror(const TwistVector& v) {
  TwistVector out(v.size());
  std::transform(v.begin(), v.end(), out.begin(), [](int x) { return -x; });
  return out;
}

std::optional<TwistVector> cancel_unit_pair(const TwistVector& v) {
  auto plus = std::find(v.begin(), v.end(), 1);
  auto minus = std::find(v.begin(), v.end(), -1);
  if (plus == v.end() || minus == v.end()) return std::nullopt;
  TwistVector out;
  out.reserve(v.size() - 2);
  for (auto it = v.begin(); it != v.end(); ++it) {
    if (it == plus || it == minus) continue;
    out.push_back(*it);
  }
  return out;
}

TwistVector canonical_key(const TwistVector& v) {
  TwistVector out = v;
  std::sort(out.begin(), out.end());
  return out;
}

TwistVector rotated(const TwistVector& v, std::size_t shift) {
  TwistVector out;
  out.reserve(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out.push_back(v[(i + shift) % v.size()]);
  return out;
}

TwistVector reversed(const TwistVector& v) { return TwistVector(v.rbegin(), v.rend()); }

std::vector<TwistVector> pretzel_symmetries(const TwistVector& v) {
  std::vector<TwistVector> out;
  std::set<TwistVector> seen;
  const TwistVector rev = reversed(v);
  for (std::size_t s = 0; s < v.size(); ++s) {
    for (const TwistVector* base : {&v, &rev}) {
      TwistVector cand = rotated(*base, s);
      if (seen.insert(cand).second) out.push_back(std::move(cand));
    }
  }
  return out;
}

TwistVector table_key(const TwistVector& v) {
  TwistVector best;
  for (const TwistVector& base : {v, mirror(v)}) {
    for (const TwistVector& cand : pretzel_symmetries(base)) {
      if (best.empty() || cand < best) best = cand;
    }
  }
  return best;
}

TwistVector parse_twists(const std::string& text) {
  // Normalize U+2212 (UTF-8 e2 88 92) to '-'.
  std::string s;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (i + 2 < text.size() && static_cast<unsigned char>(text[i]) == 0xe2 &&
        static_cast<unsigned char>(text[i + 1]) == 0x88 &&
        static_cast<unsigned char>(text[i + 2]) == 0x92) {
      s += '-';
      i += 2;
    } else {
      s += text[i];
    }
  }
  TwistVector out;
  std::size_t pos = 0;
  while (true) {
    std::size_t comma = s.find(',', pos);
    std::string field = s.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    std::size_t b = field.find_first_not_of(" \t");
    std::size_t e = field.find_last_not_of(" \t");
    if (b == std::string::npos) throw std::invalid_argument("empty entry in twist vector '" + text + "'");
    field = field.substr(b, e - b + 1);
    try {
      std::size_t used = 0;
      int value = std::stoi(field, &used);
      if (used != field.size()) throw std::invalid_argument(field);
      out.push_back(value);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad integer '" + field + "' in twist vector '" + text + "'");
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  if (out.empty()) throw std::invalid_argument("twist vector must have at least one entry");
  return out;
}

std::string format_twists(const TwistVector& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(v[i]);
  }
  return s;
}

}  // namespace pretzel
