#pragma once

#include <iosfwd>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "pretzel/twist.hpp"

namespace pretzel {

using ordered_json = nlohmann::ordered_json;

// A named knot with a pretzel presentation and its published invariants.
// u_delta_known is a set: the literature sometimes pins the value only up
// to a short list, and nothing here may collapse that.
struct KnotTableEntry {
  std::string name;
  TwistVector twists;
  long long a2_known = 0;
  std::set<long long> u_delta_known;
};

struct TableParseError : std::runtime_error {
  TableParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line(line) {}
  int line;
};

class KnotTable {
 public:
  void add(KnotTableEntry entry);
  const std::vector<KnotTableEntry>& entries() const { return entries_; }

  // Lookup up to the pretzel symmetries (rotation, reversal) and mirroring.
  const KnotTableEntry* find(const TwistVector& v) const;

  // CSV with header "name,twists,a2,u_delta"; twists ';'-separated,
  // u_delta '|'-separated (e.g. "2|4").
  static KnotTable from_csv(std::istream& in);
  static KnotTable from_csv_file(const std::string& path);
  std::string to_csv() const;

  ordered_json to_json() const;
  static KnotTable from_json(const ordered_json& j);

 private:
  std::vector<KnotTableEntry> entries_;
  std::map<TwistVector, std::size_t> by_key_;
};

}  // namespace pretzel
