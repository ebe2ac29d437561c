#include "pretzel/table.hpp"

#include <fstream>
#include <sstream>

namespace pretzel {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (true) {
    std::size_t next = s.find(sep, pos);
    out.push_back(s.substr(pos, next == std::string::npos ? std::string::npos : next - pos));
    if (next == std::string::npos) break;
    pos = next + 1;
  }
  return out;
}

std::string strip(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

long long parse_int(const std::string& s, int line, const char* what) {
  try {
    std::size_t used = 0;
    long long v = std::stoll(strip(s), &used);
    if (used != strip(s).size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw TableParseError(line, std::string("bad ") + what + " '" + s + "'");
  }
}

}  // namespace

void KnotTable::add(KnotTableEntry entry) {
  if (!is_knot_vector(entry.twists))
    throw std::invalid_argument("table entry '" + entry.name + "' is not a knot");
  if (entry.u_delta_known.empty())
    throw std::invalid_argument("table entry '" + entry.name + "' has no u_delta values");
  by_key_[table_key(entry.twists)] = entries_.size();
  entries_.push_back(std::move(entry));
}

const KnotTableEntry* KnotTable::find(const TwistVector& v) const {
  auto it = by_key_.find(table_key(v));
  return it == by_key_.end() ? nullptr : &entries_[it->second];
}

KnotTable KnotTable::from_csv(std::istream& in) {
  KnotTable table;
  std::string line;
  int lineno = 0;
  bool saw_header = false;
  while (std::getline(in, line)) {
    ++lineno;
    std::string body = strip(line);
    if (body.empty() || body[0] == '#') continue;
    if (!saw_header) {
      saw_header = true;
      if (body == "name,twists,a2,u_delta") continue;  // header optional
    }
    std::vector<std::string> fields = split(body, ',');
    if (fields.size() != 4)
      throw TableParseError(lineno, "expected 4 comma-separated fields, got " +
                                        std::to_string(fields.size()));
    KnotTableEntry e;
    e.name = strip(fields[0]);
    if (e.name.empty()) throw TableParseError(lineno, "empty knot name");
    for (const std::string& t : split(fields[1], ';'))
      e.twists.push_back(static_cast<int>(parse_int(t, lineno, "twist entry")));
    e.a2_known = parse_int(fields[2], lineno, "a2 value");
    for (const std::string& u : split(fields[3], '|'))
      e.u_delta_known.insert(parse_int(u, lineno, "u_delta value"));
    try {
      table.add(std::move(e));
    } catch (const std::invalid_argument& err) {
      throw TableParseError(lineno, err.what());
    }
  }
  return table;
}

KnotTable KnotTable::from_csv_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open knot table '" + path + "'");
  return from_csv(in);
}

std::string KnotTable::to_csv() const {
  std::ostringstream out;
  out << "name,twists,a2,u_delta\n";
  for (const KnotTableEntry& e : entries_) {
    out << e.name << ',';
    for (std::size_t i = 0; i < e.twists.size(); ++i) out << (i ? ";" : "") << e.twists[i];
    out << ',' << e.a2_known << ',';
    bool first = true;
    for (long long u : e.u_delta_known) {
      out << (first ? "" : "|") << u;
      first = false;
    }
    out << '\n';
  }
  return out.str();
}

ordered_json KnotTable::to_json() const {
  ordered_json j = ordered_json::array();
  for (const KnotTableEntry& e : entries_) {
    j.push_back({{"name", e.name},
                 {"twists", e.twists},
                 {"a2", e.a2_known},
                 {"uDelta", e.u_delta_known}});
  }
  return j;
}

KnotTable KnotTable::from_json(const ordered_json& j) {
  KnotTable table;
  for (const auto& je : j) {
    KnotTableEntry e;
    e.name = je.at("name").get<std::string>();
    e.twists = je.at("twists").get<TwistVector>();
    e.a2_known = je.at("a2").get<long long>();
    for (const auto& u : je.at("uDelta")) e.u_delta_known.insert(u.get<long long>());
    table.add(std::move(e));
  }
  return table;
}

}  // namespace pretzel
