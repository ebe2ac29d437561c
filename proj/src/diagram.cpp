#include "pretzel/diagram.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>
#include <stdexcept>

namespace pretzel {

namespace {

// The strand entering a slot leaves through the diagonally opposite one.
Slot diag_opposite(Slot s) {
  switch (s) {
    case Slot::NW: return Slot::SE;
    case Slot::NE: return Slot::SW;
    case Slot::SW: return Slot::NE;
    case Slot::SE: return Slot::NW;
  }
  std::abort();
}

bool on_nwse_diag(Slot s) { return s == Slot::NW || s == Slot::SE; }

// Counterclockwise slot order (x right, y up): NE, NW, SW, SE.
Slot ccw_next(Slot s) {
  switch (s) {
    case Slot::NE: return Slot::NW;
    case Slot::NW: return Slot::SW;
    case Slot::SW: return Slot::SE;
    case Slot::SE: return Slot::NE;
  }
  std::abort();
}

}  // namespace

int Diagram::diag_direction(int crossing, Slot entry_slot) const {
  Slot a = on_nwse_diag(entry_slot) ? Slot::NW : Slot::NE;
  Slot b = diag_opposite(a);
  int arc_a = arc_at(crossing, a);
  ArcEnd head = arc_forward_[arc_a] ? arc_ends_[arc_a][1] : arc_ends_[arc_a][0];
  bool arrives_at_a = head == ArcEnd{crossing, a};
  if (!arrives_at_a) {
    int arc_b = arc_at(crossing, b);
    ArcEnd head_b = arc_forward_[arc_b] ? arc_ends_[arc_b][1] : arc_ends_[arc_b][0];
    if (!(head_b == ArcEnd{crossing, b}))
      throw std::logic_error("inconsistent arc orientation at crossing");
  }
  return arrives_at_a ? 1 : -1;
}

int Diagram::sign(int crossing) const {
  int dir_a = diag_direction(crossing, Slot::NW);  // +1: NW->SE, vector (1,-1)
  int dir_b = diag_direction(crossing, Slot::NE);  // +1: NE->SW, vector (-1,-1)
  long vax = dir_a, vay = -dir_a;
  long vbx = -dir_b, vby = -dir_b;
  long cross = crossings_[crossing].over == OverDiag::NWSE ? (vax * vby - vay * vbx)
                                                           : (vbx * vay - vby * vax);
  if (cross == 0) throw std::logic_error("degenerate crossing sign");
  return cross > 0 ? 1 : -1;
}

int Diagram::writhe() const {
  int w = 0;
  for (int c = 0; c < crossing_count(); ++c) w += sign(c);
  return w;
}

int Diagram::component_of_diag(int crossing, Slot diag_slot) const {
  Slot a = on_nwse_diag(diag_slot) ? Slot::NW : Slot::NE;
  return arc_component_[arc_at(crossing, a)];
}

void Diagram::orient_from_scratch() {
  arc_forward_.assign(arc_ends_.size(), 1);
  arc_component_.assign(arc_ends_.size(), -1);
  traced_components_ = 0;
  for (int a0 = 0; a0 < arc_count(); ++a0) {
    if (arc_component_[a0] != -1) continue;
    int comp = traced_components_++;
    int a = a0;
    arc_forward_[a0] = 1;  // start arc oriented ends[0] -> ends[1]
    while (true) {
      arc_component_[a] = comp;
      ArcEnd head = arc_forward_[a] ? arc_ends_[a][1] : arc_ends_[a][0];
      ArcEnd exit{head.crossing, diag_opposite(head.slot)};
      int b = arc_at(exit.crossing, exit.slot);
      if (arc_component_[b] != -1) {
        ArcEnd tail = arc_forward_[b] ? arc_ends_[b][0] : arc_ends_[b][1];
        if (b != a0 || !(tail == exit)) throw std::logic_error("component trace did not close");
        break;
      }
      arc_forward_[b] = arc_ends_[b][0] == exit ? 1 : 0;
      a = b;
    }
  }
}

void Diagram::retrace_components() {
  arc_component_.assign(arc_ends_.size(), -1);
  traced_components_ = 0;
  for (int a0 = 0; a0 < arc_count(); ++a0) {
    if (arc_component_[a0] != -1) continue;
    int comp = traced_components_++;
    int a = a0;
    while (true) {
      arc_component_[a] = comp;
      ArcEnd head = arc_forward_[a] ? arc_ends_[a][1] : arc_ends_[a][0];
      ArcEnd exit{head.crossing, diag_opposite(head.slot)};
      int b = arc_at(exit.crossing, exit.slot);
      ArcEnd tail = arc_forward_[b] ? arc_ends_[b][0] : arc_ends_[b][1];
      if (!(tail == exit)) throw std::logic_error("inherited orientation is inconsistent");
      if (b == a0) break;
      if (arc_component_[b] != -1) throw std::logic_error("component trace did not close");
      a = b;
    }
  }
}

// ---------------------------------------------------------------------------
// Generation

namespace {

struct PortLink {
  enum Type { Wire, Stub } type = Wire;
  int peer = -1;   // port index when Wire
  ArcEnd stub{};   // crossing slot when Stub
};

}  // namespace

Diagram build_diagram(const TwistVector& v) {
  if (v.empty()) throw std::invalid_argument("twist vector must have at least one entry");
  const int n = static_cast<int>(v.size());

  Diagram d;
  std::vector<int> first_cross(n, -1), last_cross(n, -1);
  for (int i = 0; i < n; ++i) {
    int m = std::abs(v[i]);
    for (int r = 0; r < m; ++r) {
      Crossing c;
      c.arc = {-1, -1, -1, -1};
      // Chirality convention: positive half-twists carry the NW/SE strand on
      // top.  This is what makes every crossing of P(1,1,1) positive.
      c.over = v[i] > 0 ? OverDiag::NWSE : OverDiag::NESW;
      c.band = i + 1;
      c.row = r;
      if (r == 0) first_cross[i] = static_cast<int>(d.crossings_.size());
      last_cross[i] = static_cast<int>(d.crossings_.size());
      d.crossings_.push_back(c);
    }
  }

  auto attach = [&](int arc, const ArcEnd& e) {
    d.crossings_[e.crossing].arc[static_cast<int>(e.slot)] = arc;
  };
  auto add_arc = [&](const ArcEnd& e0, const ArcEnd& e1) {
    int id = static_cast<int>(d.arc_ends_.size());
    d.arc_ends_.push_back({e0, e1});
    attach(id, e0);
    attach(id, e1);
    return id;
  };

  // Arcs between consecutive crossings of one band.
  for (int i = 0; i < n; ++i) {
    int m = std::abs(v[i]);
    for (int r = 0; r + 1 < m; ++r) {
      int c0 = first_cross[i] + r, c1 = c0 + 1;
      add_arc({c0, Slot::SW}, {c1, Slot::NW});
      add_arc({c0, Slot::SE}, {c1, Slot::NE});
    }
  }

  // Boundary wiring.  Ports TL,TR,BL,BR per band; the closure connects
  // TR_i to TL_{i+1} and BR_i to BL_{i+1} cyclically; an empty band passes
  // straight through.
  enum { TL = 0, TR = 1, BL = 2, BR = 3 };
  auto port = [&](int band, int which) { return 4 * band + which; };
  std::vector<std::array<PortLink, 2>> links(4 * n);
  for (int i = 0; i < n; ++i) {
    int prev = (i + n - 1) % n, next = (i + 1) % n;
    links[port(i, TL)][0] = {PortLink::Wire, port(prev, TR), {}};
    links[port(i, TR)][0] = {PortLink::Wire, port(next, TL), {}};
    links[port(i, BL)][0] = {PortLink::Wire, port(prev, BR), {}};
    links[port(i, BR)][0] = {PortLink::Wire, port(next, BL), {}};
    if (v[i] != 0) {
      links[port(i, TL)][1] = {PortLink::Stub, -1, {first_cross[i], Slot::NW}};
      links[port(i, TR)][1] = {PortLink::Stub, -1, {first_cross[i], Slot::NE}};
      links[port(i, BL)][1] = {PortLink::Stub, -1, {last_cross[i], Slot::SW}};
      links[port(i, BR)][1] = {PortLink::Stub, -1, {last_cross[i], Slot::SE}};
    } else {
      links[port(i, TL)][1] = {PortLink::Wire, port(i, BL), {}};
      links[port(i, TR)][1] = {PortLink::Wire, port(i, BR), {}};
      links[port(i, BL)][1] = {PortLink::Wire, port(i, TL), {}};
      links[port(i, BR)][1] = {PortLink::Wire, port(i, TR), {}};
    }
  }

  std::vector<bool> stub_used(4 * n, false), port_seen(4 * n, false);
  auto other_link = [&](int p, int came_from_port) -> const PortLink& {
    const auto& l = links[p];
    if (l[0].type == PortLink::Wire && l[0].peer == came_from_port) return l[1];
    return l[0];
  };
  for (int p = 0; p < 4 * n; ++p) {
    if (links[p][1].type != PortLink::Stub || stub_used[p]) continue;
    ArcEnd start = links[p][1].stub;
    stub_used[p] = true;
    port_seen[p] = true;
    int prev_port = p;
    int q = links[p][0].peer;  // leave through the closure wire
    while (true) {
      port_seen[q] = true;
      const PortLink& out = other_link(q, prev_port);
      if (out.type == PortLink::Stub) {
        stub_used[q] = true;
        add_arc(start, out.stub);
        break;
      }
      prev_port = q;
      q = out.peer;
    }
  }

  // Remaining port cycles are crossing-free circles.
  for (int p = 0; p < 4 * n; ++p) {
    if (port_seen[p]) continue;
    ++d.free_loops_;
    int prev_port = p;
    port_seen[p] = true;
    int q = links[p][0].peer;
    while (q != p) {
      port_seen[q] = true;
      const PortLink& out = other_link(q, prev_port);
      prev_port = q;
      q = out.peer;
    }
  }

  for (const Crossing& c : d.crossings_)
    for (int s = 0; s < 4; ++s)
      if (c.arc[s] < 0) throw std::logic_error("unattached crossing slot after generation");

  d.orient_from_scratch();
  return d;
}

int component_count(const Diagram& d) { return d.traced_components() + d.free_loops(); }

Diagram switch_crossing(const Diagram& d, int crossing) {
  if (crossing < 0 || crossing >= d.crossing_count())
    throw std::invalid_argument("unknown crossing id");
  Diagram out = d;
  out.crossings_[crossing].over =
      out.crossings_[crossing].over == OverDiag::NWSE ? OverDiag::NESW : OverDiag::NWSE;
  return out;
}

// ---------------------------------------------------------------------------
// Crossing removal with rewiring: shared machinery for oriented smoothing
// and band reduction.

class Rewirer {
 public:
  struct Removal {
    int crossing;
    std::array<std::pair<Slot, Slot>, 2> joins;
  };

  static Diagram apply(const Diagram& d, const std::vector<Removal>& removals) {
    std::map<int, std::array<Slot, 4>> partner;  // removed crossing -> slot pairing
    for (const auto& r : removals) {
      std::array<Slot, 4> m{};
      for (const auto& [a, b] : r.joins) {
        m[static_cast<int>(a)] = b;
        m[static_cast<int>(b)] = a;
      }
      partner[r.crossing] = m;
    }

    Diagram nd;
    std::vector<int> new_id(d.crossing_count(), -1);
    for (int c = 0; c < d.crossing_count(); ++c) {
      if (partner.count(c)) continue;
      new_id[c] = static_cast<int>(nd.crossings_.size());
      Crossing copy = d.crossings()[c];
      copy.arc = {-1, -1, -1, -1};
      nd.crossings_.push_back(copy);
    }

    std::vector<bool> consumed(d.arc_count(), false);
    auto other_end = [&](int arc, const ArcEnd& e) {
      const auto& ends = d.arc_ends(arc);
      return ends[0] == e ? ends[1] : ends[0];
    };
    auto tail_of = [&](int arc) { return d.arc_ends(arc)[d.arc_forward(arc) ? 0 : 1]; };

    for (int c = 0; c < d.crossing_count(); ++c) {
      if (new_id[c] < 0) continue;
      for (int s = 0; s < 4; ++s) {
        if (nd.crossings_[new_id[c]].arc[s] >= 0) continue;
        ArcEnd start{c, static_cast<Slot>(s)};
        int a = d.arc_at(c, start.slot);
        bool along_flow = tail_of(a) == start;
        ArcEnd cur = start;
        ArcEnd finish{};
        while (true) {
          consumed[a] = true;
          if ((tail_of(a) == cur) != along_flow)
            throw std::logic_error("rewiring does not respect orientation");
          ArcEnd e = other_end(a, cur);
          auto it = partner.find(e.crossing);
          if (it == partner.end()) {
            finish = e;
            break;
          }
          cur = ArcEnd{e.crossing, it->second[static_cast<int>(e.slot)]};
          a = d.arc_at(cur.crossing, cur.slot);
        }
        int id = static_cast<int>(nd.arc_ends_.size());
        ArcEnd ns{new_id[start.crossing], start.slot};
        ArcEnd nf{new_id[finish.crossing], finish.slot};
        nd.arc_ends_.push_back({ns, nf});
        nd.arc_forward_.push_back(along_flow ? 1 : 0);
        nd.crossings_[ns.crossing].arc[static_cast<int>(ns.slot)] = id;
        nd.crossings_[nf.crossing].arc[static_cast<int>(nf.slot)] = id;
      }
    }

    // Arc chains living entirely on removed crossings close into circles.
    nd.free_loops_ = d.free_loops();
    for (int a0 = 0; a0 < d.arc_count(); ++a0) {
      if (consumed[a0]) continue;
      ++nd.free_loops_;
      int a = a0;
      ArcEnd entry = d.arc_ends(a0)[0];
      while (true) {
        consumed[a] = true;
        ArcEnd e = other_end(a, entry);
        auto it = partner.find(e.crossing);
        if (it == partner.end()) throw std::logic_error("dangling arc during rewiring");
        ArcEnd hop{e.crossing, it->second[static_cast<int>(e.slot)]};
        int b = d.arc_at(hop.crossing, hop.slot);
        if (b == a0 && hop == d.arc_ends(a0)[0]) break;
        entry = hop;
        a = b;
      }
    }

    nd.retrace_components();
    return nd;
  }
};

Diagram smooth_crossing(const Diagram& d, int crossing) {
  if (crossing < 0 || crossing >= d.crossing_count())
    throw std::invalid_argument("unknown crossing id");
  if (component_count(d) != 1 || d.free_loops() != 0)
    throw std::invalid_argument("smoothing requires a knot diagram");

  int dir_a = d.diag_direction(crossing, Slot::NW);
  int dir_b = d.diag_direction(crossing, Slot::NE);
  Slot arrive_a = dir_a > 0 ? Slot::NW : Slot::SE;
  Slot arrive_b = dir_b > 0 ? Slot::NE : Slot::SW;
  bool same_row = (arrive_a == Slot::NW && arrive_b == Slot::NE) ||
                  (arrive_a == Slot::SE && arrive_b == Slot::SW);
  Rewirer::Removal rem;
  rem.crossing = crossing;
  if (same_row)
    rem.joins = {{{Slot::NW, Slot::SW}, {Slot::NE, Slot::SE}}};
  else
    rem.joins = {{{Slot::NW, Slot::NE}, {Slot::SW, Slot::SE}}};

  Diagram out = Rewirer::apply(d, {rem});
  for (Crossing& c : out.crossings_) c.band = c.row = -1;
  if (component_count(out) != 2)
    throw std::logic_error("oriented smoothing of a knot must have two components");
  return out;
}

int linking_number(const Diagram& d) {
  if (component_count(d) != 2)
    throw std::invalid_argument("linking number requires exactly two components");
  int sum = 0;
  for (int c = 0; c < d.crossing_count(); ++c) {
    if (d.component_of_diag(c, Slot::NW) != d.component_of_diag(c, Slot::NE)) sum += d.sign(c);
  }
  if (sum % 2 != 0) throw std::logic_error("inter-component sign sum must be even");
  return sum / 2;
}

Diagram reduce_band(const Diagram& d) {
  for (int c = 0; c < d.crossing_count(); ++c) {
    const Crossing& cr = d.crossings()[c];
    if (cr.band < 0) continue;
    for (int c2 = 0; c2 < d.crossing_count(); ++c2) {
      const Crossing& cr2 = d.crossings()[c2];
      if (cr2.band != cr.band || cr2.row != cr.row + 1) continue;
      if (d.sign(c) != -d.sign(c2)) continue;
      Rewirer::Removal r1{c, {{{Slot::NW, Slot::SE}, {Slot::NE, Slot::SW}}}};
      Rewirer::Removal r2{c2, {{{Slot::NW, Slot::SE}, {Slot::NE, Slot::SW}}}};
      Diagram out = Rewirer::apply(d, {r1, r2});
      // Re-compact per-band rows so further reductions see adjacency.
      std::map<int, std::vector<int>> by_band;
      for (int k = 0; k < out.crossing_count(); ++k)
        if (out.crossings_[k].band > 0) by_band[out.crossings_[k].band].push_back(k);
      for (auto& [band, ids] : by_band) {
        std::sort(ids.begin(), ids.end(),
                  [&](int x, int y) { return out.crossings_[x].row < out.crossings_[y].row; });
        for (std::size_t r = 0; r < ids.size(); ++r) out.crossings_[ids[r]].row = static_cast<int>(r);
      }
      return out;
    }
  }
  return d;
}

Diagram reverse_component(const Diagram& d, int component) {
  if (component < 0 || component >= d.traced_components())
    throw std::invalid_argument("unknown component");
  Diagram out = d;
  for (int a = 0; a < out.arc_count(); ++a)
    if (out.arc_component_[a] == component) out.arc_forward_[a] ^= 1;
  return out;
}

int top_crossing_of_band(const Diagram& d, int band) {
  for (int c = 0; c < d.crossing_count(); ++c)
    if (d.crossings()[c].band == band && d.crossings()[c].row == 0) return c;
  throw std::invalid_argument("band has no crossings");
}

// ---------------------------------------------------------------------------
// Serialization

std::string Diagram::pd_code() const {
  std::string out;
  for (int c = 0; c < crossing_count(); ++c) {
    Slot under_ref = crossings_[c].over == OverDiag::NWSE ? Slot::NE : Slot::NW;
    int dir = diag_direction(c, under_ref);
    Slot in_under = dir > 0 ? under_ref : diag_opposite(under_ref);
    out += "X(";
    Slot s = in_under;
    for (int k = 0; k < 4; ++k) {
      if (k) out += ',';
      out += std::to_string(arc_at(c, s));
      s = ccw_next(s);
    }
    out += sign(c) > 0 ? ",+)" : ",-)";
    out += '\n';
  }
  return out;
}

std::string Diagram::canonical_code() const {
  if (traced_components_ != 1 || free_loops_ != 0)
    throw std::invalid_argument("canonical code is defined for knot diagrams");
  if (crossing_count() == 0) return "unknot";

  struct Passage {
    int crossing;
    bool over;
    int sign;
  };
  std::vector<Passage> walk;
  int a = 0;
  do {
    ArcEnd head = arc_forward_[a] ? arc_ends_[a][1] : arc_ends_[a][0];
    bool on_nwse = on_nwse_diag(head.slot);
    bool over = (crossings_[head.crossing].over == OverDiag::NWSE) == on_nwse;
    walk.push_back({head.crossing, over, sign(head.crossing)});
    a = arc_at(head.crossing, diag_opposite(head.slot));
  } while (a != 0);

  const int len = static_cast<int>(walk.size());
  std::string best;
  for (int start = 0; start < len; ++start) {
    for (int dir : {1, -1}) {
      std::vector<int> label(crossing_count(), -1);
      int next_label = 0;
      std::string code;
      for (int k = 0; k < len; ++k) {
        const Passage& p = walk[((start + dir * k) % len + len) % len];
        if (label[p.crossing] < 0) label[p.crossing] = next_label++;
        code += std::to_string(label[p.crossing]);
        code += p.over ? 'o' : 'u';
        code += p.sign > 0 ? '+' : '-';
        code += ' ';
      }
      if (best.empty() || code < best) best = code;
    }
  }
  return best;
}

}  // namespace pretzel
