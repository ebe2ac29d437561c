#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "pretzel/twist.hpp"

namespace pretzel {

// Slots of a crossing, viewed as a small square with two strands passing
// through it diagonally: one strand occupies NW/SE, the other NE/SW.
enum class Slot : std::uint8_t { NW = 0, NE = 1, SW = 2, SE = 3 };

// Which diagonal carries the over-strand.
enum class OverDiag : std::uint8_t { NWSE, NESW };

struct ArcEnd {
  int crossing = -1;
  Slot slot = Slot::NW;
  bool operator==(const ArcEnd&) const = default;
};

struct Crossing {
  std::array<int, 4> arc{};  // arc id at NW, NE, SW, SE
  OverDiag over = OverDiag::NWSE;
  // Generator metadata: 1-based band and 0-based row within the band.
  // Kept through switch/reduce; cleared (-1) by smoothing.
  int band = -1;
  int row = -1;
};

// An oriented planar diagram code.  Arcs are edges of the underlying
// 4-valent graph; crossing-free circles are only counted (free_loops),
// they carry no invariant data beyond their existence.
//
// Diagrams are immutable values: the operations below return new diagrams.
class Diagram {
 public:
  const std::vector<Crossing>& crossings() const { return crossings_; }
  int crossing_count() const { return static_cast<int>(crossings_.size()); }
  int arc_count() const { return static_cast<int>(arc_ends_.size()); }
  const std::array<ArcEnd, 2>& arc_ends(int arc) const { return arc_ends_[arc]; }
  int free_loops() const { return free_loops_; }

  int traced_components() const { return traced_components_; }
  int component_of_arc(int arc) const { return arc_component_[arc]; }

  // True when the arc is oriented from ends[0] to ends[1].
  bool arc_forward(int arc) const { return arc_forward_[arc]; }

  int arc_at(int crossing, Slot s) const { return crossings_[crossing].arc[static_cast<int>(s)]; }

  // +1 when the strand on the given diagonal runs downward through the
  // crossing (NW->SE resp. NE->SW), -1 otherwise.
  int diag_direction(int crossing, Slot entry_slot) const;

  // Crossing sign from the over marker and the two strand directions.
  int sign(int crossing) const;

  int writhe() const;

  // Component of the strand occupying the NW/SE (resp. NE/SW) diagonal.
  int component_of_diag(int crossing, Slot diag_slot) const;

  // One crossing per line, "X(a,b,c,d,s)": arcs counterclockwise starting
  // from the incoming under-strand, s the crossing sign.  Stable for
  // golden-file comparisons of generated diagrams.
  std::string pd_code() const;

  // Label-independent code for single-component diagrams: minimal over all
  // traversal starts and both directions.  Two knot diagrams are equal as
  // codes iff these strings match.
  std::string canonical_code() const;

 private:
  friend Diagram build_diagram(const TwistVector&);
  friend Diagram switch_crossing(const Diagram&, int);
  friend Diagram smooth_crossing(const Diagram&, int);
  friend Diagram reduce_band(const Diagram&);
  friend Diagram reverse_component(const Diagram&, int);
  friend class Rewirer;

  void orient_from_scratch();
  void retrace_components();

  std::vector<Crossing> crossings_;
  std::vector<std::array<ArcEnd, 2>> arc_ends_;
  int free_loops_ = 0;

  std::vector<std::uint8_t> arc_forward_;
  std::vector<int> arc_component_;
  int traced_components_ = 0;
};

// Standard pretzel template: n twist regions side by side, |p_i| crossings
// in region i, closed cyclically across the top and bottom.  Chirality is
// pinned so that build_diagram((1,1,1)) has three positive crossings.
Diagram build_diagram(const TwistVector& v);

int component_count(const Diagram& d);

// Flips the over marker at one crossing; everything else is unchanged.
Diagram switch_crossing(const Diagram& d, int crossing);

// Oriented smoothing at a crossing of a knot diagram; the result always
// has exactly two components.
Diagram smooth_crossing(const Diagram& d, int crossing);

// Half the signed count of crossings between the two components.
// Requires exactly two components (throws otherwise).
int linking_number(const Diagram& d);

// Removes one adjacent pair of opposite-sign crossings inside a band, if
// any; no-op otherwise.  Invariants (component count, linking number) are
// unchanged.
Diagram reduce_band(const Diagram& d);

// Reverses the orientation of one traced component (test aid for the
// orientation-dependence of the linking number).
Diagram reverse_component(const Diagram& d, int component);

// The row-0 crossing of a 1-based band.
int top_crossing_of_band(const Diagram& d, int band);

}  // namespace pretzel
