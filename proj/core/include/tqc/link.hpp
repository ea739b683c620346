#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tqc/braid.hpp"

namespace tqc {

// Planar diagram of a plat closure: n cups at the bottom pairing strands
// (1,2),(3,4),..., a stack of rows (crossings, measurement loops, test
// kinks), and n caps at the top pairing (1,2),(3,4),...
//
// Conventions, fixed repo-wide:
//  * Crossing ports are numbered 0..3 counterclockwise starting at the
//    lower-left: 0=SW, 1=SE, 2=NE, 3=NW for a braid crossing.  One strand
//    occupies ports {0,2}, the other {1,3}; `over02` records which is on
//    top.
//  * A positive braid letter +i puts the {1,3} strand on top; -i puts
//    {0,2} on top.  With rho(sigma_i) = A*I + A^-1*e_i this makes the
//    A-smoothing of a positive crossing the identity smoothing, and gives
//    writhe +2 for plat("1 1") on 2 strands.
//  * A measurement loop around a cup pair is a flat encircling ring whose
//    top arc passes over both strands and whose bottom arc passes under
//    both (4 crossings).  It threads the pair, so it links a strand
//    passing through it once.  Ring crossing ports: 0=W, 1=S, 2=E, 3=N;
//    the ring itself is the {0,2} strand.
//  * count_minima counts the canonical plat presentation: one minimum per
//    bottom cup, plus one per inserted ring, plus one per test kink.
class LinkDiagram {
 public:
  enum class CrossingKind : std::uint8_t { kBraid, kRingTop, kRingBottom, kKink };

  struct Crossing {
    bool over02;        // true if the {0,2} strand passes over
    CrossingKind kind;
    int wire;           // leftmost wire involved (0-based)
    int row;            // event row, bottom to top
  };

  LinkDiagram() = default;

  int strands() const { return strands_; }
  int crossing_count() const { return static_cast<int>(crossings_.size()); }
  const std::vector<Crossing>& crossings() const { return crossings_; }
  // Perfect matching on ports: arc(p) = far end of the strand arc at p.
  const std::vector<int>& arcs() const { return arcs_; }
  // Closed circles that meet no crossing (e.g. untouched cup-cap pairs).
  int free_loops() const { return free_loops_; }
  int cup_count() const { return strands_ / 2; }
  int ring_count() const { return rings_; }
  int kink_count() const { return kinks_; }

  // Construction (value semantics; each step returns a new diagram).
  static LinkDiagram plat_closure(const BraidWord& b);
  LinkDiagram with_word_appended(const BraidWord& b) const;
  // Ring around the strands of bottom cup `pair` (1-based), inserted above
  // all existing rows.
  LinkDiagram with_measurement_loop(int pair) const;
  // Reidemeister-I test kink on `wire` (1-based) with the given chirality.
  LinkDiagram with_kink(int wire, int sign) const;

  // JSON export (schema documented in the README).
  std::string to_json() const;

 private:
  int strands_ = 0;
  struct Event {
    enum class Kind : std::uint8_t { kLetter, kRing, kKink } kind;
    int a = 0;  // letter: signed index; ring: 1-based pair; kink: 1-based wire
    int b = 0;  // kink: sign
  };
  std::vector<Event> events_;

  std::vector<Crossing> crossings_;
  std::vector<int> arcs_;
  int free_loops_ = 0;
  int rings_ = 0;
  int kinks_ = 0;

  void rebuild();
};

struct LinkStats {
  int components = 0;
  int writhe = 0;
  int minima = 0;
};

// Number of closed curves in the diagram.
int count_components(const LinkDiagram& d);

// Local minima of the height function in the canonical presentation.
int count_minima(const LinkDiagram& d);

// Signed crossing sum under the right-hand rule.  Components are oriented
// by traversal from their lowest-numbered port (entering that port's
// crossing first); `flips` reverses the orientation of the components whose
// index (in discovery order) it marks true.  Components that meet no
// crossing contribute nothing but still occupy indices after all
// crossing-bearing components.
int writhe(const LinkDiagram& d, const std::vector<bool>& flips = {});

LinkStats diagram_stats(const LinkDiagram& d, const std::vector<bool>& flips = {});

// plat_closure as a free function, matching the construction above.
LinkDiagram plat_closure(const BraidWord& b);

// Insert a measurement ring around bottom cup `pair` (1-based).
LinkDiagram insert_measurement_loop(const LinkDiagram& d, int pair);

}  // namespace tqc
