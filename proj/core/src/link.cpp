#include "tqc/link.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace tqc {

namespace {

// Pending wire ends and join-graph nodes.  Node ids: ports are >= 0;
// virtual degree-2 connectors (cups, caps) are < 0, encoded as -(vid+1).
constexpr long virt(int vid) { return -static_cast<long>(vid) - 1; }

}  // namespace

LinkDiagram LinkDiagram::plat_closure(const BraidWord& b) {
  validate_braid_word(b);
  if (b.strands % 2 != 0) throw std::invalid_argument("plat closure needs an even strand count");
  LinkDiagram d;
  d.strands_ = b.strands;
  for (int letter : b.letters) {
    d.events_.push_back(Event{Event::Kind::kLetter, letter, 0});
  }
  d.rebuild();
  return d;
}

LinkDiagram plat_closure(const BraidWord& b) { return LinkDiagram::plat_closure(b); }

LinkDiagram LinkDiagram::with_word_appended(const BraidWord& b) const {
  validate_braid_word(b);
  if (b.strands != strands_) throw std::invalid_argument("strand count mismatch");
  LinkDiagram d = *this;
  for (int letter : b.letters) {
    d.events_.push_back(Event{Event::Kind::kLetter, letter, 0});
  }
  d.rebuild();
  return d;
}

LinkDiagram LinkDiagram::with_measurement_loop(int pair) const {
  if (pair < 1 || pair > strands_ / 2) {
    throw std::invalid_argument("cup pair index out of range: " + std::to_string(pair));
  }
  LinkDiagram d = *this;
  d.events_.push_back(Event{Event::Kind::kRing, pair, 0});
  d.rebuild();
  return d;
}

LinkDiagram insert_measurement_loop(const LinkDiagram& d, int pair) {
  return d.with_measurement_loop(pair);
}

LinkDiagram LinkDiagram::with_kink(int wire, int sign) const {
  if (wire < 1 || wire > strands_) throw std::invalid_argument("wire index out of range");
  if (sign != 1 && sign != -1) throw std::invalid_argument("kink sign must be +1 or -1");
  LinkDiagram d = *this;
  d.events_.push_back(Event{Event::Kind::kKink, wire, sign});
  d.rebuild();
  return d;
}

void LinkDiagram::rebuild() {
  crossings_.clear();
  arcs_.clear();
  free_loops_ = 0;
  rings_ = 0;
  kinks_ = 0;

  const int n_cups = strands_ / 2;
  // Virtual connectors: cups 0..n_cups-1, caps n_cups..2*n_cups-1.
  const int n_virtual = 2 * n_cups;
  std::vector<std::vector<long>> vadj(n_virtual);
  std::vector<std::pair<long, long>> joins;

  std::vector<long> pend(strands_);
  for (int w = 0; w < strands_; ++w) pend[w] = virt(w / 2);

  auto add_join = [&](long x, long y) { joins.emplace_back(x, y); };

  auto new_crossing = [&](bool over02, CrossingKind kind, int wire, int row) {
    crossings_.push_back(Crossing{over02, kind, wire, row});
    return (static_cast<int>(crossings_.size()) - 1) * 4;
  };

  int row = 0;
  for (const Event& ev : events_) {
    switch (ev.kind) {
      case Event::Kind::kLetter: {
        // Ports 0=SW, 1=SE, 2=NE, 3=NW.  Positive letters put the {1,3}
        // strand on top.
        const int i = std::abs(ev.a) - 1;  // left wire, 0-based
        const int base = new_crossing(ev.a < 0, CrossingKind::kBraid, i, row);
        add_join(pend[i], base + 0);
        add_join(pend[i + 1], base + 1);
        pend[i] = base + 3;
        pend[i + 1] = base + 2;
        break;
      }
      case Event::Kind::kRing: {
        // Flat encircling ring around wires (a, a+1): top arc over both,
        // bottom arc under both.  Ring crossing ports 0=W, 1=S, 2=E, 3=N;
        // the ring is the {0,2} strand.
        const int a = 2 * (ev.a - 1);
        const int b = a + 1;
        const int ba = new_crossing(false, CrossingKind::kRingBottom, a, row);
        const int bb = new_crossing(false, CrossingKind::kRingBottom, b, row);
        const int ta = new_crossing(true, CrossingKind::kRingTop, a, row);
        const int tb = new_crossing(true, CrossingKind::kRingTop, b, row);
        add_join(pend[a], ba + 1);
        add_join(ba + 3, ta + 1);
        pend[a] = ta + 3;
        add_join(pend[b], bb + 1);
        add_join(bb + 3, tb + 1);
        pend[b] = tb + 3;
        // Ring arcs: left tip, top middle, right tip, bottom middle.
        add_join(ta + 0, ba + 0);
        add_join(ta + 2, tb + 0);
        add_join(tb + 2, bb + 2);
        add_join(bb + 0, ba + 2);
        ++rings_;
        break;
      }
      case Event::Kind::kKink: {
        // Curl on one wire: enter SW, loop arc joins NE to SE, exit NW.
        const int w = ev.a - 1;
        const int base = new_crossing(ev.b > 0, CrossingKind::kKink, w, row);
        add_join(pend[w], base + 0);
        add_join(base + 2, base + 1);
        pend[w] = base + 3;
        ++kinks_;
        break;
      }
    }
    ++row;
  }

  // Caps close off pairs (0,1),(2,3),... through virtual connectors.
  for (int j = 0; j < n_cups; ++j) {
    const long cap = virt(n_cups + j);
    add_join(pend[2 * j], cap);
    add_join(pend[2 * j + 1], cap);
  }

  // Contract virtual connectors into direct port-port arcs.
  const int n_ports = static_cast<int>(crossings_.size()) * 4;
  std::vector<long> port_join(n_ports, -1);
  for (auto [x, y] : joins) {
    if (x >= 0) port_join[x] = y;
    if (y >= 0) port_join[y] = x;
    if (x < 0) vadj[-x - 1].push_back(y);
    if (y < 0) vadj[-y - 1].push_back(x);
  }

  arcs_.assign(n_ports, -1);
  std::vector<char> vseen(n_virtual, 0);
  for (int p = 0; p < n_ports; ++p) {
    if (arcs_[p] >= 0) continue;
    long cur = port_join[p];
    long prev = p;
    while (cur < 0) {
      const int vid = static_cast<int>(-cur - 1);
      vseen[vid] = 1;
      const auto& adj = vadj[vid];
      if (adj.size() != 2) throw std::logic_error("connector degree != 2");
      const long nxt = (adj[0] == prev) ? adj[1] : adj[0];
      prev = cur;
      cur = nxt;
    }
    arcs_[p] = static_cast<int>(cur);
    arcs_[static_cast<std::size_t>(cur)] = p;
  }

  // Remaining virtual-only cycles are crossingless circles.
  for (int vid = 0; vid < n_virtual; ++vid) {
    if (vseen[vid] || vadj[vid].empty()) continue;
    long prev = virt(vid);
    long cur = vadj[vid][0];
    vseen[vid] = 1;
    while (cur != virt(vid)) {
      const int v2 = static_cast<int>(-cur - 1);
      vseen[v2] = 1;
      const auto& adj = vadj[v2];
      const long nxt = (adj[0] == prev) ? adj[1] : adj[0];
      prev = cur;
      cur = nxt;
    }
    ++free_loops_;
  }
}

namespace {

// Oriented traversal of all crossing-bearing components.  For each crossing
// strand ({0,2} and {1,3}) records the exit port under the traversal
// orientation.  Components are discovered from their lowest port, entering
// that port's crossing first.
struct Traversal {
  int components = 0;
  // exit[crossing][s], s=0 for strand {0,2}, s=1 for {1,3}; -1 if unvisited.
  std::vector<std::array<int, 2>> exits;
  std::vector<int> component_of_crossing_strand_flat;  // 2*ci+s -> component id
};

Traversal trace(const LinkDiagram& d) {
  const int n_ports = d.crossing_count() * 4;
  Traversal t;
  t.exits.assign(d.crossing_count(), {-1, -1});
  t.component_of_crossing_strand_flat.assign(2 * d.crossing_count(), -1);
  std::vector<char> seen(n_ports, 0);
  for (int start = 0; start < n_ports; ++start) {
    if (seen[start]) continue;
    const int comp = t.components++;
    int p = start;
    do {
      seen[p] = 1;
      const int exit = p ^ 2;  // through the crossing
      seen[exit] = 1;
      const int ci = p / 4;
      const int s = p & 1;
      t.exits[ci][s] = exit;
      t.component_of_crossing_strand_flat[2 * ci + s] = comp;
      p = d.arcs()[exit];
    } while (p != start);
  }
  return t;
}

}  // namespace

int count_components(const LinkDiagram& d) {
  return trace(d).components + d.free_loops();
}

int count_minima(const LinkDiagram& d) {
  return d.cup_count() + d.ring_count() + d.kink_count();
}

int writhe(const LinkDiagram& d, const std::vector<bool>& flips) {
  const Traversal t = trace(d);
  auto flipped = [&](int comp) {
    return comp < static_cast<int>(flips.size()) && flips[comp];
  };
  int w = 0;
  for (int ci = 0; ci < d.crossing_count(); ++ci) {
    int exit02 = t.exits[ci][0];
    int exit13 = t.exits[ci][1];
    if (exit02 < 0 || exit13 < 0) throw std::logic_error("untraversed crossing");
    if (flipped(t.component_of_crossing_strand_flat[2 * ci + 0])) exit02 ^= 2;
    if (flipped(t.component_of_crossing_strand_flat[2 * ci + 1])) exit13 ^= 2;
    const int over_exit = d.crossings()[ci].over02 ? exit02 : exit13;
    const int under_exit = d.crossings()[ci].over02 ? exit13 : exit02;
    // Sign convention fixed jointly with the smoothing rule: a kink whose
    // bracket factor is -A^3 counts +1, so the Jones value is invariant
    // under Reidemeister I.  With ports in counterclockwise order this
    // makes a crossing positive when the under strand exits clockwise-next
    // from the over strand's exit.
    w += (((under_exit - over_exit) & 3) == 3) ? 1 : -1;
  }
  return w;
}

LinkStats diagram_stats(const LinkDiagram& d, const std::vector<bool>& flips) {
  LinkStats s;
  s.components = count_components(d);
  s.writhe = writhe(d, flips);
  s.minima = count_minima(d);
  return s;
}

std::string LinkDiagram::to_json() const {
  std::ostringstream os;
  os << "{\"strands\":" << strands_ << ",\"cups\":[";
  for (int j = 0; j < cup_count(); ++j) {
    if (j) os << ',';
    os << '[' << 2 * j + 1 << ',' << 2 * j + 2 << ']';
  }
  os << "],\"caps\":[";
  for (int j = 0; j < cup_count(); ++j) {
    if (j) os << ',';
    os << '[' << 2 * j + 1 << ',' << 2 * j + 2 << ']';
  }
  os << "],\"crossings\":[";
  bool first = true;
  for (std::size_t i = 0; i < crossings_.size(); ++i) {
    const auto& c = crossings_[i];
    if (!first) os << ',';
    first = false;
    os << "{\"row\":" << c.row << ",\"kind\":\"";
    switch (c.kind) {
      case CrossingKind::kBraid: os << "braid"; break;
      case CrossingKind::kRingTop: os << "ring_top"; break;
      case CrossingKind::kRingBottom: os << "ring_bottom"; break;
      case CrossingKind::kKink: os << "kink"; break;
    }
    os << "\",\"wire\":" << c.wire + 1 << ",\"over\":\""
       << (c.over02 ? "02" : "13") << "\"}";
  }
  os << "],\"loops\":[";
  first = true;
  for (const auto& ev : events_) {
    if (ev.kind != Event::Kind::kRing) continue;
    if (!first) os << ',';
    first = false;
    os << "{\"pair\":" << ev.a << '}';
  }
  os << "]}";
  return os.str();
}

}  // namespace tqc
