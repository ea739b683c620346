#pragma once

#include <map>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "tqc/braid.hpp"
#include "tqc/bracket.hpp"
#include "tqc/constants.hpp"

namespace tqc {

// The four-step computation model on a disk of type-1 anyons:
// initialize pairs from the vacuum, braid under the Jones representation,
// measure the fusion channel of the leftmost pair.
//
// A register of m anyons (m even) holds a normalized state over the
// sector-0 fusion-path basis.  Batches of 4 consecutive anyons encode
// qubits: the computational paths are those with p_j = 1 at odd j,
// p_j = 0 at j = 0 mod 4, and p_j in {0,2} at j = 2 mod 4; the {0,2}
// values read out as bits.
class AnyonRegister {
 public:
  int anyons() const { return anyons_; }
  const Eigen::VectorXcd& state() const { return state_; }
  int dim() const { return static_cast<int>(state_.size()); }

  static AnyonRegister make(int anyons, Eigen::VectorXcd state);

 private:
  int anyons_ = 0;
  Eigen::VectorXcd state_;
};

struct MeasurementResult {
  double prob0 = 0.0;  // probability of fusion channel 0 (vacuum)
};

// State on the single alternating path (0,1,0,1,...,0).  Every pair
// projector e_{2i-1}/delta fixes it.  Throws on odd or < 4 counts.
AnyonRegister initialize(int n_anyons);

// Apply represent_word(w, sector 0).  w.strands must equal the register
// size.
AnyonRegister execute_braid(const AnyonRegister& r, const BraidWord& w);

// prob0 = <state| e_{2i-1}/delta |state> for pair i (1-based).
MeasurementResult measure_pair(const AnyonRegister& r, int pair);

// Probability weight outside the computational path set.
double leakage(const AnyonRegister& r);

// Probabilities of each computational bit string (characters '0'/'2',
// one per batch).  Sums to 1 - leakage.
std::map<std::string, double> readout_distribution(const AnyonRegister& r);

// Closed-form route to measure_pair(execute_braid(initialize, b), 1):
// build L = plat(b, ring around pair 1, b^-1), then
//
//   prob0 = 1/(1 + delta^2) * (1 + (-1)^(c+w) * (-a)^(3w) * Vhat / delta^(m-2))
//
// with c, w, m the component count, writhe and minima count of L,
// a = exp(pi*i/10), and Vhat = (-delta) * jones_at(L) the unreduced Jones
// value at the fifth root.  Throws CrossingBudgetError when the plat
// diagram exceeds the state-sum budget.
double prob_via_jones(const BraidWord& b, const BracketOptions& opts = {});

// Intermediate quantities of the formula route, for reports and tests.
struct JonesProbeReport {
  LinkStats stats;
  Complex bracket;
  Complex jones;
  double prob0 = 0.0;
};
JonesProbeReport prob_via_jones_report(const BraidWord& b, const BracketOptions& opts = {});

// The diagram the formula route evaluates.
LinkDiagram measurement_link(const BraidWord& b);

}  // namespace tqc
