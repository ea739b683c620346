#pragma once

#include <vector>

#include <Eigen/Dense>

#include "tqc/braid.hpp"
#include "tqc/constants.hpp"
#include "tqc/fusion.hpp"

namespace tqc {

// Unitary Jones representation of the braid group on the fusion-path basis,
// via the Temperley-Lieb path model at loop value delta = 2*cos(pi/5).
//
// The TL generator e_i (1 <= i <= n-1) acts on path position i:
//   <p'|e_i|p> = sqrt(qdim(p_i) * qdim(p'_i)) / qdim(p_{i-1})
// when p and p' agree away from position i and p_{i-1} = p_{i+1}, else 0.
// Then e_i^2 = delta * e_i, e_i e_{i+-1} e_i = e_i, far generators commute,
// and rho(sigma_i) = A*I + A^-1*e_i is unitary with spectrum in {A, -A^-3}.

// Total charges reachable by n anyons (the two parity sectors).
std::vector<Label> admissible_sectors(int n);

// e_i on the (n, sector) path basis.  Real symmetric.
Eigen::MatrixXd tl_generator(int i, int n, Label sector);

// rho(sigma_i) = A*I + A^-1 * e_i.  Unitary.
Eigen::MatrixXcd braid_generator(int i, int n, Label sector);

// Ordered product of generator images; the first letter of w acts first
// (i.e. the result is rho(w_k) * ... * rho(w_1) as a matrix on column
// vectors).  Negative letters map to adjoints of the positive images.
Eigen::MatrixXcd represent_word(const BraidWord& w, Label sector);

// <init| represent_word(w, 0) |init> where |init> is the alternating path
// (0,1,0,1,...,0) on an even number of strands.
//
// Relation to the diagrammatic Kauffman bracket of the plat closure,
// calibrated once against the state-sum oracle and frozen:
//   bracket(plat(w)) = plat_kappa(strands) * plat_amplitude(w)
// with no per-crossing phase.
Complex plat_amplitude(const BraidWord& w);

// Calibration constant: delta^(strands/2 - 1).
double plat_kappa(int strands);

// Basis index of the alternating initial path (0,1,0,...,0) in sector 0.
int initial_path_index(int n);

}  // namespace tqc
