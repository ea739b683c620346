#pragma once

#include <vector>

#include "tqc/constants.hpp"
#include "tqc/link.hpp"

namespace tqc {

struct BracketOptions {
  // 2^crossings smoothing states are enumerated; refuse beyond this.
  int max_crossings = 22;
  int threads = 1;
};

// Kauffman bracket by the state sum
//   <d> = sum over smoothings of A^(#A - #B) * delta^(#loops - 1),
// delta = -A^2 - A^-2, normalized so the unknot gives 1.
//
// The A-smoothing of a crossing joins each over-strand port to the under
// port counterclockwise-adjacent to it; with the diagram conventions in
// link.hpp this resolves a positive braid crossing as
// A*(identity) + A^-1*(cup-cap), consistent with rho(sigma_i).
//
// The result is independent of `threads` bit for bit: states are summed in
// fixed 2^16 blocks and the block sums are combined in index order.
// Throws CrossingBudgetError when the diagram exceeds max_crossings.
Complex kauffman_bracket(const LinkDiagram& d, Complex A = kBraidA,
                         const BracketOptions& opts = {});

// Jones polynomial evaluated at t = A^-4 = exp(-2*pi*i/5):
//   V(d) = (-1)^(c-1) * (-A)^(-3w) * <d>
// with c the component count and w the writhe under the given orientation.
// The (-1)^(c-1) factor selects the principal branch t^{1/2} = exp(-pi*i/5)
// for links with half-integer exponents.  |jones_at| is independent of the
// orientation choice.
Complex jones_at(const LinkDiagram& d, const std::vector<bool>& flips = {},
                 const BracketOptions& opts = {});

}  // namespace tqc
