#pragma once

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "tqc/braid.hpp"
#include "tqc/constants.hpp"

namespace tqc {

// Compile target unitaries on the computational subspace into braid words
// by exhaustive search over freely reduced words, with optional recursive
// group-commutator refinement.

struct GateTarget {
  Eigen::MatrixXcd matrix;  // 2x2 (one batch) or 4x4 (two adjacent batches)
  std::vector<int> scope;   // batch indices, e.g. {1} or {1,2}

  int batches() const { return static_cast<int>(scope.size()); }
};

void validate_gate_target(const GateTarget& t);

struct CompilationResult {
  BraidWord word;          // batch-local letters (strands 4 or 8)
  double distance = 0.0;   // gate_distance(image restricted to scope, target)
  double leakage_bound = 0.0;
  int depth_searched = 0;

  // Sidecar JSON {distance, leakage_bound, depth_searched}.
  std::string sidecar_json() const;
};

// Phase-invariant operator-norm metric:
//   gate_distance(U, V) = min over |phi|=1 of ||U - phi*V||_op.
// Minimized by a coarse sweep over the phase circle followed by
// golden-section refinement to 1e-12.  Symmetric; zero iff U = phi*V.
double gate_distance(const Eigen::MatrixXcd& u, const Eigen::MatrixXcd& v);

// Image of a one-batch word (letters 1..3 on 4 strands) on the batch's
// charge-0 two-dimensional sector, in the {0,2} basis.
Eigen::Matrix2cd batch_image(const BraidWord& w);

// Image of a two-batch word (letters 1..7 on 8 strands) compressed to the
// 4-dimensional computational subspace (basis 00,02,20,22), plus the
// leakage bound ||(I-P) U P||^2.
struct TwoBatchImage {
  Eigen::Matrix4cd compressed;
  double leakage = 0.0;
};
TwoBatchImage two_batch_image(const BraidWord& w);

// Exhaustive search over freely reduced words up to max_depth in the
// scope's generators (3 per, both signs, for one batch; 7 for two).
// Returns the word minimizing gate_distance among those with leakage
// <= leakage_tol; ties break shortest-then-lexicographic (letter order
// 1 < -1 < 2 < -2 < ...).  Deterministic, independent of thread count.
// Throws CompileInfeasibleError if no word satisfies leakage_tol.
CompilationResult compile(const GateTarget& target, int max_depth,
                          double leakage_tol = 1e-2, int threads = 1);

// Recursive refinement for one-batch targets.  Never returns a result
// worse than `base`; with levels = 0, returns base unchanged.  Refinement
// only engages when base.distance < kSkCoarseNetThreshold (the coarse-net
// radius below which the commutator construction converges; measured
// empirically on this gate set).
inline constexpr double kSkCoarseNetThreshold = 0.5;
CompilationResult sk_refine(const GateTarget& target, const CompilationResult& base,
                            int levels);

}  // namespace tqc
