#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "tqc/constants.hpp"

namespace tqc {

// Anyon charge label.  Valid labels are 0,1,2,3; label 0 is the vacuum.
using Label = int;

inline constexpr Label kVacuum = 0;
inline constexpr int kLabelCount = 4;

bool is_valid_label(Label a);

// Fusion rule: {c : |a-b| <= c <= min(a+b, 6-a-b), a+b+c even}, ascending.
std::vector<Label> fuse(Label a, Label b);

// Quantum dimension [a+1] = sin((a+1)*pi/5) / sin(pi/5).
// qdim(0) = qdim(3) = 1, qdim(1) = qdim(2) = (1+sqrt(5))/2.
double qdim(Label a);

// A fusion path records the running total charge after absorbing each
// type-1 anyon left to right: (p_0, p_1, ..., p_n) with p_0 = 0 and every
// step admissible under fusion with 1 (a walk on the path graph 0-1-2-3).
struct FusionPath {
  std::vector<Label> labels;

  int anyons() const { return static_cast<int>(labels.size()) - 1; }
  Label end() const { return labels.back(); }
  bool operator==(const FusionPath&) const = default;
  std::string to_string() const;
};

bool is_admissible_path(const FusionPath& p);

// All fusion paths on n anyons ending at `end`, in lexicographic order of
// the label sequences.  This ordering fixes the basis of every matrix in
// the repo.
std::vector<FusionPath> fusion_paths(int n, Label end);

// Number of such paths, counted independently by transfer matrix
// (integer walk count on the path graph 0-1-2-3).  For 2m anyons in the
// vacuum sector the count is the alternate Fibonacci number F(2m-1) under
// the convention F(1) = F(2) = 1: 1, 2, 5, 13, 34, ...
std::uint64_t fusion_path_count(int n, Label end);

// Ordered basis of the state space for n anyons with total charge `sector`.
class PathBasis {
 public:
  PathBasis(int n, Label sector);

  int anyons() const { return anyons_; }
  Label sector() const { return sector_; }
  int dim() const { return static_cast<int>(paths_.size()); }
  const std::vector<FusionPath>& paths() const { return paths_; }
  const FusionPath& path(int i) const { return paths_[i]; }

  // Index of a path in the basis; -1 if absent.
  int index_of(const FusionPath& p) const;

 private:
  int anyons_;
  Label sector_;
  std::vector<FusionPath> paths_;
};

// Modular S-matrix, S_ab = sqrt(2/5) * sin((a+1)(b+1)*pi/5).
// Real, symmetric, and an involution (the theory is self-dual).
Eigen::Matrix4d s_matrix();

}  // namespace tqc
