#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "tqc/constants.hpp"

namespace tqc {

// Checker for the k-code condition: a subspace W of an n-fold tensor
// product is a k-code when the compression B^dag O B of every k-local
// operator O to W is a scalar multiple of the identity.

// Orthonormal basis of a subspace of (C^d)^{tensor n}.
// Throws std::invalid_argument if the Gram matrix deviates from the
// identity by more than 1e-10, and ResourceLimitError if d^n > 4096.
class Subspace {
 public:
  Subspace(int n, int d, Eigen::MatrixXcd basis);

  int factors() const { return n_; }
  int local_dim() const { return d_; }
  int dim() const { return static_cast<int>(basis_.cols()); }
  long total_dim() const { return basis_.rows(); }
  const Eigen::MatrixXcd& basis() const { return basis_; }

  // JSON: {"n": int, "d": int, "basis": [[[re,im], ...], ...]}.
  static Subspace from_json(const std::string& json_text);
  std::string to_json() const;

 private:
  int n_;
  int d_;
  Eigen::MatrixXcd basis_;  // total_dim x dim, columns orthonormal
};

// A k-local operator: a matrix on the supported factors, identity
// elsewhere.  The spanning set used by the scan is the matrix units
// E_{IJ} on each exact-k support; smaller supports are covered by
// identity-padding (the matrix units on k factors span every operator
// supported there).
struct LocalOperatorSpec {
  std::vector<int> support;  // 0-based factor indices, ascending
  Eigen::MatrixXcd op;       // d^|support| x d^|support|

  std::string to_string() const;
};

// Spanning set of all k-local operators: matrix units on each k-subset of
// factors, supports in lexicographic order, units in row-major (I, J)
// order.  Size C(n,k) * d^(2k).
std::vector<LocalOperatorSpec> local_operator_basis(int n, int d, int k);

// Streaming variant; stops early when fn returns false.
void for_each_local_operator(int n, int d, int k,
                             const std::function<bool(const LocalOperatorSpec&)>& fn);

struct KCodeReport {
  bool is_code = false;
  std::optional<LocalOperatorSpec> witness;  // first violator in scan order
  double worst_deviation = 0.0;              // max ||M - (tr M / dim) I||_F seen
};

// True iff every spanning operator compresses to a scalar within tol
// (Frobenius norm, relative to max(1, ||M||_F)).  The witness, when
// present, is the lexicographically first violating spec regardless of
// thread count.
KCodeReport is_k_code(const Subspace& w, int k, double tol = 1e-8, int threads = 1);

// Largest k with is_k_code true; 0 if even k = 1 fails.
int max_k(const Subspace& w, double tol = 1e-8, int threads = 1);

// Compression B^dag O B of a local operator to the subspace.
Eigen::MatrixXcd compress(const Subspace& w, const LocalOperatorSpec& spec);

// Stock subspaces used by tests and the CLI.
Subspace ghz_subspace();                  // span{|000>, |111>}
Subspace five_qubit_code_subspace();      // [[5,1,3]] stabilizer code space
Subspace full_space_subspace(int n, int d);

}  // namespace tqc
