#include "tqc/compiler.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numbers>
#include <optional>
#include <sstream>
#include <thread>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "tqc/errors.hpp"
#include "tqc/fusion.hpp"
#include "tqc/tl_rep.hpp"

namespace tqc {

void validate_gate_target(const GateTarget& t) {
  const long dim = t.matrix.rows();
  if (t.matrix.cols() != dim) throw std::invalid_argument("target matrix must be square");
  if (t.scope.empty() || t.scope.size() > 2) {
    throw std::invalid_argument("scope must name 1 or 2 batches");
  }
  for (int b : t.scope) {
    if (b < 1) throw std::invalid_argument("batch indices are 1-based");
  }
  if (t.scope.size() == 2 && t.scope[1] != t.scope[0] + 1) {
    throw std::invalid_argument("two-batch scope must be adjacent batches");
  }
  const long expect = t.scope.size() == 1 ? 2 : 4;
  if (dim != expect) throw std::invalid_argument("target dimension does not match scope");
  const Eigen::MatrixXcd gram = t.matrix.adjoint() * t.matrix;
  if ((gram - Eigen::MatrixXcd::Identity(dim, dim)).norm() > 1e-12 * dim) {
    throw std::invalid_argument("target matrix is not unitary");
  }
}

std::string CompilationResult::sidecar_json() const {
  std::ostringstream os;
  os.precision(17);
  os << "{\"distance\":" << distance << ",\"leakage_bound\":" << leakage_bound
     << ",\"depth_searched\":" << depth_searched << "}";
  return os.str();
}

namespace {

double sigma_max(const Eigen::MatrixXcd& m) {
  if (m.rows() == 2) {
    // Closed form for 2x2: the larger singular value.
    const double f = m.squaredNorm();
    const double det = std::abs(m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0));
    const double disc = std::max(0.0, f * f - 4.0 * det * det);
    return std::sqrt((f + std::sqrt(disc)) / 2.0);
  }
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
  return svd.singularValues()(0);
}

// min over alpha of g(alpha), coarse grid then golden-section refinement.
double sweep_minimize(const std::function<double(double)>& g) {
  constexpr int kCoarse = 256;
  constexpr double kTwoPi = 2.0 * std::numbers::pi;
  int best = 0;
  double best_val = g(0.0);
  for (int i = 1; i < kCoarse; ++i) {
    const double v = g(kTwoPi * i / kCoarse);
    if (v < best_val) {
      best_val = v;
      best = i;
    }
  }
  double lo = kTwoPi * (best - 1) / kCoarse;
  double hi = kTwoPi * (best + 1) / kCoarse;
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = hi - inv_phi * (hi - lo);
  double x2 = lo + inv_phi * (hi - lo);
  double f1 = g(x1);
  double f2 = g(x2);
  while (hi - lo > 1e-12) {
    if (f1 < f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - inv_phi * (hi - lo);
      f1 = g(x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + inv_phi * (hi - lo);
      f2 = g(x2);
    }
  }
  return std::min({best_val, f1, f2});
}

bool nearly_unitary(const Eigen::MatrixXcd& m) {
  const long dim = m.rows();
  return (m.adjoint() * m - Eigen::MatrixXcd::Identity(dim, dim)).norm() < 1e-9 * dim;
}

}  // namespace

double gate_distance(const Eigen::MatrixXcd& u, const Eigen::MatrixXcd& v) {
  if (u.rows() != v.rows() || u.cols() != v.cols() || u.rows() != u.cols()) {
    throw std::invalid_argument("gate_distance needs square matrices of equal dimension");
  }
  // ||U - phi V|| = ||V^dag U - phi I|| for unitary V.
  const Eigen::MatrixXcd w = v.adjoint() * u;
  if (nearly_unitary(w)) {
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(w, false);
    const Eigen::VectorXcd eig = es.eigenvalues();
    return sweep_minimize([&](double alpha) {
      const Complex phi = std::polar(1.0, alpha);
      double m = 0.0;
      for (long i = 0; i < eig.size(); ++i) m = std::max(m, std::abs(eig(i) - phi));
      return m;
    });
  }
  const long dim = w.rows();
  return sweep_minimize([&](double alpha) {
    const Complex phi = std::polar(1.0, alpha);
    return sigma_max(w - phi * Eigen::MatrixXcd::Identity(dim, dim));
  });
}

namespace {

// Matrices of the six one-batch letters (+1,-1,+2,-2,+3,-3) on the 2-dim
// charge-0 sector, and of the fourteen two-batch letters on the 13-dim
// sector with its computational compression data.
struct BatchTables {
  std::vector<Eigen::MatrixXcd> letter;  // index 2*(i-1) + (neg ? 1 : 0)
  std::vector<int> comp_indices;         // computational basis rows (two-batch)
};

const BatchTables& one_batch_tables() {
  static const BatchTables t = [] {
    BatchTables bt;
    for (int i = 1; i <= 3; ++i) {
      for (int s = 0; s < 2; ++s) {
        BraidWord w{4, {s == 0 ? i : -i}};
        bt.letter.push_back(represent_word(w, kVacuum));
      }
    }
    return bt;
  }();
  return t;
}

const BatchTables& two_batch_tables() {
  static const BatchTables t = [] {
    BatchTables bt;
    for (int i = 1; i <= 7; ++i) {
      for (int s = 0; s < 2; ++s) {
        BraidWord w{8, {s == 0 ? i : -i}};
        bt.letter.push_back(represent_word(w, kVacuum));
      }
    }
    const PathBasis basis(8, kVacuum);
    for (Label x1 : {0, 2}) {
      for (Label x2 : {0, 2}) {
        FusionPath p{{0, 1, x1, 1, 0, 1, x2, 1, 0}};
        bt.comp_indices.push_back(basis.index_of(p));
      }
    }
    return bt;
  }();
  return t;
}

int letter_slot(int letter) { return 2 * (std::abs(letter) - 1) + (letter < 0 ? 1 : 0); }

}  // namespace

Eigen::Matrix2cd batch_image(const BraidWord& w) {
  if (w.strands != 4) throw std::invalid_argument("one-batch words live on 4 strands");
  validate_braid_word(w);
  const auto& tables = one_batch_tables();
  Eigen::Matrix2cd m = Eigen::Matrix2cd::Identity();
  for (int letter : w.letters) m = tables.letter[letter_slot(letter)] * m;
  return m;
}

TwoBatchImage two_batch_image(const BraidWord& w) {
  if (w.strands != 8) throw std::invalid_argument("two-batch words live on 8 strands");
  validate_braid_word(w);
  const auto& tables = two_batch_tables();
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(13, 13);
  for (int letter : w.letters) m = tables.letter[letter_slot(letter)] * m;

  TwoBatchImage img;
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) {
      img.compressed(r, c) = m(tables.comp_indices[r], tables.comp_indices[c]);
    }
  }
  // Leakage: squared operator norm of the off-subspace block of U*P,
  // i.e. 1 - smallest eigenvalue of (PUP)^dag (PUP) for unitary U.
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> es(img.compressed.adjoint() *
                                                     img.compressed);
  img.leakage = std::max(0.0, 1.0 - es.eigenvalues()(0));
  return img;
}

namespace {

struct Candidate {
  double distance = std::numeric_limits<double>::infinity();
  double leakage = 0.0;
  std::vector<int> word;
  bool valid = false;
};

int letter_rank(int letter) { return 2 * (std::abs(letter) - 1) + (letter < 0 ? 1 : 0); }

bool lex_less(const std::vector<int>& a, const std::vector<int>& b) {
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] != b[i]) return letter_rank(a[i]) < letter_rank(b[i]);
  }
  return a.size() < b.size();
}

bool better(const Candidate& a, const Candidate& b) {
  if (!b.valid) return a.valid;
  if (!a.valid) return false;
  if (a.distance != b.distance) return a.distance < b.distance;
  if (a.word.size() != b.word.size()) return a.word.size() < b.word.size();
  return lex_less(a.word, b.word);
}

struct SearchContext {
  const std::vector<Eigen::MatrixXcd>* letters;
  const std::vector<int>* comp_indices;  // null for one batch
  const Eigen::MatrixXcd* target;
  double leakage_tol;
  int n_letters;

  void evaluate(const Eigen::MatrixXcd& m, const std::vector<int>& word,
                Candidate& best, Candidate& diag) const {
    Candidate c;
    if (comp_indices == nullptr) {
      c.distance = gate_distance(m, *target);
      c.leakage = 0.0;
    } else {
      Eigen::Matrix4cd compressed;
      for (int r = 0; r < 4; ++r) {
        for (int col = 0; col < 4; ++col) {
          compressed(r, col) = m((*comp_indices)[r], (*comp_indices)[col]);
        }
      }
      Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> es(compressed.adjoint() * compressed);
      c.leakage = std::max(0.0, 1.0 - es.eigenvalues()(0));
      c.distance = gate_distance(compressed, *target);
    }
    c.word = word;
    c.valid = true;
    if (better(c, diag)) diag = c;
    if (c.leakage > leakage_tol) return;
    if (better(c, best)) best = std::move(c);
  }

  // Depth-first over freely reduced words, letters in rank order, so words
  // are visited in lexicographic order within each length.
  void scan(Eigen::MatrixXcd m, std::vector<int>& word, int remaining,
            Candidate& best, Candidate& diag) const {
    if (remaining == 0) return;
    for (int rank = 0; rank < 2 * n_letters; ++rank) {
      const int idx = rank / 2 + 1;
      const int letter = (rank % 2 == 0) ? idx : -idx;
      if (!word.empty() && word.back() == -letter) continue;  // free reduction
      word.push_back(letter);
      Eigen::MatrixXcd next = (*letters)[letter_slot(letter)] * m;
      evaluate(next, word, best, diag);
      scan(next, word, remaining - 1, best, diag);
      word.pop_back();
    }
  }
};

}  // namespace

CompilationResult compile(const GateTarget& target, int max_depth, double leakage_tol,
                          int threads) {
  validate_gate_target(target);
  if (max_depth < 0) throw std::invalid_argument("max_depth must be >= 0");

  const bool two = target.batches() == 2;
  const auto& tables = two ? two_batch_tables() : one_batch_tables();
  const int strands = two ? 8 : 4;
  const int n_letters = two ? 7 : 3;
  const long dim = two ? 13 : 2;

  SearchContext ctx;
  ctx.letters = &tables.letter;
  ctx.comp_indices = two ? &tables.comp_indices : nullptr;
  ctx.target = &target.matrix;
  ctx.leakage_tol = leakage_tol;
  ctx.n_letters = n_letters;

  Candidate best;
  Candidate diag;
  {
    std::vector<int> empty_word;
    ctx.evaluate(Eigen::MatrixXcd::Identity(dim, dim), empty_word, best, diag);
  }

  if (max_depth > 0) {
    const int n_first = 2 * n_letters;
    std::vector<Candidate> per_first(n_first);
    std::vector<Candidate> per_first_diag(n_first);
    auto run_first = [&](int rank) {
      const int idx = rank / 2 + 1;
      const int letter = (rank % 2 == 0) ? idx : -idx;
      std::vector<int> word{letter};
      Eigen::MatrixXcd m = tables.letter[letter_slot(letter)] *
                           Eigen::MatrixXcd::Identity(dim, dim);
      ctx.evaluate(m, word, per_first[rank], per_first_diag[rank]);
      ctx.scan(m, word, max_depth - 1, per_first[rank], per_first_diag[rank]);
    };
    if (threads <= 1) {
      for (int r = 0; r < n_first; ++r) run_first(r);
    } else {
      std::atomic<int> next{0};
      std::vector<std::thread> pool;
      for (int t = 0; t < std::min(threads, n_first); ++t) {
        pool.emplace_back([&] {
          for (;;) {
            const int r = next.fetch_add(1);
            if (r >= n_first) break;
            run_first(r);
          }
        });
      }
      for (auto& th : pool) th.join();
    }
    // Merge in rank order; the comparator is a total order, so the result
    // is independent of thread scheduling.
    for (int r = 0; r < n_first; ++r) {
      if (better(per_first[r], best)) best = per_first[r];
      if (better(per_first_diag[r], diag)) diag = per_first_diag[r];
    }
  }

  if (!best.valid) {
    throw CompileInfeasibleError(
        "no word within depth " + std::to_string(max_depth) +
            " meets the leakage tolerance; best candidate has distance " +
            std::to_string(diag.distance) + " with leakage " + std::to_string(diag.leakage),
        diag.distance, diag.leakage);
  }

  CompilationResult res;
  res.word = BraidWord{strands, best.word};
  res.distance = best.distance;
  res.leakage_bound = best.leakage;
  res.depth_searched = max_depth;
  return res;
}

namespace {

// --- SU(2) utilities for the recursive refinement ---

Eigen::Matrix2cd to_su2(const Eigen::Matrix2cd& m) {
  const Complex det = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
  return m / std::sqrt(det);
}

struct AxisAngle {
  double angle = 0.0;           // rotation angle in [0, 2*pi)
  Eigen::Vector3d axis{0, 0, 1};
};

AxisAngle axis_angle(const Eigen::Matrix2cd& su2) {
  AxisAngle aa;
  const double c = std::clamp(0.5 * (su2(0, 0) + su2(1, 1)).real(), -1.0, 1.0);
  aa.angle = 2.0 * std::acos(c);
  const double s = std::sin(aa.angle / 2.0);
  if (std::abs(s) < 1e-12) return aa;  // identity-like; axis irrelevant
  const double nx = -0.5 * (su2(0, 1) + su2(1, 0)).imag() / s;
  const double ny = 0.5 * (su2(1, 0) - su2(0, 1)).real() / s;
  const double nz = -0.5 * (su2(0, 0) - su2(1, 1)).imag() / s;
  aa.axis = Eigen::Vector3d(nx, ny, nz);
  const double norm = aa.axis.norm();
  if (norm > 1e-12) aa.axis /= norm;
  return aa;
}

Eigen::Matrix2cd rotation(const Eigen::Vector3d& axis, double angle) {
  const double c = std::cos(angle / 2.0);
  const double s = std::sin(angle / 2.0);
  const Complex i{0.0, 1.0};
  Eigen::Matrix2cd m;
  m(0, 0) = c - i * s * axis.z();
  m(0, 1) = -s * axis.y() - i * s * axis.x();
  m(1, 0) = s * axis.y() - i * s * axis.x();
  m(1, 1) = c + i * s * axis.z();
  return m;
}

// Rotation carrying unit vector `from` to unit vector `to`.
Eigen::Matrix2cd aligning_rotation(const Eigen::Vector3d& from, const Eigen::Vector3d& to) {
  const Eigen::Vector3d cross = from.cross(to);
  const double dot = std::clamp(from.dot(to), -1.0, 1.0);
  const double norm = cross.norm();
  if (norm < 1e-12) {
    if (dot > 0) return Eigen::Matrix2cd::Identity();
    // Opposite axes: rotate by pi about anything perpendicular.
    Eigen::Vector3d perp = from.cross(Eigen::Vector3d::UnitX());
    if (perp.norm() < 1e-6) perp = from.cross(Eigen::Vector3d::UnitY());
    perp.normalize();
    return rotation(perp, std::numbers::pi);
  }
  return rotation(cross / norm, std::atan2(norm, dot));
}

// Balanced group commutator: Delta = V W V^dag W^dag with V, W conjugated
// equal-angle rotations about orthogonal axes.
std::pair<Eigen::Matrix2cd, Eigen::Matrix2cd> gc_decompose(const Eigen::Matrix2cd& delta) {
  const AxisAngle aa = axis_angle(to_su2(delta));
  const double target_sin = std::sin(aa.angle / 2.0);
  // Solve 2 s sqrt(1 - s^2) = sin(theta/2) for s = sin^2(phi/2) by bisection.
  double lo = 0.0, hi = 1.0 / std::sqrt(2.0);
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double val = 2.0 * mid * std::sqrt(std::max(0.0, 1.0 - mid * mid));
    (val < target_sin ? lo : hi) = mid;
  }
  const double s = 0.5 * (lo + hi);
  const double phi = 2.0 * std::asin(std::min(1.0, std::sqrt(s)));

  const Eigen::Matrix2cd v = rotation(Eigen::Vector3d::UnitX(), phi);
  const Eigen::Matrix2cd w = rotation(Eigen::Vector3d::UnitY(), phi);
  const Eigen::Matrix2cd k = v * w * v.adjoint() * w.adjoint();
  const AxisAngle ka = axis_angle(to_su2(k));
  const Eigen::Matrix2cd sim = aligning_rotation(ka.axis, aa.axis);
  return {sim * v * sim.adjoint(), sim * w * sim.adjoint()};
}

struct SkApprox {
  BraidWord word;
  Eigen::Matrix2cd matrix;
};

SkApprox sk_approximate(const Eigen::Matrix2cd& u, int level, const GateTarget& proto,
                        int base_depth, double leakage_tol) {
  if (level == 0) {
    GateTarget t{u, proto.scope};
    const CompilationResult res = compile(t, base_depth, leakage_tol);
    return {res.word, batch_image(res.word)};
  }
  const SkApprox prev = sk_approximate(u, level - 1, proto, base_depth, leakage_tol);
  const Eigen::Matrix2cd delta = to_su2(u) * to_su2(prev.matrix).adjoint();
  const auto [v, w] = gc_decompose(delta);
  const SkApprox va = sk_approximate(v, level - 1, proto, base_depth, leakage_tol);
  const SkApprox wa = sk_approximate(w, level - 1, proto, base_depth, leakage_tol);
  // U_n = V W V^dag W^dag U_{n-1}; rightmost factor acts first.
  BraidWord word = prev.word;
  word = concat(word, inverse(wa.word));
  word = concat(word, inverse(va.word));
  word = concat(word, wa.word);
  word = concat(word, va.word);
  word = free_reduce(word);
  return {word, batch_image(word)};
}

}  // namespace

CompilationResult sk_refine(const GateTarget& target, const CompilationResult& base,
                            int levels) {
  validate_gate_target(target);
  if (levels <= 0 || target.batches() != 1) return base;
  if (base.distance >= kSkCoarseNetThreshold) return base;

  const int base_depth = std::max(1, base.depth_searched);
  const SkApprox refined =
      sk_approximate(target.matrix, levels, target, base_depth, 1.0);
  const double dist = gate_distance(refined.matrix, target.matrix);
  if (dist >= base.distance) return base;

  CompilationResult out;
  out.word = refined.word;
  out.distance = dist;
  out.leakage_bound = 0.0;
  out.depth_searched = base.depth_searched;
  return out;
}

}  // namespace tqc
