#include "tqc/kcode.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "tqc/errors.hpp"

namespace tqc {

namespace {

long ipow(long base, int exp) {
  long r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

constexpr long kMaxTotalDim = 4096;

}  // namespace

Subspace::Subspace(int n, int d, Eigen::MatrixXcd basis) : n_(n), d_(d), basis_(std::move(basis)) {
  if (n < 1 || d < 2) throw std::invalid_argument("need n >= 1 factors of local dimension >= 2");
  const long total = ipow(d, n);
  if (total > kMaxTotalDim) {
    throw ResourceLimitError("total dimension " + std::to_string(total) +
                             " exceeds the desk-scale limit " + std::to_string(kMaxTotalDim));
  }
  if (basis_.rows() != total) throw std::invalid_argument("basis vector length != d^n");
  if (basis_.cols() < 1) throw std::invalid_argument("empty basis");
  const Eigen::MatrixXcd gram = basis_.adjoint() * basis_;
  if ((gram - Eigen::MatrixXcd::Identity(basis_.cols(), basis_.cols())).norm() > 1e-10 * basis_.cols()) {
    throw std::invalid_argument("basis is not orthonormal");
  }
}

std::string LocalOperatorSpec::to_string() const {
  std::ostringstream os;
  os << "support={";
  for (std::size_t i = 0; i < support.size(); ++i) {
    if (i) os << ',';
    os << support[i] + 1;
  }
  os << "}";
  return os.str();
}

void for_each_local_operator(int n, int d, int k,
                             const std::function<bool(const LocalOperatorSpec&)>& fn) {
  if (k < 0 || k > n) throw std::invalid_argument("need 0 <= k <= n");
  if (k == 0) {
    LocalOperatorSpec s;
    s.op = Eigen::MatrixXcd::Identity(1, 1);
    fn(s);
    return;
  }
  const long dk = ipow(d, k);
  // k-subsets of {0..n-1} in lexicographic order.
  std::vector<int> support(k);
  for (int i = 0; i < k; ++i) support[i] = i;
  for (;;) {
    for (long row = 0; row < dk; ++row) {
      for (long col = 0; col < dk; ++col) {
        LocalOperatorSpec s;
        s.support = support;
        s.op = Eigen::MatrixXcd::Zero(dk, dk);
        s.op(row, col) = 1.0;
        if (!fn(s)) return;
      }
    }
    // Advance the subset.
    int i = k - 1;
    while (i >= 0 && support[i] == n - k + i) --i;
    if (i < 0) break;
    ++support[i];
    for (int j = i + 1; j < k; ++j) support[j] = support[j - 1] + 1;
  }
}

std::vector<LocalOperatorSpec> local_operator_basis(int n, int d, int k) {
  std::vector<LocalOperatorSpec> out;
  for_each_local_operator(n, d, k, [&](const LocalOperatorSpec& s) {
    out.push_back(s);
    return true;
  });
  return out;
}

Eigen::MatrixXcd compress(const Subspace& w, const LocalOperatorSpec& spec) {
  const int n = w.factors();
  const int d = w.local_dim();
  const int k = static_cast<int>(spec.support.size());
  const long dk = ipow(d, k);
  if (spec.op.rows() != dk || spec.op.cols() != dk) {
    throw std::invalid_argument("operator dimension does not match support size");
  }
  const long total = w.total_dim();
  const int dim = w.dim();

  // Strides of the supported factors in the full index (factor 0 is most
  // significant).
  std::vector<long> stride(k);
  for (int i = 0; i < k; ++i) stride[i] = ipow(d, n - 1 - spec.support[i]);

  // O|x> = sum_I op(I, J(x)) |x with support set to I>.
  Eigen::MatrixXcd ob = Eigen::MatrixXcd::Zero(total, dim);
  for (long x = 0; x < total; ++x) {
    long j = 0;
    long base = x;
    for (int i = 0; i < k; ++i) {
      const long digit = (x / stride[i]) % d;
      j = j * d + digit;
      base -= digit * stride[i];
    }
    for (long ii = 0; ii < dk; ++ii) {
      const Complex c = spec.op(ii, j);
      if (c == Complex{0.0, 0.0}) continue;
      long y = base;
      long rem = ii;
      for (int i = k - 1; i >= 0; --i) {
        y += (rem % d) * stride[i];
        rem /= d;
      }
      ob.row(y) += c * w.basis().row(x);
    }
  }
  return w.basis().adjoint() * ob;
}

namespace {

double scalar_deviation(const Eigen::MatrixXcd& m) {
  const long dim = m.rows();
  const Complex mean = m.trace() / static_cast<double>(dim);
  const Eigen::MatrixXcd dev = m - mean * Eigen::MatrixXcd::Identity(dim, dim);
  const double rel = std::max(1.0, m.norm());
  return dev.norm() / rel;
}

}  // namespace

KCodeReport is_k_code(const Subspace& w, int k, double tol, int threads) {
  if (k < 0 || k > w.factors()) throw std::invalid_argument("need 0 <= k <= n");
  KCodeReport report;
  report.is_code = true;
  // A 1x1 compression is always scalar, and 0-local operators are scalars.
  if (k == 0 || w.dim() == 1) return report;

  const auto specs = local_operator_basis(w.factors(), w.local_dim(), k);
  const std::size_t total = specs.size();
  std::atomic<std::size_t> first_violation{total};
  std::vector<double> deviations(total, 0.0);

  auto check_range = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      if (i >= first_violation.load(std::memory_order_relaxed)) return;
      const double dev = scalar_deviation(compress(w, specs[i]));
      deviations[i] = dev;
      if (dev > tol) {
        // Keep the lexicographically first violator.
        std::size_t cur = first_violation.load();
        while (i < cur && !first_violation.compare_exchange_weak(cur, i)) {
        }
        return;
      }
    }
  };

  const int nthreads = std::max(1, threads);
  if (nthreads == 1) {
    check_range(0, total);
  } else {
    std::vector<std::thread> pool;
    const std::size_t chunk = (total + nthreads - 1) / nthreads;
    for (int t = 0; t < nthreads; ++t) {
      const std::size_t begin = t * chunk;
      const std::size_t end = std::min(total, begin + chunk);
      if (begin < end) pool.emplace_back(check_range, begin, end);
    }
    for (auto& th : pool) th.join();
  }

  const std::size_t hit = first_violation.load();
  for (std::size_t i = 0; i < std::min(hit + 1, total); ++i) {
    report.worst_deviation = std::max(report.worst_deviation, deviations[i]);
  }
  if (hit < total) {
    report.is_code = false;
    report.witness = specs[hit];
    report.worst_deviation = std::max(report.worst_deviation, deviations[hit]);
  }
  return report;
}

int max_k(const Subspace& w, double tol, int threads) {
  int best = 0;
  for (int k = 1; k <= w.factors(); ++k) {
    if (!is_k_code(w, k, tol, threads).is_code) break;
    best = k;
  }
  return best;
}

Subspace ghz_subspace() {
  Eigen::MatrixXcd basis = Eigen::MatrixXcd::Zero(8, 2);
  basis(0, 0) = 1.0;  // |000>
  basis(7, 1) = 1.0;  // |111>
  return Subspace(3, 2, basis);
}

namespace {

Eigen::MatrixXcd pauli(char p) {
  Eigen::MatrixXcd m(2, 2);
  const Complex i{0.0, 1.0};
  switch (p) {
    case 'I': m << 1, 0, 0, 1; break;
    case 'X': m << 0, 1, 1, 0; break;
    case 'Y': m << 0, -i, i, 0; break;
    case 'Z': m << 1, 0, 0, -1; break;
    default: throw std::invalid_argument("bad Pauli");
  }
  return m;
}

Eigen::MatrixXcd pauli_string(const std::string& s) {
  Eigen::MatrixXcd m = pauli(s[0]);
  for (std::size_t i = 1; i < s.size(); ++i) {
    Eigen::MatrixXcd next(m.rows() * 2, m.cols() * 2);
    const Eigen::MatrixXcd p = pauli(s[i]);
    for (long r = 0; r < m.rows(); ++r) {
      for (long c = 0; c < m.cols(); ++c) {
        next.block(2 * r, 2 * c, 2, 2) = m(r, c) * p;
      }
    }
    m = std::move(next);
  }
  return m;
}

}  // namespace

Subspace five_qubit_code_subspace() {
  // Stabilizer generators XZZXI and its cyclic shifts.
  const std::vector<std::string> gens{"XZZXI", "IXZZX", "XIXZZ", "ZXIXZ"};
  Eigen::MatrixXcd proj = Eigen::MatrixXcd::Identity(32, 32);
  for (const auto& g : gens) {
    proj = proj * 0.5 * (Eigen::MatrixXcd::Identity(32, 32) + pauli_string(g));
  }
  // The projector has rank 2; take an orthonormal basis of its range.
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(proj);
  Eigen::MatrixXcd basis(32, 2);
  basis.col(0) = es.eigenvectors().col(30);
  basis.col(1) = es.eigenvectors().col(31);
  return Subspace(5, 2, basis);
}

Subspace full_space_subspace(int n, int d) {
  const long total = ipow(d, n);
  return Subspace(n, d, Eigen::MatrixXcd::Identity(total, total));
}

Subspace Subspace::from_json(const std::string& json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("bad subspace JSON: ") + e.what());
  }
  try {
    const int n = j.at("n").get<int>();
    const int d = j.at("d").get<int>();
    const auto& rows = j.at("basis");
    if (rows.empty()) throw std::invalid_argument("empty basis");
    const long len = static_cast<long>(rows.at(0).size());
    Eigen::MatrixXcd basis(len, rows.size());
    for (std::size_t v = 0; v < rows.size(); ++v) {
      const auto& vec = rows.at(v);
      if (static_cast<long>(vec.size()) != len) {
        throw std::invalid_argument("ragged basis vectors");
      }
      for (long x = 0; x < len; ++x) {
        const auto& entry = vec.at(x);
        basis(x, v) = Complex(entry.at(0).get<double>(), entry.at(1).get<double>());
      }
    }
    return Subspace(n, d, std::move(basis));
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("bad subspace JSON: ") + e.what());
  }
}

std::string Subspace::to_json() const {
  nlohmann::json j;
  j["n"] = n_;
  j["d"] = d_;
  nlohmann::json vecs = nlohmann::json::array();
  for (long v = 0; v < basis_.cols(); ++v) {
    nlohmann::json vec = nlohmann::json::array();
    for (long x = 0; x < basis_.rows(); ++x) {
      vec.push_back({basis_(x, v).real(), basis_(x, v).imag()});
    }
    vecs.push_back(vec);
  }
  j["basis"] = vecs;
  return j.dump();
}

}  // namespace tqc
