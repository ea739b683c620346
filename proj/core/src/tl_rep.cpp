#include "tqc/tl_rep.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace tqc {

std::vector<Label> admissible_sectors(int n) {
  std::vector<Label> out;
  for (Label s = 0; s < kLabelCount; ++s) {
    if (fusion_path_count(n, s) > 0) out.push_back(s);
  }
  return out;
}

namespace {

struct GeneratorTable {
  PathBasis basis;
  std::vector<Eigen::MatrixXd> e;  // e[i-1] = e_i
};

// Generator matrices are cached per (n, sector); the table is built once
// under a lock and read concurrently afterwards.
const GeneratorTable& generator_table(int n, Label sector) {
  static std::mutex mu;
  static std::map<std::pair<int, Label>, GeneratorTable> cache;
  std::scoped_lock lock(mu);
  const auto key = std::make_pair(n, sector);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;

  GeneratorTable table{PathBasis(n, sector), {}};
  const auto& paths = table.basis.paths();
  const int dim = table.basis.dim();
  table.e.reserve(n >= 2 ? n - 1 : 0);
  for (int i = 1; i <= n - 1; ++i) {
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(dim, dim);
    for (int col = 0; col < dim; ++col) {
      const auto& p = paths[col].labels;
      if (p[i - 1] != p[i + 1]) continue;
      for (Label mid : fuse(p[i - 1], 1)) {
        FusionPath q = paths[col];
        q.labels[i] = mid;
        const int row = table.basis.index_of(q);
        if (row < 0) continue;
        m(row, col) = std::sqrt(qdim(p[i]) * qdim(mid)) / qdim(p[i - 1]);
      }
    }
    table.e.push_back(std::move(m));
  }
  return cache.emplace(key, std::move(table)).first->second;
}

void require_index(int i, int n) {
  if (i < 1 || i > n - 1) {
    throw std::out_of_range("generator index " + std::to_string(i) + " out of range 1.." +
                            std::to_string(n - 1));
  }
}

}  // namespace

Eigen::MatrixXd tl_generator(int i, int n, Label sector) {
  require_index(i, n);
  return generator_table(n, sector).e[i - 1];
}

Eigen::MatrixXcd braid_generator(int i, int n, Label sector) {
  require_index(i, n);
  const auto& e = generator_table(n, sector).e[i - 1];
  const int dim = static_cast<int>(e.rows());
  Eigen::MatrixXcd m = kBraidA * Eigen::MatrixXcd::Identity(dim, dim);
  m += (1.0 / kBraidA) * e.cast<Complex>();
  return m;
}

Eigen::MatrixXcd represent_word(const BraidWord& w, Label sector) {
  validate_braid_word(w);
  const auto& table = generator_table(w.strands, sector);
  const int dim = table.basis.dim();
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(dim, dim);
  for (int letter : w.letters) {
    const auto& e = table.e[std::abs(letter) - 1];
    Eigen::MatrixXcd g = (letter > 0 ? kBraidA : std::conj(kBraidA)) *
                         Eigen::MatrixXcd::Identity(dim, dim);
    g += (letter > 0 ? 1.0 / kBraidA : kBraidA) * e.cast<Complex>();
    m = g * m;
  }
  return m;
}

int initial_path_index(int n) {
  if (n % 2 != 0) throw std::invalid_argument("initial path needs an even strand count");
  FusionPath init;
  init.labels.resize(n + 1);
  for (int j = 0; j <= n; ++j) init.labels[j] = (j % 2 == 0) ? 0 : 1;
  const int idx = PathBasis(n, kVacuum).index_of(init);
  if (idx < 0) throw std::logic_error("alternating path missing from basis");
  return idx;
}

Complex plat_amplitude(const BraidWord& w) {
  if (w.strands % 2 != 0) throw std::invalid_argument("plat closure needs an even strand count");
  const int idx = initial_path_index(w.strands);
  const Eigen::MatrixXcd m = represent_word(w, kVacuum);
  return m(idx, idx);
}

double plat_kappa(int strands) {
  if (strands % 2 != 0) throw std::invalid_argument("plat closure needs an even strand count");
  return std::pow(kLoopValue, strands / 2 - 1);
}

}  // namespace tqc
