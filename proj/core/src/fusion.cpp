#include "tqc/fusion.hpp"

#include <algorithm>
#include <array>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace tqc {

bool is_valid_label(Label a) { return a >= 0 && a < kLabelCount; }

namespace {

void require_label(Label a) {
  if (!is_valid_label(a)) {
    throw std::invalid_argument("label out of range 0..3: " + std::to_string(a));
  }
}

}  // namespace

std::vector<Label> fuse(Label a, Label b) {
  require_label(a);
  require_label(b);
  std::vector<Label> out;
  const int lo = std::abs(a - b);
  const int hi = std::min(a + b, 6 - a - b);
  for (int c = lo; c <= hi; c += 2) {
    out.push_back(c);
  }
  return out;
}

double qdim(Label a) {
  require_label(a);
  const double s1 = std::sin(std::numbers::pi / 5.0);
  return std::sin((a + 1) * std::numbers::pi / 5.0) / s1;
}

std::string FusionPath::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (i > 0) os << ',';
    os << labels[i];
  }
  return os.str();
}

bool is_admissible_path(const FusionPath& p) {
  if (p.labels.empty() || p.labels.front() != kVacuum) return false;
  for (std::size_t i = 0; i + 1 < p.labels.size(); ++i) {
    const Label cur = p.labels[i];
    const Label nxt = p.labels[i + 1];
    if (!is_valid_label(cur) || !is_valid_label(nxt)) return false;
    const auto allowed = fuse(cur, 1);
    if (std::find(allowed.begin(), allowed.end(), nxt) == allowed.end()) return false;
  }
  return true;
}

std::vector<FusionPath> fusion_paths(int n, Label end) {
  if (n < 0) throw std::invalid_argument("negative anyon count");
  require_label(end);
  std::vector<FusionPath> out;
  std::vector<Label> cur{kVacuum};
  // Depth-first with ascending next labels yields lexicographic order.
  auto walk = [&](auto&& self, int remaining) -> void {
    if (remaining == 0) {
      if (cur.back() == end) out.push_back(FusionPath{cur});
      return;
    }
    if (std::abs(cur.back() - end) > remaining) return;
    for (Label nxt : fuse(cur.back(), 1)) {
      cur.push_back(nxt);
      self(self, remaining - 1);
      cur.pop_back();
    }
  };
  walk(walk, n);
  return out;
}

std::uint64_t fusion_path_count(int n, Label end) {
  if (n < 0) throw std::invalid_argument("negative anyon count");
  require_label(end);
  // Integer walk count on the path graph 0-1-2-3.
  std::array<std::uint64_t, 4> cnt{1, 0, 0, 0};
  for (int step = 0; step < n; ++step) {
    std::array<std::uint64_t, 4> nxt{};
    nxt[0] = cnt[1];
    nxt[1] = cnt[0] + cnt[2];
    nxt[2] = cnt[1] + cnt[3];
    nxt[3] = cnt[2];
    cnt = nxt;
  }
  return cnt[static_cast<std::size_t>(end)];
}

PathBasis::PathBasis(int n, Label sector)
    : anyons_(n), sector_(sector), paths_(fusion_paths(n, sector)) {}

int PathBasis::index_of(const FusionPath& p) const {
  const auto it = std::lower_bound(
      paths_.begin(), paths_.end(), p,
      [](const FusionPath& a, const FusionPath& b) { return a.labels < b.labels; });
  if (it != paths_.end() && it->labels == p.labels) {
    return static_cast<int>(it - paths_.begin());
  }
  return -1;
}

Eigen::Matrix4d s_matrix() {
  Eigen::Matrix4d s;
  const double norm = std::sqrt(2.0 / 5.0);
  for (int a = 0; a < 4; ++a) {
    for (int b = 0; b < 4; ++b) {
      s(a, b) = norm * std::sin((a + 1) * (b + 1) * std::numbers::pi / 5.0);
    }
  }
  return s;
}

}  // namespace tqc
