#include "tqc/anyon_register.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "tqc/errors.hpp"
#include "tqc/fusion.hpp"
#include "tqc/tl_rep.hpp"

namespace tqc {

AnyonRegister AnyonRegister::make(int anyons, Eigen::VectorXcd state) {
  if (anyons < 4 || anyons % 2 != 0) {
    throw std::invalid_argument("register needs an even anyon count >= 4");
  }
  const auto expected = fusion_path_count(anyons, kVacuum);
  if (static_cast<std::uint64_t>(state.size()) != expected) {
    throw std::invalid_argument("state dimension does not match the sector-0 basis");
  }
  const double norm = state.norm();
  if (std::abs(norm - 1.0) > 1e-9) {
    throw std::invalid_argument("register state must be normalized");
  }
  AnyonRegister r;
  r.anyons_ = anyons;
  r.state_ = std::move(state);
  return r;
}

AnyonRegister initialize(int n_anyons) {
  if (n_anyons < 4 || n_anyons % 2 != 0) {
    throw std::invalid_argument("register needs an even anyon count >= 4");
  }
  Eigen::VectorXcd psi =
      Eigen::VectorXcd::Zero(static_cast<long>(fusion_path_count(n_anyons, kVacuum)));
  psi[initial_path_index(n_anyons)] = 1.0;
  return AnyonRegister::make(n_anyons, std::move(psi));
}

AnyonRegister execute_braid(const AnyonRegister& r, const BraidWord& w) {
  if (w.strands != r.anyons()) {
    throw std::invalid_argument("braid strand count does not match register size");
  }
  Eigen::VectorXcd psi = represent_word(w, kVacuum) * r.state();
  // Guard against drift over long words.
  psi /= psi.norm();
  return AnyonRegister::make(r.anyons(), std::move(psi));
}

MeasurementResult measure_pair(const AnyonRegister& r, int pair) {
  if (pair < 1 || pair > r.anyons() / 2) {
    throw std::invalid_argument("pair index out of range: " + std::to_string(pair));
  }
  const Eigen::MatrixXd e = tl_generator(2 * pair - 1, r.anyons(), kVacuum);
  const Complex val = r.state().dot(e.cast<Complex>() * r.state()) / kLoopValue;
  double p = val.real();
  if (std::abs(val.imag()) > 1e-10) throw std::logic_error("measurement value not real");
  if (p < 0.0 && p > -1e-12) p = 0.0;
  if (p > 1.0 && p < 1.0 + 1e-12) p = 1.0;
  return MeasurementResult{p};
}

namespace {

bool is_computational_path(const FusionPath& p) {
  const int n = p.anyons();
  for (int j = 0; j <= n; ++j) {
    const Label v = p.labels[j];
    if (j % 2 == 1) {
      if (v != 1) return false;
    } else if (j % 4 == 0) {
      if (v != 0) return false;
    } else {
      if (v != 0 && v != 2) return false;
    }
  }
  return true;
}

// A register of 4k+2 anyons has a trailing half batch with no free bit.
std::string path_bits(const FusionPath& p) {
  std::string bits;
  for (int j = 2; j < p.anyons(); j += 4) {
    bits.push_back(p.labels[j] == 0 ? '0' : '2');
  }
  return bits;
}

}  // namespace

double leakage(const AnyonRegister& r) {
  const PathBasis basis(r.anyons(), kVacuum);
  double inside = 0.0;
  for (int i = 0; i < basis.dim(); ++i) {
    if (is_computational_path(basis.path(i))) inside += std::norm(r.state()[i]);
  }
  double out = 1.0 - inside;
  if (out < 0.0 && out > -1e-12) out = 0.0;
  return out;
}

std::map<std::string, double> readout_distribution(const AnyonRegister& r) {
  const PathBasis basis(r.anyons(), kVacuum);
  std::map<std::string, double> dist;
  for (int i = 0; i < basis.dim(); ++i) {
    const FusionPath& p = basis.path(i);
    if (!is_computational_path(p)) continue;
    const double weight = std::norm(r.state()[i]);
    if (weight > 0.0) dist[path_bits(p)] += weight;
  }
  return dist;
}

LinkDiagram measurement_link(const BraidWord& b) {
  validate_braid_word(b);
  if (b.strands % 2 != 0) throw std::invalid_argument("plat closure needs an even strand count");
  return plat_closure(b).with_measurement_loop(1).with_word_appended(inverse(b));
}

JonesProbeReport prob_via_jones_report(const BraidWord& b, const BracketOptions& opts) {
  const LinkDiagram d = measurement_link(b);
  JonesProbeReport rep;
  rep.stats = diagram_stats(d);
  rep.bracket = kauffman_bracket(d, kBraidA, opts);
  // Reuse the bracket rather than re-running the state sum.
  const double sign = (rep.stats.components - 1) % 2 == 0 ? 1.0 : -1.0;
  const Complex writhe_factor =
      unit_phase_pow(kBraidAAngle + std::numbers::pi, -3L * rep.stats.writhe);
  rep.jones = sign * writhe_factor * rep.bracket;

  const double delta = kLoopValue;
  const Complex vhat = -delta * rep.jones;
  const double csign = (rep.stats.components + rep.stats.writhe) % 2 == 0 ? 1.0 : -1.0;
  const Complex a_factor =
      unit_phase_pow(kMeasurePhaseAngle + std::numbers::pi, 3L * rep.stats.writhe);
  const Complex numerator =
      csign * a_factor * vhat / std::pow(delta, rep.stats.minima - 2);
  if (std::abs(numerator.imag()) > 1e-8) {
    throw std::logic_error("measurement formula produced a non-real value");
  }
  rep.prob0 = (1.0 + numerator.real()) / (1.0 + delta * delta);
  return rep;
}

double prob_via_jones(const BraidWord& b, const BracketOptions& opts) {
  return prob_via_jones_report(b, opts).prob0;
}

}  // namespace tqc
