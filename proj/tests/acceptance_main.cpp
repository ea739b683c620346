// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure.  Criterion 10 invokes the command-line tool, whose path is
// passed as --cli <path>.

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "tqc/anyon_register.hpp"
#include "tqc/bracket.hpp"
#include "tqc/braid.hpp"
#include "tqc/circuit.hpp"
#include "tqc/compiler.hpp"
#include "tqc/fusion.hpp"
#include "tqc/kcode.hpp"
#include "tqc/link.hpp"
#include "tqc/rng.hpp"
#include "tqc/tl_rep.hpp"

using namespace tqc;

namespace {

std::string g_cli_path;

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
};

#define REQUIRE_THAT(out, cond)                                          \
  do {                                                                   \
    if (!(cond)) {                                                       \
      out.pass = false;                                                  \
      out.detail << " [failed: " << #cond << " at line " << __LINE__ << "]"; \
    }                                                                    \
  } while (0)

template <typename Derived>
double max_abs(const Eigen::MatrixBase<Derived>& m) {
  return m.cwiseAbs().maxCoeff();
}

// ---------------------------------------------------------------- 1
Outcome algebraic_suite() {
  Outcome out;
  double worst = 0.0;
  for (int n = 2; n <= 10; ++n) {
    const std::vector<Label> sectors =
        (n % 2 == 0) ? std::vector<Label>{0, 2} : std::vector<Label>{1, 3};
    for (Label sector : sectors) {
      std::vector<Eigen::MatrixXd> e;
      std::vector<Eigen::MatrixXcd> g;
      for (int i = 1; i <= n - 1; ++i) {
        e.push_back(tl_generator(i, n, sector));
        g.push_back(braid_generator(i, n, sector));
      }
      const long dim = e[0].rows();
      if (dim == 0) continue;
      const Eigen::MatrixXd id = Eigen::MatrixXd::Identity(dim, dim);
      const Eigen::MatrixXcd idc = Eigen::MatrixXcd::Identity(dim, dim);
      for (int i = 0; i < n - 1; ++i) {
        worst = std::max(worst, max_abs(e[i] * e[i] - kLoopValue * e[i]));
        worst = std::max(worst, max_abs(g[i] * g[i].adjoint() - idc));
        if (i + 1 < n - 1) {
          worst = std::max(worst, max_abs(e[i] * e[i + 1] * e[i] - e[i]));
          worst = std::max(worst, max_abs(e[i + 1] * e[i] * e[i + 1] - e[i + 1]));
          worst = std::max(worst, max_abs(g[i] * g[i + 1] * g[i] - g[i + 1] * g[i] * g[i + 1]));
        }
        for (int j = i + 2; j < n - 1; ++j) {
          worst = std::max(worst, max_abs(e[i] * e[j] - e[j] * e[i]));
          worst = std::max(worst, max_abs(g[i] * g[j] - g[j] * g[i]));
        }
      }
    }
  }
  out.detail << "max deviation " << worst;
  REQUIRE_THAT(out, worst <= 1e-10);
  return out;
}

// ---------------------------------------------------------------- 2
Outcome dimension_suite() {
  Outcome out;
  const std::array<std::uint64_t, 5> expected{1, 2, 5, 13, 34};
  for (int m = 1; m <= 5; ++m) {
    const std::uint64_t enumerated = fusion_paths(2 * m, 0).size();
    const std::uint64_t counted = fusion_path_count(2 * m, 0);
    REQUIRE_THAT(out, enumerated == expected[m - 1]);
    REQUIRE_THAT(out, counted == expected[m - 1]);
    REQUIRE_THAT(out, enumerated == counted);
  }
  out.detail << "counts 1,2,5,13,34 by both routes";
  return out;
}

// ---------------------------------------------------------------- 3
Outcome bracket_oracle_suite() {
  Outcome out;
  // One-time calibration on the identity braid and a single crossing:
  // kappa(2n) = bracket(plat(identity)) / amplitude(identity), and the
  // per-crossing factor mu comes out as 1.
  for (int strands : {2, 4, 6}) {
    const BraidWord id{strands, {}};
    const Complex kappa_measured =
        kauffman_bracket(plat_closure(id)) / plat_amplitude(id);
    REQUIRE_THAT(out, std::abs(kappa_measured - plat_kappa(strands)) < 1e-10);
  }
  const Complex mu = kauffman_bracket(plat_closure(BraidWord{2, {1}})) /
                     (plat_kappa(2) * plat_amplitude(BraidWord{2, {1}}));
  REQUIRE_THAT(out, std::abs(mu - 1.0) < 1e-10);

  Rng rng(20240201);
  double worst = 0.0;
  const int cases = 100;
  for (int i = 0; i < cases; ++i) {
    const int strands = (rng.coin()) ? 4 : 6;
    const int len = 1 + static_cast<int>(rng.uniform_index(12));
    const BraidWord w = random_braid_word(rng, strands, len);
    const Complex via_rep = plat_kappa(strands) * plat_amplitude(w);
    const Complex via_sum = kauffman_bracket(plat_closure(w));
    worst = std::max(worst, std::abs(via_rep - via_sum));
  }
  out.detail << cases << " random words, max |rep - state sum| = " << worst;
  REQUIRE_THAT(out, worst <= 1e-8);
  return out;
}

// ---------------------------------------------------------------- 4
Outcome measurement_identity_suite() {
  Outcome out;
  for (int strands : {4, 6, 8}) {
    REQUIRE_THAT(out, std::abs(prob_via_jones(BraidWord{strands, {}}) - 1.0) <= 1e-10);
  }
  BracketOptions opts;
  opts.threads = 4;
  Rng rng(777);
  double worst = 0.0;
  const int cases = 50;
  for (int i = 0; i < cases; ++i) {
    const int strands = (rng.coin()) ? 4 : 6;
    const int len = 1 + static_cast<int>(rng.uniform_index(8));
    const BraidWord b = random_braid_word(rng, strands, len);
    const double sim = measure_pair(execute_braid(initialize(strands), b), 1).prob0;
    const double formula = prob_via_jones(b, opts);
    worst = std::max(worst, std::abs(sim - formula));
  }
  out.detail << cases << " random braids, max |simulated - formula| = " << worst;
  REQUIRE_THAT(out, worst <= 1e-8);
  return out;
}

// ---------------------------------------------------------------- 5
Outcome jones_regression_suite() {
  Outcome out;
  REQUIRE_THAT(out, std::abs(jones_at(plat_closure(BraidWord{2, {}})) - 1.0) <= 1e-10);
  REQUIRE_THAT(out, std::abs(jones_at(plat_closure(BraidWord{4, {}})) -
                             Complex(-kGoldenRatio, 0.0)) <= 1e-10);
  // Trefoil: state-sum route vs the closed form -t^-4 + t^-3 + t^-1
  // evaluated independently at t = e^{2 pi i / 5}.
  const LinkDiagram tref = plat_closure(BraidWord{4, {2, 2, 2}});
  REQUIRE_THAT(out, count_components(tref) == 1);
  const double angle = 2.0 * std::numbers::pi / 5.0;
  const Complex closed = -std::polar(1.0, -4.0 * angle) + std::polar(1.0, -3.0 * angle) +
                         std::polar(1.0, -1.0 * angle);
  const Complex computed = jones_at(tref);
  out.detail << "trefoil " << computed << " vs closed form " << closed;
  REQUIRE_THAT(out, std::abs(computed - closed) <= 1e-10);
  return out;
}

// ---------------------------------------------------------------- 6
Outcome reidemeister_suite() {
  Outcome out;
  Rng rng(606);
  double worst2 = 0.0, worst3 = 0.0, worst1 = 0.0;
  for (int trial = 0; trial < 50; ++trial) {
    const int strands = (rng.coin()) ? 4 : 6;
    const BraidWord base = random_braid_word(rng, strands, 4);
    const Complex br = kauffman_bracket(plat_closure(base));

    // RII: insert sigma_i sigma_i^-1.
    const int i = 1 + static_cast<int>(rng.uniform_index(strands - 1));
    BraidWord r2 = base;
    r2.letters.push_back(i);
    r2.letters.push_back(-i);
    worst2 = std::max(worst2, std::abs(kauffman_bracket(plat_closure(r2)) - br));

    // RIII: braid relation slide at a random index.
    const int j = 1 + static_cast<int>(rng.uniform_index(strands - 2));
    BraidWord a = base, b = base;
    for (int letter : {j, j + 1, j}) a.letters.push_back(letter);
    for (int letter : {j + 1, j, j + 1}) b.letters.push_back(letter);
    worst3 = std::max(
        worst3, std::abs(kauffman_bracket(plat_closure(a)) - kauffman_bracket(plat_closure(b))));

    // RI: kink with a random chirality on a random wire.
    const int wire = 1 + static_cast<int>(rng.uniform_index(strands));
    const int sign = rng.coin() ? 1 : -1;
    const LinkDiagram kinked = plat_closure(base).with_kink(wire, sign);
    const int dw = writhe(kinked) - writhe(plat_closure(base));
    const Complex factor = -unit_phase_pow(kBraidAAngle, 3L * dw);
    worst1 = std::max(worst1, std::abs(kauffman_bracket(kinked) - factor * br));
    worst1 = std::max(worst1, std::abs(jones_at(kinked) - jones_at(plat_closure(base))));
  }
  out.detail << "max deviations: RII " << worst2 << ", RIII " << worst3 << ", RI " << worst1;
  REQUIRE_THAT(out, worst2 <= 1e-10);
  REQUIRE_THAT(out, worst3 <= 1e-10);
  REQUIRE_THAT(out, worst1 <= 1e-10);
  return out;
}

// Naive depth-limited enumerator used as the independent search oracle.
void naive_enumerate(int depth, std::vector<int>& word,
                     const std::function<void(const BraidWord&)>& visit) {
  visit(free_reduce(BraidWord{4, word}));
  if (depth == 0) return;
  for (int idx = 1; idx <= 3; ++idx) {
    for (int sign : {1, -1}) {
      word.push_back(sign * idx);
      naive_enumerate(depth - 1, word, visit);
      word.pop_back();
    }
  }
}

Eigen::Matrix2cd haar_2x2(Rng& rng) {
  Eigen::Matrix2cd a;
  for (int r = 0; r < 2; ++r) {
    for (int c = 0; c < 2; ++c) a(r, c) = Complex(rng.gaussian(), rng.gaussian());
  }
  Eigen::Vector2cd v0 = a.col(0).normalized();
  Eigen::Vector2cd v1 = a.col(1) - v0 * (v0.adjoint() * a.col(1));
  v1.normalize();
  Eigen::Matrix2cd u;
  u.col(0) = v0;
  u.col(1) = v1;
  return u;
}

// ---------------------------------------------------------------- 7
Outcome compiler_suite() {
  Outcome out;
  // Exact targets.
  {
    const CompilationResult id = compile(GateTarget{Eigen::Matrix2cd::Identity(), {1}}, 3);
    REQUIRE_THAT(out, id.word.letters.empty());
    REQUIRE_THAT(out, id.distance <= 1e-10);
    const CompilationResult gen =
        compile(GateTarget{batch_image(BraidWord{4, {2}}), {1}}, 3);
    REQUIRE_THAT(out, gen.word.letters == std::vector<int>{2});
    REQUIRE_THAT(out, gen.distance <= 1e-10);
  }
  // Depth-monotone distances and the end-to-end bound on 10 seeded targets.
  Rng rng(4242);
  double worst_violation = 0.0;
  for (int t = 0; t < 10; ++t) {
    const GateTarget target{haar_2x2(rng), {1}};
    double prev = std::numeric_limits<double>::infinity();
    for (int depth = 0; depth <= 5; ++depth) {
      const CompilationResult res = compile(target, depth);
      REQUIRE_THAT(out, res.distance <= prev + 1e-13);
      prev = res.distance;
    }
    const CompilationResult res = compile(target, 5);
    const double p_topo = measure_pair(execute_braid(initialize(4), res.word), 1).prob0;
    const double p_target = std::norm(target.matrix(0, 0));
    worst_violation = std::max(worst_violation, std::abs(p_topo - p_target) - 2.0 * res.distance);
  }
  REQUIRE_THAT(out, worst_violation <= 1e-10);

  // Depth-5 equality with the naive enumerator.
  Rng rng2(999);
  for (int t = 0; t < 3; ++t) {
    const GateTarget target{haar_2x2(rng2), {1}};
    const CompilationResult res = compile(target, 5);
    double best = std::numeric_limits<double>::infinity();
    std::vector<int> best_word;
    std::vector<int> scratch;
    naive_enumerate(5, scratch, [&](const BraidWord& w) {
      const double d = gate_distance(batch_image(w), target.matrix);
      if (d < best) {
        best = d;
        best_word = w.letters;
      }
    });
    REQUIRE_THAT(out, std::abs(res.distance - best) <= 1e-12);
    REQUIRE_THAT(out, res.word.letters == best_word);
  }
  out.detail << "exact, monotone, bounded, naive-match";
  return out;
}

// ---------------------------------------------------------------- 8
Outcome kcode_suite() {
  Outcome out;
  {
    Eigen::MatrixXcd basis = Eigen::MatrixXcd::Zero(16, 1);
    basis(5, 0) = 1.0;
    const Subspace w(4, 2, basis);
    REQUIRE_THAT(out, max_k(w) == 4);
  }
  {
    const KCodeReport rep = is_k_code(ghz_subspace(), 1);
    REQUIRE_THAT(out, !rep.is_code);
    REQUIRE_THAT(out, rep.witness.has_value());
    if (rep.witness.has_value()) {
      // Z-type witness: diagonal matrix unit.
      bool diagonal = true;
      for (long r = 0; r < rep.witness->op.rows(); ++r) {
        for (long c = 0; c < rep.witness->op.cols(); ++c) {
          if (r != c && std::abs(rep.witness->op(r, c)) > 0) diagonal = false;
        }
      }
      REQUIRE_THAT(out, diagonal);
    }
  }
  {
    const Subspace w = five_qubit_code_subspace();
    REQUIRE_THAT(out, is_k_code(w, 2).is_code);
    const KCodeReport rep3 = is_k_code(w, 3);
    REQUIRE_THAT(out, !rep3.is_code);
    REQUIRE_THAT(out, rep3.witness.has_value());
    if (rep3.witness.has_value()) {
      REQUIRE_THAT(out, rep3.witness->support.size() == 3);
    }
    REQUIRE_THAT(out, max_k(w) == 2);
  }
  out.detail << "1-dim, ghz, five-qubit code";
  return out;
}

// ---------------------------------------------------------------- 9
Outcome circuit_suite() {
  Outcome out;
  // Printed matrices, bit for bit.
  const Eigen::MatrixXcd& cnot = gate_by_name("cnot").matrix;
  Eigen::MatrixXcd cnot_expect(4, 4);
  cnot_expect << 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0;
  REQUIRE_THAT(out, (cnot - cnot_expect).norm() == 0.0);
  const Eigen::MatrixXcd& phase = gate_by_name("phase").matrix;
  REQUIRE_THAT(out, phase(0, 0) == Complex(1, 0));
  REQUIRE_THAT(out, phase(1, 1) == std::polar(1.0, 2.0 * std::numbers::pi / 5.0));
  REQUIRE_THAT(out, phase(0, 1) == Complex(0, 0));
  REQUIRE_THAT(out, phase(1, 0) == Complex(0, 0));

  // Eq-(1)-style probability against a dense matrix-product oracle.
  Rng rng(31337);
  auto kron = [](const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
    Eigen::MatrixXcd m(a.rows() * b.rows(), a.cols() * b.cols());
    for (long i = 0; i < a.rows(); ++i) {
      for (long j = 0; j < a.cols(); ++j) {
        m.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
      }
    }
    return m;
  };
  double worst = 0.0;
  for (int trial = 0; trial < 20; ++trial) {
    Circuit c;
    c.n = 3;
    Eigen::MatrixXcd full = Eigen::MatrixXcd::Identity(8, 8);
    for (int g = 0; g < 5; ++g) {
      Gate gate;
      gate.matrix = haar_2x2(rng);
      gate.targets = {1 + static_cast<int>(rng.uniform_index(3))};
      c.gates.push_back(gate);
      Eigen::MatrixXcd dense = Eigen::MatrixXcd::Identity(1, 1);
      for (int q = 1; q <= 3; ++q) {
        dense = kron(dense, q == gate.targets[0] ? gate.matrix
                                                 : Eigen::MatrixXcd::Identity(2, 2));
      }
      full = dense * full;
    }
    double expect = 0.0;
    for (long idx = 4; idx < 8; ++idx) expect += std::norm(full(idx, 0));
    worst = std::max(worst, std::abs(prob_first_qubit_one(c) - expect));
  }
  REQUIRE_THAT(out, worst <= 1e-12);

  // Demo classification against the thresholds.
  auto classify = [](double p) {
    if (p >= kBqpAcceptThreshold) return std::string("accept");
    if (p <= kBqpRejectThreshold) return std::string("reject");
    return std::string("inconclusive");
  };
  {
    const GateTarget phase_target{gate_by_name("phase").matrix, {1}};
    const CompilationResult res = compile(phase_target, 4);
    REQUIRE_THAT(out, res.distance <= 1e-9);
    const double p_topo =
        1.0 - measure_pair(execute_braid(initialize(4), res.word), 1).prob0;
    Circuit pc;
    pc.n = 1;
    pc.gates.push_back(Gate{phase_target.matrix, {1}});
    REQUIRE_THAT(out, classify(p_topo) == "reject");
    REQUIRE_THAT(out, classify(prob_first_qubit_one(pc)) == "reject");
  }
  out.detail << "gate matrices exact, oracle max diff " << worst << ", demo classifies";
  return out;
}

// ---------------------------------------------------------------- 10
std::string run_cli(const std::string& args) {
  const std::string cmd = g_cli_path + " " + args + " 2>/dev/null";
  std::string output;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return "<popen failed>";
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) output.append(buf, n);
  pclose(pipe);
  return output;
}

Outcome determinism_suite() {
  Outcome out;
  if (g_cli_path.empty()) {
    out.pass = false;
    out.detail << "no --cli path given";
    return out;
  }
  // A small gate-target fixture for the compile command.
  const std::string target_path = "/tmp/tqc_acceptance_target.json";
  {
    std::FILE* f = std::fopen(target_path.c_str(), "w");
    if (f != nullptr) {
      std::fputs("{\"scope\":[1],\"matrix\":[[[0,0],[1,0]],[[1,0],[0,0]]]}", f);
      std::fclose(f);
    }
  }
  const std::vector<std::string> commands{
      "--json verify --random 8 --strands 4 --len 6 --seed 11",
      "--json bracket --letters \"1 2 -3 1 2 1 -2 3 1 2 -1 2 3 3 1 2\" --strands 4",
      "--json jones --letters \"2 2 2\" --strands 4",
      "--json kcode --builtin five-qubit --k 3",
      "--json dims --anyons 12",
      "--json simulate --letters \"1 2 -3\" --strands 4",
      "--json compile --target " + target_path + " --max-depth 5",
  };
  for (const std::string& cmd : commands) {
    const std::string one = run_cli("--threads 1 " + cmd);
    const std::string four = run_cli("--threads 4 " + cmd);
    REQUIRE_THAT(out, !one.empty());
    REQUIRE_THAT(out, one == four);
    if (one != four) out.detail << " [mismatch on: " << cmd << "]";
  }
  // In-process checks of the same property.
  {
    Rng rng(8);
    const BraidWord w = random_braid_word(rng, 6, 16);
    const LinkDiagram d = plat_closure(w);
    const Complex a = kauffman_bracket(d, kBraidA, {.threads = 1});
    const Complex b = kauffman_bracket(d, kBraidA, {.threads = 4});
    REQUIRE_THAT(out, a.real() == b.real() && a.imag() == b.imag());
    const GateTarget t{haar_2x2(rng), {1}};
    const CompilationResult c1 = compile(t, 4, 1e-2, 1);
    const CompilationResult c4 = compile(t, 4, 1e-2, 4);
    REQUIRE_THAT(out, c1.word.letters == c4.word.letters && c1.distance == c4.distance);
  }
  out.detail << "byte-identical JSON with --threads 1 and 4";
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  for (int i = 1; i + 1 < argc; ++i) {
    if (std::string(argv[i]) == "--cli") g_cli_path = argv[i + 1];
  }

  struct Criterion {
    const char* name;
    double time_limit_s;
    std::function<Outcome()> fn;
  };
  const std::vector<Criterion> criteria{
      {"algebraic suite (TL/braid relations, unitarity, n <= 10)", 60, algebraic_suite},
      {"dimension suite (1,2,5,13,34 by two routes)", 60, dimension_suite},
      {"bracket oracle equivalence (100 random words)", 300, bracket_oracle_suite},
      {"measurement identity (50 random braids, identity = 1)", 600, measurement_identity_suite},
      {"jones regression (unknot, unlink, trefoil)", 60, jones_regression_suite},
      {"reidemeister invariance (50 diagrams)", 300, reidemeister_suite},
      {"compiler suite (exact, monotone, bound, naive match)", 300, compiler_suite},
      {"k-code suite (1-dim, ghz, five-qubit)", 120, kcode_suite},
      {"circuit reference (gates, dense oracle, demo)", 120, circuit_suite},
      {"determinism (--threads 1 vs N byte-identical)", 300, determinism_suite},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = criteria[i].fn();
    } catch (const std::exception& e) {
      out.pass = false;
      out.detail << " [exception: " << e.what() << "]";
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (elapsed > criteria[i].time_limit_s) {
      out.pass = false;
      out.detail << " [time limit " << criteria[i].time_limit_s << "s exceeded]";
    }
    std::cout << (out.pass ? "PASS" : "FAIL") << " criterion " << (i + 1) << ": "
              << criteria[i].name << " - " << out.detail.str() << " (" << elapsed << "s)\n";
    failures += out.pass ? 0 : 1;
  }
  if (failures > 0) {
    std::cout << failures << " criterion(s) failed\n";
    return 1;
  }
  std::cout << "all 10 criteria passed\n";
  return 0;
}
