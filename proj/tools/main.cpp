// Command-line workbench: fusion-space dimensions, bracket/Jones
// evaluation of plat closures, the anyonic measurement pipeline and its
// closed-form cross-check, braid compilation, and k-code checking.

#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "tqc/anyon_register.hpp"
#include "tqc/bracket.hpp"
#include "tqc/braid.hpp"
#include "tqc/circuit.hpp"
#include "tqc/compiler.hpp"
#include "tqc/errors.hpp"
#include "tqc/fusion.hpp"
#include "tqc/kcode.hpp"
#include "tqc/link.hpp"
#include "tqc/rng.hpp"
#include "tqc/tl_rep.hpp"

namespace {

using nlohmann::json;
using namespace tqc;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitNumeric = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot write file: " + path);
  out << content;
}

json complex_json(const Complex& z) { return json::array({z.real(), z.imag()}); }

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(12);
  os << x;
  return os.str();
}

std::string fmt(const Complex& z) {
  std::ostringstream os;
  os.precision(12);
  os << z.real() << (z.imag() >= 0 ? "+" : "") << z.imag() << "i";
  return os.str();
}

// Common braid-word input: a file in the text format, or inline letters.
struct WordInput {
  std::string file;
  std::string letters;
  int strands = 0;

  void attach(CLI::App* cmd) {
    auto* f = cmd->add_option("--word", file, "braid word file (text format)");
    auto* l = cmd->add_option("--letters", letters, "inline letters, e.g. \"1 -2 3\"");
    auto* s = cmd->add_option("--strands", strands, "strand count for --letters");
    l->needs(s);
    f->excludes(l);
  }

  bool present() const { return !file.empty() || strands > 0; }

  BraidWord resolve() const {
    if (!file.empty()) return parse_braid_word(read_file(file));
    if (strands > 0) {
      std::string text = "n=" + std::to_string(strands) + "\n" + letters + "\n";
      return parse_braid_word(text);
    }
    throw std::invalid_argument("no braid word given: use --word or --letters/--strands");
  }
};

LinkDiagram build_diagram(const BraidWord& w, int loop_pair) {
  LinkDiagram d = plat_closure(w);
  if (loop_pair > 0) d = insert_measurement_loop(d, loop_pair);
  return d;
}

json stats_json(const LinkDiagram& d) {
  const LinkStats s = diagram_stats(d);
  return json{{"components", s.components}, {"writhe", s.writhe}, {"minima", s.minima}};
}

struct DemoRow {
  std::string name;
  CompilationResult compiled;
  double p_topo = 0.0;
  double p_ref = 0.0;
  std::string verdict;
};

std::string classify(double p) {
  if (p >= kBqpAcceptThreshold) return "accept";
  if (p <= kBqpRejectThreshold) return "reject";
  return "inconclusive";
}

DemoRow run_demo_target(const std::string& name, const Eigen::Matrix2cd& gate, int depth,
                        int sk_levels, int threads) {
  DemoRow row;
  row.name = name;
  GateTarget target{gate, {1}};
  row.compiled = compile(target, depth, 1e-2, threads);
  if (sk_levels > 0) row.compiled = sk_refine(target, row.compiled, sk_levels);

  const AnyonRegister reg = execute_braid(initialize(4), row.compiled.word);
  row.p_topo = 1.0 - measure_pair(reg, 1).prob0;

  Circuit circuit;
  circuit.n = 1;
  circuit.gates.push_back(Gate{gate, {1}});
  row.p_ref = prob_first_qubit_one(circuit);
  row.verdict = classify(row.p_topo);
  return row;
}

int run(int argc, char** argv) {
  CLI::App app{"anyonic braiding workbench"};
  app.require_subcommand(1);
  app.fallthrough();

  bool as_json = false;
  int threads = 1;
  app.add_flag("--json", as_json, "emit a single JSON document on stdout");
  app.add_option("--threads", threads, "worker threads for parallel scans")
      ->default_val(1)
      ->check(CLI::Range(1, 256));

  // dims
  auto* dims = app.add_subcommand("dims", "fusion-path count of the anyon state space");
  int dims_anyons = 0;
  int dims_sector = 0;
  dims->add_option("--anyons", dims_anyons, "number of type-1 anyons")->required();
  dims->add_option("--sector", dims_sector, "total charge sector (0..3)")->default_val(0);

  // bracket
  auto* bracket_cmd = app.add_subcommand("bracket", "Kauffman bracket of a plat closure");
  WordInput bracket_word;
  bracket_word.attach(bracket_cmd);
  int bracket_loop = 0;
  std::string bracket_export;
  bracket_cmd->add_option("--loop", bracket_loop,
                          "insert a measurement loop around this cup pair");
  bracket_cmd->add_option("--export", bracket_export, "write the diagram JSON to this file");

  // jones
  auto* jones_cmd = app.add_subcommand("jones", "Jones evaluation at the fifth root of unity");
  WordInput jones_word;
  jones_word.attach(jones_cmd);
  int jones_loop = 0;
  std::string jones_export;
  jones_cmd->add_option("--loop", jones_loop,
                        "insert a measurement loop around this cup pair");
  jones_cmd->add_option("--export", jones_export, "write the diagram JSON to this file");

  // simulate
  auto* sim_cmd =
      app.add_subcommand("simulate", "initialize, braid, and measure the leftmost pair");
  WordInput sim_word;
  sim_word.attach(sim_cmd);
  bool sim_readout = false;
  sim_cmd->add_flag("--readout", sim_readout,
                    "also print the computational readout distribution");

  // verify
  auto* verify_cmd = app.add_subcommand(
      "verify", "compare the simulated measurement with the Jones-formula route");
  std::string verify_word_file;
  int verify_random = 0;
  int verify_strands = 4;
  int verify_len = 6;
  std::uint64_t verify_seed = 1;
  double verify_tol = 1e-8;
  verify_cmd->add_option("--word", verify_word_file, "braid word file to verify");
  verify_cmd->add_option("--random", verify_random, "number of random braids to test");
  verify_cmd->add_option("--strands", verify_strands, "strand count for random braids")
      ->default_val(4);
  verify_cmd->add_option("--len", verify_len, "length of random braids")->default_val(6);
  verify_cmd->add_option("--seed", verify_seed, "random seed")->default_val(1);
  verify_cmd->add_option("--tol", verify_tol, "agreement tolerance")->default_val(1e-8);

  // compile
  auto* compile_cmd = app.add_subcommand("compile", "search a braid word for a gate target");
  std::string compile_target_path;
  int compile_depth = 6;
  double compile_leak_tol = 1e-2;
  int compile_sk = 0;
  std::string compile_out;
  compile_cmd->add_option("--target", compile_target_path, "gate target JSON file")->required();
  compile_cmd->add_option("--max-depth", compile_depth, "search depth")->default_val(6);
  compile_cmd->add_option("--leakage-tol", compile_leak_tol, "leakage tolerance")
      ->default_val(1e-2);
  compile_cmd->add_option("--sk", compile_sk, "recursive refinement levels")->default_val(0);
  compile_cmd->add_option("--out", compile_out,
                          "write the braid word here (sidecar JSON at <out>.json)");

  // kcode
  auto* kcode_cmd = app.add_subcommand("kcode", "check the k-code condition of a subspace");
  std::string kcode_input;
  std::string kcode_builtin;
  int kcode_k = -1;
  bool kcode_max = false;
  double kcode_tol = 1e-8;
  kcode_cmd->add_option("--input", kcode_input, "subspace JSON file");
  kcode_cmd->add_option("--builtin", kcode_builtin,
                        "stock subspace: ghz | five-qubit | full-2x2");
  kcode_cmd->add_option("--k", kcode_k, "locality to check");
  kcode_cmd->add_flag("--max", kcode_max, "report the largest k that passes");
  kcode_cmd->add_option("--tol", kcode_tol, "scalar-compression tolerance")->default_val(1e-8);

  // demo
  auto* demo_cmd = app.add_subcommand(
      "demo", "compile small gates, run them through the anyonic pipeline, and classify");
  int demo_depth = 7;
  int demo_sk = 0;
  demo_cmd->add_option("--depth", demo_depth, "compiler search depth")->default_val(7);
  demo_cmd->add_option("--sk", demo_sk, "refinement levels")->default_val(0);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  json out;

  if (dims->parsed()) {
    if (dims_sector < 0 || dims_sector > 3) {
      throw std::invalid_argument("sector must be in 0..3");
    }
    const std::uint64_t count = fusion_path_count(dims_anyons, dims_sector);
    out = json{{"anyons", dims_anyons}, {"sector", dims_sector}, {"count", count}};
    if (!as_json) {
      std::cout << count << "\n";
      return kExitOk;
    }
  } else if (bracket_cmd->parsed() || jones_cmd->parsed()) {
    const bool is_jones = jones_cmd->parsed();
    const WordInput& wi = is_jones ? jones_word : bracket_word;
    const int loop = is_jones ? jones_loop : bracket_loop;
    const std::string& export_path = is_jones ? jones_export : bracket_export;
    const BraidWord w = wi.resolve();
    const LinkDiagram d = build_diagram(w, loop);
    if (!export_path.empty()) write_file(export_path, d.to_json());
    BracketOptions opts;
    opts.threads = threads;
    const Complex br = kauffman_bracket(d, kBraidA, opts);
    out = json{{"strands", d.strands()},
               {"crossings", d.crossing_count()},
               {"stats", stats_json(d)},
               {"bracket", complex_json(br)}};
    if (is_jones) {
      const Complex v = jones_at(d, {}, opts);
      out["jones"] = complex_json(v);
      out["abs_jones"] = std::abs(v);
      if (!as_json) {
        const LinkStats s = diagram_stats(d);
        std::cout << "jones = " << fmt(v) << "  |jones| = " << fmt(std::abs(v))
                  << "  (c=" << s.components << ", w=" << s.writhe << ", m=" << s.minima
                  << ")\n";
        return kExitOk;
      }
    } else if (!as_json) {
      std::cout << "bracket = " << fmt(br) << "\n";
      return kExitOk;
    }
  } else if (sim_cmd->parsed()) {
    const BraidWord w = sim_word.resolve();
    const AnyonRegister reg = execute_braid(initialize(w.strands), w);
    const double prob0 = measure_pair(reg, 1).prob0;
    const double leak = leakage(reg);
    out = json{{"anyons", w.strands}, {"prob0", prob0}, {"leakage", leak}};
    if (sim_readout) {
      json dist = json::object();
      for (const auto& [bits, p] : readout_distribution(reg)) dist[bits] = p;
      out["readout"] = dist;
    }
    if (!as_json) {
      std::cout << "prob(0) = " << fmt(prob0) << "\nleakage = " << fmt(leak) << "\n";
      if (sim_readout) {
        for (const auto& [bits, p] : readout_distribution(reg)) {
          std::cout << "  " << bits << ": " << fmt(p) << "\n";
        }
      }
      return kExitOk;
    }
  } else if (verify_cmd->parsed()) {
    std::vector<BraidWord> words;
    if (!verify_word_file.empty()) {
      words.push_back(parse_braid_word(read_file(verify_word_file)));
    }
    if (verify_random > 0) {
      Rng rng(verify_seed);
      for (int i = 0; i < verify_random; ++i) {
        words.push_back(random_braid_word(rng, verify_strands, verify_len));
      }
    }
    if (words.empty()) {
      throw std::invalid_argument("verify needs --word or --random N");
    }
    BracketOptions opts;
    opts.threads = threads;
    json cases = json::array();
    int agree = 0;
    double worst = 0.0;
    for (const BraidWord& b : words) {
      const double sim = measure_pair(execute_braid(initialize(b.strands), b), 1).prob0;
      const double formula = prob_via_jones(b, opts);
      const double diff = std::abs(sim - formula);
      worst = std::max(worst, diff);
      const bool ok = diff <= verify_tol;
      agree += ok ? 1 : 0;
      json letters = json::array();
      for (int l : b.letters) letters.push_back(l);
      cases.push_back(json{{"strands", b.strands},
                           {"letters", letters},
                           {"simulated", sim},
                           {"formula", formula},
                           {"diff", diff},
                           {"agree", ok}});
    }
    const bool all = agree == static_cast<int>(words.size());
    out = json{{"tol", verify_tol},
               {"total", words.size()},
               {"agree", agree},
               {"max_diff", worst},
               {"all_agree", all},
               {"cases", cases}};
    if (!as_json) {
      std::cout << agree << "/" << words.size() << " agree <= " << fmt(verify_tol)
                << "  (max deviation " << fmt(worst) << ")\n";
      return all ? kExitOk : kExitNumeric;
    }
    if (!all) {
      std::cout << out.dump() << "\n";
      return kExitNumeric;
    }
  } else if (compile_cmd->parsed()) {
    json tj;
    try {
      tj = json::parse(read_file(compile_target_path));
    } catch (const json::parse_error& e) {
      throw std::invalid_argument(std::string("bad target JSON: ") + e.what());
    }
    GateTarget target;
    for (const auto& b : tj.at("scope")) target.scope.push_back(b.get<int>());
    const auto& rows = tj.at("matrix");
    const long dim = static_cast<long>(rows.size());
    target.matrix.resize(dim, dim);
    for (long r = 0; r < dim; ++r) {
      for (long c = 0; c < dim; ++c) {
        const auto& e = rows.at(r).at(c);
        target.matrix(r, c) = Complex(e.at(0).get<double>(), e.at(1).get<double>());
      }
    }
    CompilationResult res = compile(target, compile_depth, compile_leak_tol, threads);
    if (compile_sk > 0) res = sk_refine(target, res, compile_sk);
    if (!compile_out.empty()) {
      write_file(compile_out, format_braid_word(res.word));
      write_file(compile_out + ".json", res.sidecar_json());
    }
    json letters = json::array();
    for (int l : res.word.letters) letters.push_back(l);
    out = json{{"strands", res.word.strands},
               {"letters", letters},
               {"distance", res.distance},
               {"leakage_bound", res.leakage_bound},
               {"depth_searched", res.depth_searched}};
    if (!as_json) {
      std::cout << "word: " << format_braid_word(res.word) << "distance = "
                << fmt(res.distance) << ", leakage <= " << fmt(res.leakage_bound)
                << ", depth " << res.depth_searched << "\n";
      return kExitOk;
    }
  } else if (kcode_cmd->parsed()) {
    std::optional<Subspace> space;
    if (!kcode_input.empty()) {
      space.emplace(Subspace::from_json(read_file(kcode_input)));
    } else if (!kcode_builtin.empty()) {
      if (kcode_builtin == "ghz") {
        space.emplace(ghz_subspace());
      } else if (kcode_builtin == "five-qubit") {
        space.emplace(five_qubit_code_subspace());
      } else if (kcode_builtin == "full-2x2") {
        space.emplace(full_space_subspace(2, 2));
      } else {
        throw std::invalid_argument("unknown builtin: " + kcode_builtin);
      }
    } else {
      throw std::invalid_argument("kcode needs --input or --builtin");
    }
    out = json{{"n", space->factors()}, {"d", space->local_dim()}, {"dim", space->dim()}};
    if (kcode_max) {
      const int k = max_k(*space, kcode_tol, threads);
      out["max_k"] = k;
      if (!as_json) {
        std::cout << "max k = " << k << "\n";
        return kExitOk;
      }
    } else {
      if (kcode_k < 0) throw std::invalid_argument("kcode needs --k or --max");
      const KCodeReport rep = is_k_code(*space, kcode_k, kcode_tol, threads);
      out["k"] = kcode_k;
      out["is_code"] = rep.is_code;
      if (rep.witness.has_value()) {
        json support = json::array();
        for (int f : rep.witness->support) support.push_back(f + 1);
        long row = 0, col = 0;
        for (long r = 0; r < rep.witness->op.rows(); ++r) {
          for (long c = 0; c < rep.witness->op.cols(); ++c) {
            if (rep.witness->op(r, c) != Complex{0.0, 0.0}) {
              row = r;
              col = c;
            }
          }
        }
        out["witness"] = json{{"support", support}, {"unit_row", row}, {"unit_col", col}};
      } else {
        out["witness"] = nullptr;
      }
      if (!as_json) {
        std::cout << (rep.is_code ? "is a " : "is NOT a ") << kcode_k << "-code\n";
        if (rep.witness.has_value()) {
          std::cout << "witness: matrix unit on " << rep.witness->to_string() << "\n";
        }
        return kExitOk;
      }
    }
  } else if (demo_cmd->parsed()) {
    // The four-step pipeline end to end: classically compile a gate, braid
    // it on the anyon register, measure, and classify against the
    // bounded-error thresholds next to the circuit-model reference.
    std::vector<DemoRow> rows;
    rows.push_back(run_demo_target("phase", gate_by_name("phase").matrix, demo_depth,
                                   demo_sk, threads));
    rows.push_back(
        run_demo_target("x", gate_by_name("x").matrix, demo_depth, demo_sk, threads));
    json jrows = json::array();
    for (const DemoRow& r : rows) {
      json letters = json::array();
      for (int l : r.compiled.word.letters) letters.push_back(l);
      jrows.push_back(json{{"target", r.name},
                           {"letters", letters},
                           {"distance", r.compiled.distance},
                           {"p_topo", r.p_topo},
                           {"p_ref", r.p_ref},
                           {"error_bound", 2.0 * r.compiled.distance},
                           {"verdict", r.verdict},
                           {"verdict_ref", classify(r.p_ref)}});
    }
    out = json{{"accept_threshold", kBqpAcceptThreshold},
               {"reject_threshold", kBqpRejectThreshold},
               {"targets", jrows}};
    if (!as_json) {
      for (const DemoRow& r : rows) {
        std::cout << r.name << ": word length " << r.compiled.word.letters.size()
                  << ", distance " << fmt(r.compiled.distance)
                  << "\n  p(1) topological = " << fmt(r.p_topo) << ", reference = "
                  << fmt(r.p_ref) << " (|difference| <= "
                  << fmt(2.0 * r.compiled.distance) << ")\n"
                  << "  classified: " << r.verdict << " (reference "
                  << classify(r.p_ref) << ")\n";
      }
      return kExitOk;
    }
  }

  if (as_json) std::cout << out.dump() << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const CrossingBudgetError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNumeric;
  } catch (const ResourceLimitError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNumeric;
  } catch (const CompileInfeasibleError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNumeric;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNumeric;
  }
}
