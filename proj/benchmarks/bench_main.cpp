#include <benchmark/benchmark.h>

#include "tqc/anyon_register.hpp"
#include "tqc/bracket.hpp"
#include "tqc/compiler.hpp"
#include "tqc/kcode.hpp"
#include "tqc/rng.hpp"
#include "tqc/tl_rep.hpp"

namespace {

using namespace tqc;

void BM_BracketStateSum(benchmark::State& state) {
  Rng rng(1);
  const BraidWord w = random_braid_word(rng, 6, static_cast<int>(state.range(0)));
  const LinkDiagram d = plat_closure(w);
  for (auto _ : state) {
    benchmark::DoNotOptimize(kauffman_bracket(d));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_BracketStateSum)->DenseRange(8, 18, 2)->Complexity();

void BM_BracketThreaded(benchmark::State& state) {
  Rng rng(1);
  const BraidWord w = random_braid_word(rng, 6, 18);
  const LinkDiagram d = plat_closure(w);
  BracketOptions opts;
  opts.threads = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(kauffman_bracket(d, kBraidA, opts));
  }
}
BENCHMARK(BM_BracketThreaded)->Arg(1)->Arg(2)->Arg(4);

void BM_RepresentWord(benchmark::State& state) {
  Rng rng(2);
  const int strands = static_cast<int>(state.range(0));
  const BraidWord w = random_braid_word(rng, strands, 50);
  for (auto _ : state) {
    benchmark::DoNotOptimize(represent_word(w, 0));
  }
}
BENCHMARK(BM_RepresentWord)->DenseRange(6, 12, 2);

void BM_MeasurementPipeline(benchmark::State& state) {
  Rng rng(3);
  const BraidWord w = random_braid_word(rng, 8, 20);
  for (auto _ : state) {
    const AnyonRegister r = execute_braid(initialize(8), w);
    benchmark::DoNotOptimize(measure_pair(r, 1).prob0);
  }
}
BENCHMARK(BM_MeasurementPipeline);

void BM_CompileDepth(benchmark::State& state) {
  Rng rng(4);
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
  const GateTarget target{u, {1}};
  for (auto _ : state) {
    benchmark::DoNotOptimize(compile(target, static_cast<int>(state.range(0))));
  }
}
BENCHMARK(BM_CompileDepth)->DenseRange(2, 6, 1);

void BM_KCodeFiveQubit(benchmark::State& state) {
  const Subspace w = five_qubit_code_subspace();
  for (auto _ : state) {
    benchmark::DoNotOptimize(is_k_code(w, static_cast<int>(state.range(0))));
  }
}
BENCHMARK(BM_KCodeFiveQubit)->Arg(2)->Arg(3);

}  // namespace

BENCHMARK_MAIN();
