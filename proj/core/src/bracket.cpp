#include "tqc/bracket.hpp"

#include <array>
#include <atomic>
#include <bit>
#include <cmath>
#include <thread>
#include <vector>

#include "tqc/errors.hpp"

namespace tqc {

namespace {

// Per-crossing smoothing tables: port -> paired port within the crossing.
// A-smoothing joins each over-strand port to its counterclockwise-adjacent
// under port:
//   over {0,2}: pairs (0,1), (2,3);   over {1,3}: pairs (1,2), (3,0).
constexpr std::array<int, 4> kPairs01{1, 0, 3, 2};  // (0,1),(2,3)
constexpr std::array<int, 4> kPairs12{3, 2, 1, 0};  // (1,2),(3,0)

struct StateSum {
  const LinkDiagram& d;
  std::vector<const std::array<int, 4>*> smooth_a;  // per crossing
  std::vector<const std::array<int, 4>*> smooth_b;
  std::vector<double> delta_pow;
  std::vector<Complex> a_pow;  // A^(j - crossings), j in 0..2*crossings

  explicit StateSum(const LinkDiagram& diagram, Complex a_var) : d(diagram) {
    const int k = d.crossing_count();
    smooth_a.reserve(k);
    smooth_b.reserve(k);
    for (const auto& c : d.crossings()) {
      smooth_a.push_back(c.over02 ? &kPairs01 : &kPairs12);
      smooth_b.push_back(c.over02 ? &kPairs12 : &kPairs01);
    }
    const double delta = -2.0 * std::real(a_var * a_var);
    const int max_loops = 2 * k + d.free_loops() + d.strands();
    delta_pow.resize(max_loops + 1);
    delta_pow[0] = 1.0;
    for (int i = 1; i <= max_loops; ++i) delta_pow[i] = delta_pow[i - 1] * delta;
    a_pow.resize(2 * k + 1);
    for (int j = 0; j <= 2 * k; ++j) {
      a_pow[j] = std::pow(a_var, Complex(j - k, 0.0));
    }
  }

  // Sum of states in [begin, end), enumerated in index order.  Bit c of a
  // state selects the B-smoothing of crossing c.
  Complex sum_range(std::uint64_t begin, std::uint64_t end) const {
    const int k = d.crossing_count();
    const int n_ports = 4 * k;
    const auto& arcs = d.arcs();
    std::vector<std::uint64_t> stamp(n_ports, ~std::uint64_t{0});
    Complex total{0.0, 0.0};
    for (std::uint64_t state = begin; state < end; ++state) {
      int loops = d.free_loops();
      for (int p0 = 0; p0 < n_ports; ++p0) {
        if (stamp[p0] == state) continue;
        ++loops;
        int p = p0;
        do {
          stamp[p] = state;
          const int ci = p / 4;
          const auto& tbl = (state >> ci) & 1 ? *smooth_b[ci] : *smooth_a[ci];
          const int q = (ci * 4) + tbl[p & 3];
          stamp[q] = state;
          p = arcs[q];
        } while (p != p0);
      }
      const int b_count = std::popcount(state);
      const int exponent = (k - b_count) - b_count + k;  // (#A - #B) + k
      total += a_pow[exponent] * delta_pow[loops - 1];
    }
    return total;
  }
};

}  // namespace

Complex kauffman_bracket(const LinkDiagram& d, Complex A, const BracketOptions& opts) {
  const int k = d.crossing_count();
  if (k > opts.max_crossings) {
    throw CrossingBudgetError("diagram has " + std::to_string(k) +
                              " crossings, state-sum budget is " +
                              std::to_string(opts.max_crossings));
  }
  if (k == 0) {
    const double delta = -2.0 * std::real(A * A);
    const int loops = d.free_loops();
    if (loops == 0) return Complex{0.0, 0.0};
    return Complex(std::pow(delta, loops - 1), 0.0);
  }

  const StateSum sum(d, A);
  const std::uint64_t n_states = std::uint64_t{1} << k;

  // Fixed-size blocks summed independently, then combined in index order:
  // the result is bit-identical for every thread count.
  constexpr std::uint64_t kBlock = 1u << 16;
  const std::uint64_t n_blocks = (n_states + kBlock - 1) / kBlock;
  std::vector<Complex> block_sums(n_blocks);

  const int threads = std::max(1, opts.threads);
  if (threads == 1 || n_blocks == 1) {
    for (std::uint64_t b = 0; b < n_blocks; ++b) {
      block_sums[b] = sum.sum_range(b * kBlock, std::min(n_states, (b + 1) * kBlock));
    }
  } else {
    std::vector<std::thread> pool;
    std::atomic<std::uint64_t> next{0};
    for (int t = 0; t < threads; ++t) {
      pool.emplace_back([&] {
        for (;;) {
          const std::uint64_t b = next.fetch_add(1);
          if (b >= n_blocks) break;
          block_sums[b] = sum.sum_range(b * kBlock, std::min(n_states, (b + 1) * kBlock));
        }
      });
    }
    for (auto& th : pool) th.join();
  }

  Complex total{0.0, 0.0};
  for (std::uint64_t b = 0; b < n_blocks; ++b) total += block_sums[b];
  return total;
}

Complex jones_at(const LinkDiagram& d, const std::vector<bool>& flips,
                 const BracketOptions& opts) {
  const Complex br = kauffman_bracket(d, kBraidA, opts);
  const int c = count_components(d);
  const int w = writhe(d, flips);
  const double sign = (c - 1) % 2 == 0 ? 1.0 : -1.0;
  // (-A) has angle 3*pi/5 + pi.
  const Complex writhe_factor = unit_phase_pow(kBraidAAngle + std::numbers::pi, -3L * w);
  return sign * writhe_factor * br;
}

}  // namespace tqc
