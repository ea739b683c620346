#pragma once

#include <cstdint>
#include <random>

namespace tqc {

// Deterministic random source: std::mt19937_64 (whose output sequence is
// fixed by the standard) with hand-rolled derived draws, so results are
// identical across platforms and standard libraries.  All randomness in the
// repo flows through an explicit seed.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  // Uniform in [0, n) by rejection sampling (unbiased).
  std::uint64_t uniform_index(std::uint64_t n);

  // Uniform double in [0, 1) with 53 random bits.
  double uniform();

  bool coin() { return (next_u64() & 1u) != 0; }

  // Standard normal via Box-Muller.
  double gaussian();

 private:
  std::mt19937_64 engine_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace tqc
