#pragma once

#include <cstdint>
#include <random>

namespace csatm {

/// Deterministic random source used by the samplers and generators.
///
/// Every logical draw consumes exactly one engine step, so a stream can be
/// repositioned with discard() given only (seed, number of draws). Sampler
/// checkpoints rely on this instead of persisting raw engine state.
class Rng {
 public:
  explicit Rng(std::uint64_t seed = 0) : engine_(seed) {}

  /// 53-bit uniform double in [0, 1). One engine step.
  double u01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  /// Uniform integer in [0, n), n >= 1. One engine step.
  int below(int n) {
    int k = static_cast<int>(u01() * static_cast<double>(n));
    return k >= n ? n - 1 : k;
  }

  void discard(unsigned long long steps) { engine_.discard(steps); }

 private:
  std::mt19937_64 engine_;
};

/// splitmix64 finalizer; used to derive independent sub-stream seeds.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t x = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace csatm
