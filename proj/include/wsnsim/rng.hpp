#pragma once

#include <cstdint>
#include <random>

namespace wsnsim {

// Seeded uniform stream shared by one simulation run. mt19937_64 and the
// 53-bit mapping below are fully specified, so a seed reproduces the same
// run on any platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : seed_(seed), gen_(seed) {}

  // Uniform double in [0, 1).
  double uniform01() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  // Uniform double in [0, hi).
  double uniform(double hi) { return uniform01() * hi; }

  // Independent stream for side computations that must not disturb the
  // main sequence (calibration dry-runs and the like).
  Rng fork(std::uint64_t salt) const { return Rng(mix(seed_ ^ salt)); }

  std::uint64_t seed() const { return seed_; }

 private:
  // splitmix64 finalizer
  static std::uint64_t mix(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
  }

  std::uint64_t seed_;
  std::mt19937_64 gen_;
};

}  // namespace wsnsim
