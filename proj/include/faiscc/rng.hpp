#pragma once

#include <cmath>
#include <cstdint>
#include <random>

#include "faiscc/types.hpp"

namespace faiscc {

// Distributions are hand-rolled on top of mt19937_64 because the standard
// engine output is portable but std::*_distribution is not; byte-identical
// reproducibility across stdlibs requires owning the mapping to doubles.

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Derives an independent substream seed from a root seed and a tag chain.
/// The splitting rule used everywhere: fold each tag with splitmix64.
template <typename... Tags>
std::uint64_t derive_seed(std::uint64_t root, Tags... tags) {
  std::uint64_t s = splitmix64(root);
  ((s = splitmix64(s ^ splitmix64(static_cast<std::uint64_t>(tags)))), ...);
  return s;
}

// Stream purposes for derive_seed; values are arbitrary fixed tags.
namespace stream {
inline constexpr std::uint64_t kScenario = 0x5c3a01;
inline constexpr std::uint64_t kSlotData = 0x5c3a02;
inline constexpr std::uint64_t kPso = 0x5c3a03;
inline constexpr std::uint64_t kSweepCell = 0x5c3a04;
}  // namespace stream

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform on [0, 1).
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  /// Uniform on [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Standard normal via Box-Muller (deterministic draw count: 2 per pair).
  double normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    // (0,1] to keep log finite.
    const double u1 = (static_cast<double>(engine_() >> 11) + 1.0) * 0x1.0p-53;
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    spare_ = r * std::sin(kTwoPi * u2);
    have_spare_ = true;
    return r * std::cos(kTwoPi * u2);
  }

  /// Circularly-symmetric complex Gaussian with E|z|^2 = variance.
  cplx cgaussian(double variance) {
    const double s = std::sqrt(variance / 2.0);
    const double re = s * normal();
    const double im = s * normal();
    return {re, im};
  }

 private:
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

}  // namespace faiscc
