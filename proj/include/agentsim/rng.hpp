#pragma once

#include <cmath>
#include <cstdint>

namespace agentsim {

/// A replayable 64-bit seed. Equal seeds plus equal environment
/// definitions produce identical state evolution under identical
/// action sequences.
struct RngSeed {
  std::uint64_t value = 0;
};

/// SplitMix64 generator. The update and output formulas below are the
/// reference definition for every reimplementation (see docs/determinism.md):
///
///   state += 0x9E3779B97F4A7C15
///   z = state
///   z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
///   z = (z ^ (z >> 27)) * 0x94D049BB133111EB
///   output = z ^ (z >> 31)
///
/// unit()      = (output >> 11) * 2^-53          in [0, 1)
/// unit_open() = ((output >> 11) + 1) * 2^-53    in (0, 1]
/// gaussian()  = sqrt(-2 ln u1) * cos(2 pi u2), u1 = unit_open(), u2 = unit().
/// Every gaussian() consumes exactly two raw outputs; the sine branch is
/// never used.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  explicit SplitMix64(RngSeed seed) : state_(seed.value) {}

  std::uint64_t next() {
    state_ += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  /// Uniform double in [0, 1).
  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  /// Uniform double in (0, 1]; safe as a log() argument.
  double unit_open() {
    return static_cast<double>((next() >> 11) + 1) * 0x1.0p-53;
  }

  /// True with probability p. Consumes exactly one raw output, always.
  bool bernoulli(double p) { return unit() < p; }

  /// Standard normal via Box-Muller (cosine branch only).
  double gaussian() {
    const double u1 = unit_open();
    const double u2 = unit();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * kPi * u2);
  }

  /// Uniform integer in [lo, hi], both inclusive. Modulo mapping; used
  /// for agent sampling where a tiny bias is irrelevant.
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<std::int64_t>(next() % span);
  }

  std::uint64_t state() const { return state_; }

 private:
  static constexpr double kPi = 3.14159265358979323846;
  std::uint64_t state_;
};

}  // namespace agentsim
