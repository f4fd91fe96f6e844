#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace defenselab {

// Seeded random stream. All draws are derived from raw mt19937_64 output with
// explicit arithmetic (no std::*_distribution), so a given seed plus call
// sequence yields the same values on every platform.
class RandomSource {
public:
  explicit RandomSource(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  double exponential(double rate) { return -std::log1p(-uniform01()) / rate; }

private:
  std::mt19937_64 engine_;
};

}  // namespace defenselab
