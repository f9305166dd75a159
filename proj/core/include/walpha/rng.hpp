#pragma once

#include <cstdint>

namespace walpha {

// SplitMix64. The state advances by the golden-gamma increment and the
// output is the Steele-Lea-Flood finalizer. Used instead of the standard
// library distributions so that seeded draws are bit-identical on every
// platform. The constants are repeated in the README.
struct SplitMix64 {
  std::uint64_t state;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    state += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1) with 53 significant bits.
  double next_double() {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
  }
};

}  // namespace walpha
