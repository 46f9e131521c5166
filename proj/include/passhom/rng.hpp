#pragma once

#include <cstdint>

#include "passhom/surface.hpp"

namespace passhom {

// splitmix64: tiny, fully reproducible across platforms.  Distribution
// helpers use plain modulo; the bias is irrelevant at these ranges.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform-ish in [0, bound); bound must be positive.
  std::uint64_t below(std::uint64_t bound) { return next() % bound; }

  // Uniform-ish in [lo, hi], inclusive.
  Int range(Int lo, Int hi) {
    return lo + static_cast<Int>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  bool coin() { return (next() & 1) != 0; }

 private:
  std::uint64_t state_;
};

}  // namespace passhom
