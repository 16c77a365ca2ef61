#pragma once

#include <cstdint>

#include "reductions/rational.hpp"

namespace reductions {

// splitmix64: tiny, seedable, identical across platforms. Used by every
// randomized generator so --seed reproduces byte-identical artifacts.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, bound), bound > 0.
  std::uint64_t below(std::uint64_t bound) {
    std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
      std::uint64_t v = next();
      if (v >= threshold) return v % bound;
    }
  }

  // Uniform in [lo, hi] inclusive.
  long long range(long long lo, long long hi) {
    return lo + static_cast<long long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  bool flip() { return (next() & 1) != 0; }

  // Random k/den with k in [lo_num, hi_num].
  Rational rational(long long lo_num, long long hi_num, long long den) {
    return rat(range(lo_num, hi_num), den);
  }

 private:
  std::uint64_t state_;
};

}  // namespace reductions
