#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

namespace evc {

/// Seeded generator with portable derived draws. std::mt19937_64 output is
/// fixed by the standard; the distributions below avoid std::*_distribution,
/// whose results differ between standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform in [0, n). n must be positive.
  std::size_t below(std::size_t n) {
    const std::uint64_t bound = n;
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return static_cast<std::size_t>(x % bound);
  }

  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  bool coin(double p) { return unit() < p; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace evc
