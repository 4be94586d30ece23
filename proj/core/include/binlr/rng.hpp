#pragma once

#include <cstdint>

#include "binlr/rational.hpp"

namespace binlr {

/// SplitMix64 (Steele, Lea, Flood 2014). The constants are fixed here so that
/// every seeded instance is bit-identical across platforms and ports:
///   state += 0x9E3779B97F4A7C15
///   z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
///   z = (z ^ (z >> 27)) * 0x94D049BB133111EB
///   z ^= z >> 31
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Uniform integer in [lo, hi] via the high half of a 128-bit product.
  std::uint64_t uniform(std::uint64_t lo, std::uint64_t hi) {
    const auto span = static_cast<UInt128>(hi - lo) + 1;
    return lo + static_cast<std::uint64_t>((static_cast<UInt128>(next()) * span) >> 64);
  }

  /// One bit drawn per call: true iff floor(next() * den / 2^64) < num.
  /// Exact for p = 0 and p = 1.
  bool bernoulli(const Rational& p) {
    const auto den = static_cast<UInt128>(p.denominator());
    const auto num = static_cast<UInt128>(p.numerator());
    return ((static_cast<UInt128>(next()) * den) >> 64) < num;
  }

  bool coin() { return (next() >> 63) != 0; }

 private:
  std::uint64_t state_;
};

}  // namespace binlr
