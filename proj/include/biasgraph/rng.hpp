#pragma once

#include <cstdint>

namespace biasgraph {

/// SplitMix64 (Steele, Lea, Flood 2014). Every randomized routine in the
/// library draws from this generator in a fixed order so that a given seed
/// reproduces the same output on any platform:
///
///   state += 0x9e3779b97f4a7c15
///   z = (state ^ (state >> 30)) * 0xbf58476d1ce4e5b9
///   z = (z ^ (z >> 27)) * 0x94d049bb133111eb
///   return z ^ (z >> 31)
///
/// Derived quantities:
///   uniform01()   = (next() >> 11) * 2^-53
///   coin()        = next() >> 63
///   below(b)      = next() % b, redrawing while next() < (2^64 mod b)
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

  std::uint64_t next() noexcept {
    state_ += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  double uniform01() noexcept { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  bool bernoulli(double p) noexcept { return uniform01() < p; }

  bool coin() noexcept { return (next() >> 63) != 0; }

  std::uint64_t below(std::uint64_t bound) noexcept {
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
      const std::uint64_t r = next();
      if (r >= threshold) return r % bound;
    }
  }

 private:
  std::uint64_t state_;
};

/// Seed for the index-th independent trial/restart of a run seeded with `seed`.
constexpr std::uint64_t derived_seed(std::uint64_t seed, std::uint64_t index) noexcept {
  return seed + index;
}

}  // namespace biasgraph
