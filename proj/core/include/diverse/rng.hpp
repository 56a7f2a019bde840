#pragma once

#include <cstdint>

namespace diverse {

/// SplitMix64 (Steele, Lea & Flood 2014): a tiny, portable, fully specified
/// 64-bit generator. Used wherever reproducible, platform-independent
/// streams are required (the catalog generator and the test harnesses);
/// std::mt19937_64 is avoided because the standard leaves distribution
/// output unspecified across implementations.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

  std::uint64_t next() noexcept {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Uniform double in [0, 1), 53 bits of randomness.
  double next_double() noexcept {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
  }

  /// Uniform integer in [0, bound) via 128-bit multiply-shift.
  /// bound must be non-zero.
  std::uint64_t next_below(std::uint64_t bound) noexcept {
    const auto wide = static_cast<unsigned __int128>(next()) * bound;
    return static_cast<std::uint64_t>(wide >> 64);
  }

 private:
  std::uint64_t state_;
};

}  // namespace diverse
