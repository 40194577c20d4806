#pragma once

#include <cstdint>

namespace holdup {

/// Counter-based uniform stream keyed by (seed, sample index).
///
/// Every sample owns an independent stream, so a sample's draws do not depend
/// on which worker evaluates it or in what order. Draw j of sample i is a
/// SplitMix64 finalization of a Weyl sequence over (seed, i, j).
class SampleStream {
 public:
  SampleStream(std::uint64_t seed, std::uint64_t index) noexcept
      : key_(mix(mix(seed ^ kSeedSalt) + index * kGolden)) {}

  std::uint64_t next_u64() noexcept { return mix(key_ + (++lane_) * kGolden); }

  /// Uniform on [0, 1) with 53 random bits.
  double uniform() noexcept { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  static constexpr std::uint64_t mix(std::uint64_t z) noexcept {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

 private:
  static constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;
  static constexpr std::uint64_t kSeedSalt = 0x6A09E667F3BCC909ULL;

  std::uint64_t key_;
  std::uint64_t lane_ = 0;
};

}  // namespace holdup
