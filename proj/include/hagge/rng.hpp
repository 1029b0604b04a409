#pragma once

#include <cstdint>

namespace hagge {

// Deterministic generator contract (part of the scene-file/report contract,
// so fixtures are reproducible across builds and platforms):
//
//   SplitMix64 state update:  s += 0x9E3779B97F4A7C15
//   output mix:               z = s; z = (z ^ z>>30) * 0xBF58476D1CE4E5B9;
//                             z = (z ^ z>>27) * 0x94D049BB133111EB; z ^= z>>31
//   substream(seed, k):       SplitMix64 seeded with
//                             mix64(seed + (k+1) * 0x9E3779B97F4A7C15)
//
// Scene i of a campaign draws from substream(campaign_seed, i); resampling
// attempt j of that scene draws from substream(substream_seed(campaign_seed, i), j).
// Streams are therefore independent per scene, and parallel verification
// produces byte-identical reports to a serial run.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : s_(seed) {}

  std::uint64_t next() {
    s_ += 0x9E3779B97F4A7C15ull;
    return mix(s_);
  }

  // value in [0, n), n >= 1; uses plain reduction, which the contract fixes
  std::uint64_t below(std::uint64_t n) { return next() % n; }

  // value in [lo, hi] inclusive
  long long range(long long lo, long long hi) {
    return lo + static_cast<long long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  static std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

 private:
  std::uint64_t s_;
};

inline std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t index) {
  return SplitMix64::mix(seed + (index + 1) * 0x9E3779B97F4A7C15ull);
}

inline SplitMix64 substream(std::uint64_t seed, std::uint64_t index) {
  return SplitMix64(substream_seed(seed, index));
}

}  // namespace hagge
