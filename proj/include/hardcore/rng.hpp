#pragma once

#include <array>
#include <cstdint>

namespace hardcore {

// Deterministic stream RNG: xoshiro256++ seeded through splitmix64.
// Identical seed gives an identical draw sequence on every platform;
// replica streams are derived with split().
class RngStream {
 public:
  static constexpr const char* kAlgorithmId = "xoshiro256++/splitmix64";

  explicit RngStream(std::uint64_t seed);

  std::uint64_t seed() const { return seed_; }

  std::uint64_t next_u64();

  // Uniform in [0,1) with 53 random bits.
  double next_unit();

  // Uniform in {0, .., n-1}, n >= 1. Unbiased (rejection).
  std::uint32_t next_below(std::uint32_t n);

  bool next_bernoulli(double p) { return next_unit() < p; }

  // Independent stream for a replica index (seed xor mixed index).
  RngStream split(std::uint64_t stream_index) const;

 private:
  std::array<std::uint64_t, 4> s_{};
  std::uint64_t seed_ = 0;
};

}  // namespace hardcore
