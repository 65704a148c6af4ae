#pragma once

// Portable random streams.  xoshiro256** (Blackman & Vigna) seeded through
// splitmix64, so a (seed, stream index) pair names the same sequence on every
// platform and in every language that implements these two published
// generators.  Test vectors live in tests/data/rng_vectors.txt.

#include <cstddef>
#include <cstdint>
#include <limits>

namespace latdyn {

class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next();

 private:
  std::uint64_t state_;
};

class Xoshiro256 {
 public:
  using result_type = std::uint64_t;

  // State words are four consecutive splitmix64 outputs from `seed`.
  explicit Xoshiro256(std::uint64_t seed);

  // Independent stream `index` derived from `seed`: the splitmix64 seed is
  // seed XOR (index · 0x9E3779B97F4A7C15) passed once more through the
  // splitmix64 finalizer.
  static Xoshiro256 stream(std::uint64_t seed, std::uint64_t index);

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

  result_type operator()();

 private:
  std::uint64_t s_[4];
};

// Uniform double in [0, 1) with 53 random bits: (x >> 11) · 2^-53.
double uniform01(Xoshiro256& rng);

// Unbiased integer in [0, n) (Lemire's multiply-and-reject).
std::uint64_t uniform_index(Xoshiro256& rng, std::uint64_t n);

// Standard normal by Box–Muller on two uniform01 draws (cosine branch only).
double standard_normal(Xoshiro256& rng);

}  // namespace latdyn
