#pragma once

#include <cstdint>
#include <span>

namespace catsim {

// SplitMix64 (Steele/Lea/Vigna): counter generator with gamma
// 0x9E3779B97F4A7C15 and the two-round mixing finalizer. Used instead of the
// platform engines so that streams are bit-identical across platforms.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  // Uniform on [0,1) with 53 random bits.
  double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

 private:
  std::uint64_t state_;
};

// Seed for chunk i of a batch: the SplitMix64 finalizer applied to
// seed + (i+1) * gamma. Chunked streams make parallel sampling independent
// of the worker count.
inline std::uint64_t chunk_seed(std::uint64_t seed, std::uint64_t chunk) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ull * (chunk + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

// Standard normal variates via Box-Muller, emitted in fixed (cos, sin) pair
// order; an odd-length span discards the trailing sine term. No state is
// carried between calls.
void fill_gaussian(SplitMix64& g, std::span<double> out);

// Unit-rate exponential variate, -log(1 - u).
double next_exponential(SplitMix64& g);

}  // namespace catsim
