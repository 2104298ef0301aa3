#pragma once

#include <cstdint>
#include <random>

namespace lea {

// Seedable random stream with an explicit uint64 -> [0,1) mapping so runs
// are bit-reproducible across platforms (mt19937_64 output is fixed by
// the standard).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next_u64() { return eng_(); }

  double next_unit() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

  bool bernoulli(double prob) { return next_unit() < prob; }

  // Uniform in [0, bound), bound >= 1.
  std::uint64_t next_below(std::uint64_t bound);

 private:
  std::mt19937_64 eng_;
};

std::uint64_t splitmix64(std::uint64_t x);

// Independent stream derived from (seed, stream index).
Rng derive_stream(std::uint64_t seed, std::uint64_t stream);

}  // namespace lea
