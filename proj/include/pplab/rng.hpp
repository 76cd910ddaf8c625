#pragma once

#include <cstdint>
#include <random>

namespace pplab::rng {

// splitmix64 step; used to spread user seeds and derive worker substreams.
inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Seedable 64-bit source. Worker i of a batch derives its stream from
// (seed, i), so parallel runs are reproducible for a fixed worker count.
class RandomSource {
 public:
  explicit RandomSource(std::uint64_t seed) : gen_(spread(seed)) {}

  static RandomSource worker_stream(std::uint64_t seed, std::uint64_t worker) {
    std::uint64_t s = seed;
    std::uint64_t a = splitmix64(s);
    s = a ^ (0x5851f42d4c957f2dULL * (worker + 1));
    return RandomSource(splitmix64(s));
  }

  std::uint64_t next_u64() { return gen_(); }

  // uniform in [0, 1) with 53 random bits
  double uniform01() { return (next_u64() >> 11) * 0x1.0p-53; }

  // uniform integer in [0, bound); bound >= 1
  std::uint64_t uniform_below(std::uint64_t bound) {
    std::uint64_t threshold = (-bound) % bound;
    for (;;) {
      std::uint64_t r = next_u64();
      if (r >= threshold) return r % bound;
    }
  }

 private:
  static std::uint64_t spread(std::uint64_t seed) {
    std::uint64_t s = seed;
    return splitmix64(s);
  }
  std::mt19937_64 gen_;
};

}  // namespace pplab::rng
