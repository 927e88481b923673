#pragma once

#include <cstdint>

namespace nonarch {

// Deterministic, platform-independent sample generator (splitmix64).
// Every sampling site derives its own stream from (seed, sample index),
// so serial and parallel runs see identical draws.
class SampleRng {
 public:
  explicit SampleRng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, n); n must be nonzero.
  std::uint64_t bounded(std::uint64_t n) {
    // Multiply-shift; bias is negligible for the small n used here and,
    // unlike std::uniform_int_distribution, identical on every platform.
    unsigned __int128 m =
        static_cast<unsigned __int128>(next()) * static_cast<unsigned __int128>(n);
    return static_cast<std::uint64_t>(m >> 64);
  }

  bool coin() { return (next() & 1) != 0; }

  // Uniform integer in [lo, hi] inclusive.
  long long int_range(long long lo, long long hi) {
    return lo + static_cast<long long>(bounded(static_cast<std::uint64_t>(hi - lo + 1)));
  }

 private:
  std::uint64_t state_;
};

inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed ^ (0x9e3779b97f4a7c15ULL + (index << 1));
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Independent stream for sample `index` of a run with master seed `seed`.
inline SampleRng per_sample_rng(std::uint64_t seed, std::uint64_t index) {
  return SampleRng(mix_seed(seed, index));
}

}  // namespace nonarch
