#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace tempee {

// Deterministic RNG wrapper. std::mt19937_64 is bit-specified by the
// standard, but the std <random> distributions are not; the mappings here
// are explicit so that streams reproduce exactly on every platform.
class Rng {
 public:
  explicit Rng(uint64_t seed) : gen_(seed) {}

  uint64_t next_u64() { return gen_(); }

  // uniform in [0, 1) with 53-bit resolution
  double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // uniform integer in [lo, hi] via rejection-free 128-bit scaling
  int64_t uniform_int(int64_t lo, int64_t hi) {
    uint64_t span = static_cast<uint64_t>(hi - lo) + 1;
    return lo + static_cast<int64_t>(
                    (static_cast<unsigned __int128>(gen_()) * span) >> 64);
  }

  bool bernoulli(double p) { return uniform() < p; }

  // Box-Muller from two explicit uniforms
  double normal(double mean = 0.0, double stddev = 1.0) {
    double u1 = uniform();
    double u2 = uniform();
    if (u1 < 1e-300) u1 = 1e-300;
    double r = std::sqrt(-2.0 * std::log(u1));
    return mean + stddev * r * std::cos(6.283185307179586 * u2);
  }

 private:
  std::mt19937_64 gen_;
};

// SplitMix64 step; used to derive independent stream seeds from
// (seed, epoch, id) style tuples.
inline uint64_t mix_seed(uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

inline uint64_t mix_seed(uint64_t a, uint64_t b) { return mix_seed(mix_seed(a) ^ b); }
inline uint64_t mix_seed(uint64_t a, uint64_t b, uint64_t c) {
  return mix_seed(mix_seed(a, b) ^ c);
}

}  // namespace tempee
