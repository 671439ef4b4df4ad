#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <string_view>

namespace infermeter {

// One global 64-bit seed fans out to per-subsystem streams keyed by a stable
// label ("workload", "simulator", "client-jitter", ...). Streams derived from
// the same (seed, label) pair are identical across runs and platforms.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t derive_stream_seed(std::uint64_t global_seed, std::string_view label) {
  // FNV-1a over the label, then mixed with the global seed.
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : label) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return splitmix64(global_seed ^ h);
}

// Deterministic RNG: mt19937_64 (fully specified by the standard) plus
// hand-rolled variate transforms, so sequences do not depend on the
// standard library's distribution implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}
  Rng(std::uint64_t global_seed, std::string_view label)
      : gen_(derive_stream_seed(global_seed, label)) {}

  std::uint64_t next_u64() { return gen_(); }

  // Uniform in [0, 1) with 53-bit resolution.
  double uniform01() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  // Inverse-CDF exponential; log1p keeps precision near zero.
  double exponential(double rate) { return -std::log1p(-uniform01()) / rate; }

  // Box-Muller; consumes exactly two uniforms per call.
  double normal() {
    double u1 = uniform01();
    double u2 = uniform01();
    while (u1 <= 0.0) u1 = uniform01();  // guard log(0)
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925286766559 * u2);
  }

  bool bernoulli(double p) { return uniform01() < p; }

  // Unbiased integer in [0, bound) via rejection.
  std::uint64_t below(std::uint64_t bound) {
    if (bound == 0) return 0;
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t v = gen_();
    while (v >= limit) v = gen_();
    return v % bound;
  }

 private:
  std::mt19937_64 gen_;
};

}  // namespace infermeter
