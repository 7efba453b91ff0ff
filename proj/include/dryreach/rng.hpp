#pragma once

#include <cstdint>

namespace dryreach {

// splitmix64: tiny, portable, and good enough for sampling boxes and dwell
// grids. We avoid std distributions so identical seeds give identical streams
// on every platform.
struct Rng {
  std::uint64_t state;

  explicit Rng(std::uint64_t seed) : state(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // uniform in [0, 1)
  double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // uniform in [lo, hi]; degenerate intervals return lo
  double uniform(double lo, double hi) {
    if (hi <= lo) return lo;
    return lo + (hi - lo) * next_double();
  }

  // uniform integer in [0, n)
  std::uint64_t below(std::uint64_t n) { return n ? next_u64() % n : 0; }
};

// Deterministic seed derivation for independent substreams.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0) {
  Rng r(seed ^ (a * 0x9e3779b97f4a7c15ull) ^ (b * 0xd1b54a32d192ed03ull));
  r.next_u64();
  return r.next_u64();
}

}  // namespace dryreach
