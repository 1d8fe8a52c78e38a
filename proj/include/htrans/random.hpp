#pragma once

// Seeded pseudo-random streams.
//
// Every randomized construction draws from a Stream built from a 64-bit seed
// plus a list of stream indices (hyperedge index, trial index, ...). The
// engine is std::mt19937_64, whose output sequence is fixed by the standard;
// the seed itself is derived with SplitMix64 so that neighbouring indices give
// unrelated streams. Bounded integers use rejection sampling and doubles use
// the top 53 bits, so no implementation-defined std::*_distribution is
// involved and the streams are stable across standard libraries.

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <random>
#include <utility>
#include <vector>

namespace htrans {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Deterministically mixes a base seed with stream indices.
inline std::uint64_t derive_seed(std::uint64_t seed,
                                 std::initializer_list<std::uint64_t> path) {
  std::uint64_t h = splitmix64(seed);
  for (std::uint64_t p : path) h = splitmix64(h ^ splitmix64(p + 0x632be59bd9b4e019ULL));
  return h;
}

class Stream {
 public:
  explicit Stream(std::uint64_t seed) : engine_(splitmix64(seed)) {}
  Stream(std::uint64_t seed, std::initializer_list<std::uint64_t> path)
      : engine_(derive_seed(seed, path)) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform integer in [0, bound). bound must be positive.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit =
        std::numeric_limits<std::uint64_t>::max() -
        std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t r;
    do {
      r = engine_();
    } while (r >= limit);
    return r % bound;
  }

  /// Uniform double in [0, 1).
  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  bool bernoulli(double p) { return unit() < p; }

  /// Uniform permutation of 0..n-1 (Fisher-Yates).
  std::vector<std::size_t> permutation(std::size_t n) {
    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = i;
    for (std::size_t i = n; i > 1; --i) {
      std::size_t j = below(i);
      std::swap(perm[i - 1], perm[j]);
    }
    return perm;
  }

  /// Uniform subset of size count from 0..n-1, returned sorted.
  std::vector<std::size_t> subset(std::size_t n, std::size_t count) {
    std::vector<std::size_t> perm = permutation(n);
    perm.resize(count < n ? count : n);
    std::sort(perm.begin(), perm.end());
    return perm;
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace htrans
