#pragma once

#include <cmath>
#include <cstdint>

#include "nwsp/int128.hpp"

namespace nwsp {

// Deterministic 64-bit PRNG (splitmix64 core). Splittable into independent
// streams so that concurrent or nested computations stay reproducible from a
// single seed regardless of evaluation order.
class Rng {
 public:
  explicit Rng(u64 seed = 0x9e3779b97f4a7c15ull) : state_(seed) {}

  u64 next() {
    u64 z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Child stream derived from the current state and a caller-chosen tag.
  Rng split(u64 tag) {
    u64 a = next();
    u64 z = a ^ (tag * 0xff51afd7ed558ccdull + 0x2545f4914f6cdd1dull);
    z = (z ^ (z >> 33)) * 0xc4ceb9fe1a85ec53ull;
    return Rng(z ^ (z >> 29));
  }

  // Uniform in [0, n), n > 0.
  u64 below(u64 n) {
    // Rejection sampling keeps the distribution exact.
    u64 threshold = (0 - n) % n;
    for (;;) {
      u64 r = next();
      if (r >= threshold) return r % n;
    }
  }

  i64 range(i64 lo, i64 hi) {  // inclusive
    return lo + static_cast<i64>(below(static_cast<u64>(hi - lo + 1)));
  }

  // Uniform in (0, 1). Never returns 0 so it is safe inside log().
  double uniform01() {
    return (static_cast<double>(next() >> 11) + 1.0) * 0x1.0p-53;
  }

  bool chance(double p) { return uniform01() < p; }

  // Geometric on {0, 1, 2, ...} with Pr(r >= k) = (1-p)^k, via inversion.
  // Satisfies Pr(r < w) <= p*w and Pr(r > t) <= (1-p)^t.
  i64 geometric(double p) {
    if (p >= 1.0) return 0;
    if (p <= 0.0) return std::numeric_limits<i64>::max() / 2;
    double u = uniform01();
    double r = std::floor(std::log(u) / std::log1p(-p));
    if (r >= 9.0e18) return std::numeric_limits<i64>::max() / 2;
    return static_cast<i64>(r);
  }

 private:
  u64 state_;
};

}  // namespace nwsp
