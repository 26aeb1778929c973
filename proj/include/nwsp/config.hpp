#pragma once

#include <cmath>
#include <string>

#include "nwsp/int128.hpp"

namespace nwsp {

// Tunable constants of the randomized pipeline. Defaults reproduce the
// analyzed parameterization; the "bench" profile trades the per-call
// probabilistic guarantees for speed on large instances. Every output is
// certified before it leaves the solver, so profiles affect running time
// only, never correctness.
struct Config {
  // Work budget for one restricted solve: coeff * (m + n) * ceil(log2 n)^2.
  double budget_coeff = 64.0;

  // Ball-size estimation samples: ceil(sample_coeff * eps^-2 * ln n).
  double sample_coeff = 5.0;

  // Classification uses exact ball sizes whenever n is at most this and the
  // exact sweep (n truncated searches) is cheaper than the sampled one.
  i64 classify_exact_max_n = 4096;

  // Geometric carving parameter: Geom(min(1, carve_coeff * ln n / kappa)).
  double carve_coeff = 20.0;

  // Retry schedule for one scaling step: kappa upper bounds tried in order,
  // as multiples of ceil(log2 n) (0 means "n", the unconditional bound).
  // Escalation only ever adds attempts; the final rung is always valid.
  int scale_attempts_per_rung = 2;

  // Caps that convert livelock into diagnosable errors.
  int find_cycle_restart_cap = 50;
  int alternation_cap = 50;
  int threshold_certify_cap = 50;
  int generation_retry_cap = 100;

  static Config bench_profile() {
    Config c;
    c.sample_coeff = 0.5;
    c.carve_coeff = 4.0;
    return c;
  }
};

inline double log2_of(i64 n) { return std::log2(static_cast<double>(n < 2 ? 2 : n)); }
inline double ln_of(i64 n) { return std::log(static_cast<double>(n < 2 ? 2 : n)); }

inline i64 default_budget(const Config& cfg, i64 n, i64 m) {
  double lg = std::ceil(log2_of(n));
  double b = cfg.budget_coeff * static_cast<double>(m + n + 2) * lg * lg;
  if (b > 4.0e18) return i64(4'000'000'000'000'000'000LL);
  return static_cast<i64>(b) + 64;
}

}  // namespace nwsp
