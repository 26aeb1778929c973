#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <functional>
#include <optional>
#include <vector>

#include "nwsp/config.hpp"
#include "nwsp/graph.hpp"
#include "nwsp/rng.hpp"
#include "nwsp/scaling.hpp"

namespace nwsp {

using BigInt = boost::multiprecision::cpp_int;

// Exact rational value of the drift potential steering the fast threshold
// search: max{(W - M*)^19 * 2*Delta, (W - M*)^21 / (2*Delta)}. Values reach
// the 21st power of the weight range, hence arbitrary precision. Zero exactly
// when W equals the threshold.
struct DriftValue {
  BigInt num;
  BigInt den;  // always positive

  bool zero() const { return num == 0; }
  bool operator==(const DriftValue& o) const { return num * o.den == o.num * den; }
  bool operator<=(const DriftValue& o) const { return num * o.den <= o.num * den; }
};

DriftValue drift_value(i128 w_t, i128 delta_t, i128 m_star);

// Ratio num/den of two drift values as a double (for aggregate statistics).
double drift_ratio(const DriftValue& next, const DriftValue& cur);

struct DriftRecord {
  i64 t = 0;
  i128 w = 0;
  i128 delta = 0;
  bool success = false;  // whether this iteration obtained a potential
  DriftValue drift;      // filled only when the trace knows the threshold
};

// Test instrumentation: receives one record per iteration of the fast
// threshold loop. m_star must be supplied by an oracle.
struct DriftTrace {
  std::optional<i128> m_star;
  std::vector<DriftRecord> records;
};

// Smallest M >= 0 such that shifting all weights by M removes every negative
// cycle. Simple recursive halving; high-probability correct.
i128 slow_threshold(const Graph& g, Rng& rng, const Config& cfg = {},
                    SolveStats* stats = nullptr);

// Same value via the drift-guided doubling/halving search, which avoids the
// per-step boosting of the slow variant. High-probability correct.
i128 fast_threshold(const Graph& g, Rng& rng, const Config& cfg = {},
                    SolveStats* stats = nullptr, DriftTrace* trace = nullptr);

// Always-correct threshold: runs fast_threshold, then certifies the result
// by solving shifted instances and restarts on a failed certificate.
i128 threshold_las_vegas(const Graph& g, Rng& rng, const Config& cfg = {},
                         SolveStats* stats = nullptr);

using ThresholdFn = std::function<i128(const Graph&, Rng&, const Config&, SolveStats*)>;

// Extracts a concrete negative cycle from a graph that contains one: scale
// weights so that distinct cycle classes separate, shift by the threshold,
// reweight by exact distances and look for a cycle among the light edges.
// The returned cycle always verifies negative; if the precondition is
// violated the restart cap surfaces as IterationCapExceeded.
Cycle find_neg_cycle(const Graph& g, Rng& rng, const Config& cfg = {},
                     SolveStats* stats = nullptr, int restart_cap = -1,
                     const ThresholdFn& threshold = {});

namespace detail {
// Edge ids of some simple cycle (depth-first back edge), empty if acyclic.
std::vector<i64> find_any_cycle(const Graph& g);
}  // namespace detail

}  // namespace nwsp
