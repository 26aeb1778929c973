#pragma once

#include <optional>
#include <vector>

#include "nwsp/config.hpp"
#include "nwsp/graph.hpp"
#include "nwsp/restricted.hpp"
#include "nwsp/rng.hpp"

namespace nwsp {

struct SolveStats {
  u64 steps = 0;           // budget units consumed across all attempts
  u64 tree_phase_steps = 0;
  u64 cycle_phase_steps = 0;
  i64 scale_attempts = 0;  // individual scaling attempts, successful or not
  i64 restarts = 0;
  std::vector<i128> min_weight_trajectory;  // per completed scaling iteration
};

// The instance one scaling step hands to the restricted solver: weights
// divided by W (rounded up) plus one, with an added source. Exposed so tests
// can check it is a valid restricted instance.
struct ScaleInstance {
  RestrictedInstance instance;
  i128 w;  // divisor: smallest integer with min_weight > -3W
};
ScaleInstance build_scale_instance(const Graph& g);

// One scaling attempt: solves the rounded instance and turns its distances
// into a potential raising the minimum weight from above -3W to above -2W.
// Success probability is constant; Fail means the shared budget ran out.
std::optional<Potential> scale(const Graph& g, Rng& rng, Budget& budget,
                               const Config& cfg = {}, i64 kappa = -1,
                               SolveStats* stats = nullptr);

// Boosted tester: retries scale until a potential raises the minimum weight
// of g to at least -ceil(3/4 * W). One-sided: on graphs with a negative cycle
// it may return either a potential or Fail; without one it fails with
// probability at most delta.
std::optional<Potential> test_scale(const Graph& g, double delta, Rng& rng,
                                    const Config& cfg = {}, SolveStats* stats = nullptr);

// Full scaling loop: multiplies weights by 4n, repeatedly applies scale until
// the minimum weight reaches -3, then finishes with plain Dijkstra on the
// clamped graph. Exact on inputs without negative cycles; nullopt (evidence
// of a negative cycle) when the iteration caps are exceeded, since the loop
// provably cannot finish if any negative cycle exists.
std::optional<SpResult> sssp_no_negcycle(const Graph& g, i64 s, Rng& rng,
                                         const Config& cfg = {}, SolveStats* stats = nullptr);

enum class CycleVerdict { NegCycle, NoNegCycle };

// Budgeted detection via a dummy source: NoNegCycle answers are exact,
// NegCycle answers are correct with high probability.
CycleVerdict detect_neg_cycle(const Graph& g, Rng& rng, const Config& cfg = {},
                              SolveStats* stats = nullptr);

}  // namespace nwsp
