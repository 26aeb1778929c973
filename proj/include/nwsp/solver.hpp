#pragma once

#include <variant>
#include <vector>

#include "nwsp/config.hpp"
#include "nwsp/graph.hpp"
#include "nwsp/oracle.hpp"
#include "nwsp/rng.hpp"
#include "nwsp/scaling.hpp"

namespace nwsp {

// Certified answer: every tree passes verify_sp_tree, every cycle passes
// verify_negative_cycle, before it leaves the solver.
struct SolveOutcome {
  std::variant<SpResult, Cycle> result;

  bool is_tree() const { return std::holds_alternative<SpResult>(result); }
  const SpResult& tree() const { return std::get<SpResult>(result); }
  const Cycle& cycle() const { return std::get<Cycle>(result); }
};

// Either a shortest path tree from s or a negative cycle of g, by
// alternating the budgeted scaling solver with the budgeted cycle finder
// until one of them produces a verifiable answer. Las Vegas: the output is
// always correct; only the running time is random.
SolveOutcome sssp_or_neg_cycle(const Graph& g, i64 s, Rng& rng, const Config& cfg = {},
                               SolveStats* stats = nullptr);

// Same, after connecting a fresh source to every vertex; a tree outcome then
// certifies that g has no negative cycle at all. Cycle edge ids refer to g.
SolveOutcome sssp_or_neg_cycle_with_dummy_source(const Graph& g, Rng& rng,
                                                 const Config& cfg = {},
                                                 SolveStats* stats = nullptr);

// Distances from s with -inf for vertices reachable through a negative
// cycle and +inf for unreachable ones. Always correct.
ExtendedDistances single_source_distances(const Graph& g, i64 s, Rng& rng,
                                          const Config& cfg = {}, SolveStats* stats = nullptr);

}  // namespace nwsp
