#pragma once

#include <optional>
#include <vector>

#include "nwsp/graph.hpp"
#include "nwsp/int128.hpp"

namespace nwsp {

// Deterministic work budget shared across nested computations. One unit is
// charged per queue deletion and per edge relaxation, a platform-independent
// stand-in for a wall-clock cutoff. Exhaustion is a signal, not an error:
// on graphs with negative cycles the lazy search cannot terminate, and the
// budget is what turns that into a Fail the caller can retry.
struct Budget {
  i64 remaining = 0;
  u64 consumed = 0;

  bool take(i64 units = 1) {
    consumed += static_cast<u64>(units);
    if (remaining < units) {
      remaining = 0;
      return false;
    }
    remaining -= units;
    return true;
  }
  bool exhausted() const { return remaining <= 0; }
};

struct BallResult {
  std::vector<i64> members;             // vertices with dist <= radius
  std::vector<i64> boundary;            // boundary edge ids
  std::vector<std::pair<i64, i128>> dist_within;  // (vertex, dist) pairs
};

// Plain Dijkstra; requires nonnegative weights.
SpResult dijkstra(const Graph& g, i64 s);

// Truncated Dijkstra: members are exactly the vertices within distance r of
// v, boundary the edges from members to non-members. In-balls are the same
// computation on the reversed graph (edge ids are shared).
BallResult ball_out(const Graph& g, i64 v, i128 r);
BallResult ball_in(const Graph& g, const Graph& g_rev, i64 v, i128 r);

// Per-iteration snapshots of the alternating relaxation, for invariant
// checking; `a_counts` tracks how often each vertex was settled.
struct LazyTrace {
  std::vector<std::vector<i128>> after_dijkstra_phase;
  std::vector<std::vector<i128>> after_bellman_ford_phase;
  std::vector<i64> a_counts;
};

// Dijkstra extended to negative edges: alternates a Dijkstra pass over the
// nonnegative edges with a Bellman-Ford pass over the negative edges until no
// distance improves. Exact on any graph without a reachable negative cycle;
// on a graph with one it never finishes and instead runs out of budget.
std::optional<SpResult> lazy_dijkstra(const Graph& g, i64 s, Budget& budget,
                                      LazyTrace* trace = nullptr);

// Instrumented variant used by tests; budget is sized generously from the
// graph so the caller only supplies the instance.
std::optional<SpResult> phase_trace(const Graph& g, i64 s, LazyTrace& trace);

}  // namespace nwsp
