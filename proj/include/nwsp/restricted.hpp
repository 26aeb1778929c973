#pragma once

#include <optional>
#include <vector>

#include "nwsp/config.hpp"
#include "nwsp/decompose.hpp"
#include "nwsp/dijkstra.hpp"
#include "nwsp/graph.hpp"
#include "nwsp/oracle.hpp"
#include "nwsp/rng.hpp"

namespace nwsp {

// A graph whose weights are integers >= -1, whose minimum cycle mean is at
// least 1, and whose source has a weight-0 edge to every other vertex. These
// three properties together are what the recursive solver relies on.
struct RestrictedInstance {
  Graph graph;
  i64 source = 0;

  // Full validation, including the cycle-mean bound via the reference
  // minimum-cycle-mean computation. Cost O(nm); intended for tests.
  bool validate() const;
};

// Potential that clears negative weights off the condensation edges: the
// input must have nonnegative weights inside every SCC, and the reweighted
// graph is nonnegative everywhere. Throws InternalNegativeEdge otherwise.
Potential dag_edge_potential(const Graph& g);

struct RestrictedStats {
  i64 calls = 0;
  i64 max_depth = 0;
  i64 base_cases = 0;
  DecomposeStats decompose;
  // Records max |C_i| * kappa_i / (n * kappa) over all recursive calls.
  double worst_branch_ratio = 0.0;
};

// Shortest path tree in a restricted graph, by recursive decomposition:
// cut a sparse edge set S, solve the strongly connected parts of G minus S
// recursively, lift the results to a potential that leaves only the edges of
// S negative, and finish with the lazy Dijkstra. Correct whenever it
// terminates regardless of the randomness; returns nullopt ("Fail") when the
// shared budget runs out, and the caller retries with fresh randomness.
std::optional<SpResult> restricted_sssp(const Graph& g, i64 s, i64 kappa, Rng& rng,
                                        Budget& budget, const Config& cfg = {},
                                        RestrictedStats* stats = nullptr);

// Test-instance generator. Produces a restricted instance around a planted
// chain of `chain_len` weight -1 edges; with extra_neg_prob == 0 the chain is
// the only source of negative edges and kappa equals chain_len exactly.
struct RestrictedGenOptions {
  i64 n = 10;           // vertices excluding the source
  i64 m = 20;           // random edges in addition to source edges and chain
  i64 chain_len = 3;    // planted -1 chain length (clamped to n-1)
  double extra_neg_prob = 0.25;
  i64 max_extra_weight = 4;
};

struct GeneratedRestricted {
  RestrictedInstance instance;
  i64 kappa_bound = 0;  // upper bound on kappa; exact when extra_neg_prob == 0
};

GeneratedRestricted make_restricted(const RestrictedGenOptions& opt, Rng& rng,
                                    int retry_cap = 100);

}  // namespace nwsp
