#pragma once

#include <string>

#include "nwsp/graph.hpp"
#include "nwsp/rng.hpp"

namespace nwsp {

// Deterministic instance families, keyed by name:
//   random     - uniform random edges, weights in [w_min, w_max]
//   restricted - weights >= -1, cycle mean >= 1, source with 0-edges to all
//                (the source is the last vertex)
//   negcycle   - random graph certified to contain a negative cycle
//   bellman-bad- layered path plus shortcuts, weights disguised by a random
//                potential: negative edges, provably no negative cycle, and
//                adversarial for queue-based relaxation algorithms
//   grid       - directed torus grid with nonnegative random weights
struct GenParams {
  std::string kind = "random";
  i64 n = 16;
  i64 m = 32;          // ignored by grid
  i64 w_min = -8;
  i64 w_max = 8;
};

Graph generate_graph(const GenParams& params, u64 seed);

}  // namespace nwsp
