#pragma once

#include "nwsp/config.hpp"
#include "nwsp/graph.hpp"
#include "nwsp/oracle.hpp"
#include "nwsp/rng.hpp"
#include "nwsp/scaling.hpp"

namespace nwsp {

// Minimum mean cycle, exact: affinely rescales weights so that distinct
// cycle means separate by at least 1, locates the threshold of the rescaled
// graph, and extracts a negative cycle just below it. Throws NoCycle on
// acyclic graphs. The returned mean is the cycle's (weight, length) pair in
// the original graph.
std::pair<Cycle, RationalMean> min_cycle_mean(const Graph& g, Rng& rng,
                                              const Config& cfg = {},
                                              SolveStats* stats = nullptr);

}  // namespace nwsp
