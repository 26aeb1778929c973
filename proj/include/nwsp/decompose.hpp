#pragma once

#include <vector>

#include "nwsp/config.hpp"
#include "nwsp/dijkstra.hpp"
#include "nwsp/graph.hpp"
#include "nwsp/rng.hpp"

namespace nwsp {

enum class BallDir { Out, In };

// Estimates |B_out(v, r)| for every vertex with additive error eps*n, by
// computing in-balls of ceil(sample_coeff * eps^-2 * ln n) random centers.
// Requires nonnegative weights.
std::vector<double> estimate_ball_sizes(const Graph& g, i128 r, double eps, Rng& rng,
                                        double sample_coeff = 5.0);

// Vertices whose (out- or in-) ball of radius r in the clamped graph holds at
// most cutoff*n vertices, up to the estimation error eps*n: members certify
// a ball of at most (cutoff+eps)n, non-members one of at least (cutoff-eps)n.
// Uses exact ball sizes when that is cheaper than sampling; sampling can be
// forced for statistical tests.
std::vector<bool> classify_light(const Graph& g, BallDir dir, i128 r, double cutoff,
                                 double eps, Rng& rng, const Config& cfg = {},
                                 bool force_sampling = false);

struct DecomposeStats {
  i64 balls_carved = 0;
  i64 max_radius_sampled = 0;
};

// Carves random-radius balls around light vertices of the clamped graph and
// returns the cut boundary edges S. Guarantees (with high probability over
// the randomness): every SCC of G minus S either has at most 3/4 of the
// vertices or only admits short chains of negative edges (kappa halves).
EdgeSet decompose(const Graph& g, i64 kappa, Rng& rng, const Config& cfg = {},
                  Budget* budget = nullptr, DecomposeStats* stats = nullptr);

}  // namespace nwsp
