#pragma once

#include <optional>
#include <vector>

#include "nwsp/config.hpp"
#include "nwsp/graph.hpp"
#include "nwsp/rng.hpp"

namespace nwsp {

struct LddResult {
  EdgeSet cut;
  i128 certified_diameter_bound = 0;
};

// One pass of the recursive decomposition: carves light balls and collapses
// around heavy vertices so that removing the returned edges leaves strongly
// connected components of diameter at most D. Returns nullopt (Fail) when a
// sampled radius overshoots, which happens with polynomially small
// probability.
std::optional<EdgeSet> strong_ldd_once(const Graph& g, i128 d, Rng& rng,
                                       const Config& cfg = {});

// Las Vegas wrapper: runs the decomposition at D/2, certifies every
// component's diameter (exactly for small components, by eccentricity
// 2-approximation otherwise) and restarts until the certificate holds. The
// result always satisfies the strong diameter bound.
LddResult strong_ldd(const Graph& g, i128 d, Rng& rng, const Config& cfg = {});

// max of the out- and in-eccentricity of the component's lowest-id vertex;
// the true diameter lies in [result, 2*result]. The component must be
// strongly connected inside the queried graph.
i128 diameter_2approx(const Graph& g, const std::vector<i64>& component);

// Exact diameter by repeated Dijkstra inside the component (test/certify
// helper; quadratic).
i128 exact_diameter(const Graph& g, const std::vector<i64>& component);

}  // namespace nwsp
