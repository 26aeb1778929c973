#include "nwsp/gen.hpp"

#include <algorithm>
#include <cmath>

#include "nwsp/errors.hpp"
#include "nwsp/oracle.hpp"
#include "nwsp/restricted.hpp"

namespace nwsp {

namespace {

Graph gen_random(i64 n, i64 m, i64 w_min, i64 w_max, Rng& rng) {
  std::vector<std::tuple<i64, i64, i64>> edges;
  edges.reserve(static_cast<size_t>(m));
  for (i64 e = 0; e < m; ++e)
    edges.emplace_back(rng.range(0, n - 1), rng.range(0, n - 1), rng.range(w_min, w_max));
  return build_graph(n, edges);
}

Graph gen_negcycle(i64 n, i64 m, i64 w_min, i64 w_max, Rng& rng) {
  // Rejection sampling with a planted fallback: bias a random graph negative
  // until the reference check confirms a negative cycle.
  i64 lo = std::min<i64>(w_min, -1);
  for (int attempt = 0; attempt < 200; ++attempt) {
    Graph g = gen_random(n, m, lo, w_max, rng);
    if (oracle::has_negative_cycle(g)) return g;
    lo = lo - 1 - (-lo) / 2;  // push weights further negative and retry
  }
  // Plant a short negative cycle explicitly.
  std::vector<std::tuple<i64, i64, i64>> edges;
  for (i64 e = 0; e + 2 < m; ++e)
    edges.emplace_back(rng.range(0, n - 1), rng.range(0, n - 1), rng.range(w_min, w_max));
  i64 a = rng.range(0, n - 1);
  i64 b = (a + 1) % n;
  edges.emplace_back(a, b, std::min<i64>(w_min, -1));
  edges.emplace_back(b, a, 0);
  Graph g = build_graph(n, edges);
  if (!oracle::has_negative_cycle(g)) throw GenerationExhausted("negcycle generation failed");
  return g;
}

// Path spine with layered forward shortcuts. Nonnegative base costs are
// disguised by a random vertex potential, which yields plenty of negative
// edges but provably no negative cycle, and distances that improve many
// times under naive relaxation orders.
Graph gen_bellman_bad(i64 n, i64 m, i64 w_max, Rng& rng) {
  const i64 w_range = std::max<i64>(1, w_max);
  std::vector<i64> phi(static_cast<size_t>(n));
  for (i64 v = 0; v < n; ++v) phi[static_cast<size_t>(v)] = rng.range(0, w_range);

  std::vector<std::tuple<i64, i64, i64>> edges;
  edges.reserve(static_cast<size_t>(m));
  auto add = [&](i64 u, i64 v, i64 base) {
    edges.emplace_back(u, v, base + phi[static_cast<size_t>(u)] - phi[static_cast<size_t>(v)]);
  };
  for (i64 v = 0; v + 1 < n && static_cast<i64>(edges.size()) < m; ++v) add(v, v + 1, 0);
  while (static_cast<i64>(edges.size()) < m) {
    i64 u = rng.range(0, n - 1);
    i64 span = 1 + static_cast<i64>(rng.below(static_cast<u64>(std::max<i64>(2, n / 8))));
    i64 v = std::min(n - 1, u + span);
    add(u, v, rng.range(0, w_range));
  }
  return build_graph(n, edges);
}

Graph gen_grid(i64 n, i64 w_max, Rng& rng) {
  const i64 side = std::max<i64>(2, static_cast<i64>(std::llround(std::sqrt(static_cast<double>(n)))));
  const i64 total = side * side;
  std::vector<std::tuple<i64, i64, i64>> edges;
  auto id = [&](i64 r, i64 c) { return r * side + c; };
  for (i64 r = 0; r < side; ++r)
    for (i64 c = 0; c < side; ++c) {
      edges.emplace_back(id(r, c), id(r, (c + 1) % side), rng.range(0, std::max<i64>(1, w_max)));
      edges.emplace_back(id(r, c), id((r + 1) % side, c), rng.range(0, std::max<i64>(1, w_max)));
    }
  return build_graph(total, edges);
}

}  // namespace

Graph generate_graph(const GenParams& params, u64 seed) {
  Rng rng(seed);
  if (params.n < 1) throw InvalidInput("generator requires n >= 1");
  if (params.kind == "random") {
    return gen_random(params.n, params.m, params.w_min, params.w_max, rng);
  }
  if (params.kind == "restricted") {
    RestrictedGenOptions opt;
    opt.n = std::max<i64>(1, params.n - 1);  // the source takes one slot
    opt.m = params.m;
    opt.chain_len = std::max<i64>(1, opt.n / 4);
    opt.max_extra_weight = std::max<i64>(1, params.w_max);
    return make_restricted(opt, rng).instance.graph;
  }
  if (params.kind == "negcycle") {
    return gen_negcycle(params.n, params.m, params.w_min, params.w_max, rng);
  }
  if (params.kind == "bellman-bad") {
    return gen_bellman_bad(params.n, params.m, params.w_max, rng);
  }
  if (params.kind == "grid") {
    return gen_grid(params.n, params.w_max, rng);
  }
  throw InvalidInput("unknown generator kind: " + params.kind);
}

}  // namespace nwsp
