#include "nwsp/scaling.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>

#include "nwsp/dijkstra.hpp"
#include "nwsp/errors.hpp"

namespace nwsp {

namespace {

// Kappa upper bounds to try per scaling attempt, cheapest first. The final
// rung n is unconditionally valid; earlier rungs only speed up instances
// whose actual kappa is small, at no cost to correctness (the solver is
// correct whenever it terminates, for any kappa).
std::vector<i64> kappa_ladder(i64 n) {
  std::vector<i64> rungs;
  i64 quick = static_cast<i64>(4 * std::ceil(log2_of(n)));
  if (quick < n) rungs.push_back(quick);
  rungs.push_back(n);
  return rungs;
}

}  // namespace

ScaleInstance build_scale_instance(const Graph& g) {
  const i64 n = g.num_vertices();
  i128 min_w = g.min_weight();
  // Smallest integer W with min_weight > -3W.
  i128 w = min_w >= 0 ? 1 : floor_div(-min_w, 3) + 1;

  std::vector<Edge> es;
  es.reserve(static_cast<size_t>(g.num_edges()) + static_cast<size_t>(n));
  for (const Edge& e : g.edges()) es.push_back({e.src, e.dst, ceil_div(e.weight, w) + 1});
  for (i64 v = 0; v < n; ++v) es.push_back({n, v, 0});

  ScaleInstance out;
  out.instance.graph = Graph::from_edges(n + 1, std::move(es));
  out.instance.source = n;
  out.w = w;
  return out;
}

std::optional<Potential> scale(const Graph& g, Rng& rng, Budget& budget, const Config& cfg,
                               i64 kappa, SolveStats* stats) {
  const i64 n = g.num_vertices();
  if (g.min_weight() >= 0) return Potential(static_cast<size_t>(n), 0);

  ScaleInstance si = build_scale_instance(g);
  if (kappa < 0) kappa = n;
  if (stats) ++stats->scale_attempts;

  auto sp = restricted_sssp(si.instance.graph, si.instance.source, std::max<i64>(kappa, 1), rng,
                            budget, cfg);
  if (stats) stats->steps += budget.consumed;
  if (!sp) return std::nullopt;

  Potential phi(static_cast<size_t>(n));
  for (i64 v = 0; v < n; ++v) {
    assert(!is_inf(sp->dist[static_cast<size_t>(v)]));
    phi[static_cast<size_t>(v)] = checked_mul(si.w, sp->dist[static_cast<size_t>(v)]);
  }

#ifndef NDEBUG
  // The potential must lift the minimum weight above -2W.
  for (const Edge& e : g.edges())
    assert(e.weight + phi[static_cast<size_t>(e.src)] - phi[static_cast<size_t>(e.dst)] >
           -2 * si.w);
#endif
  return phi;
}

std::optional<Potential> test_scale(const Graph& g, double delta, Rng& rng, const Config& cfg,
                                    SolveStats* stats) {
  const i64 n = g.num_vertices();
  const i64 m = g.num_edges();
  if (g.min_weight() >= 0) return Potential(static_cast<size_t>(n), 0);

  const i128 w_in = -g.min_weight();
  // Required post-state: minimum weight of the reweighted graph at least
  // -(3/4) * w_in, i.e. at least -floor(3*w_in/4).
  const i128 target = -floor_div(3 * w_in, 4);
  auto meets_target = [&](const Potential& phi) {
    for (const Edge& e : g.edges())
      if (e.weight + phi[static_cast<size_t>(e.src)] - phi[static_cast<size_t>(e.dst)] < target)
        return false;
    return true;
  };

  int reps = std::max(1, static_cast<int>(std::ceil(std::log2(1.0 / delta))));

  if (w_in <= 9) {
    // At tiny minimum weights the rounding guarantee of a single scaling step
    // is too weak for the 3/4 bound, but an exact shortest-path potential
    // (which makes every weight nonnegative) is affordable: one run of the
    // lazy Dijkstra from an added source.
    std::vector<Edge> es = g.edges();
    for (i64 v = 0; v < n; ++v) es.push_back({n, v, 0});
    Graph h = Graph::from_edges(n + 1, std::move(es));
    for (int rep = 0; rep < reps; ++rep) {
      Budget budget{default_budget(cfg, n, m), 0};
      auto sp = lazy_dijkstra(h, n, budget);
      if (stats) {
        ++stats->scale_attempts;
        stats->steps += budget.consumed;
      }
      if (sp) {
        Potential phi(sp->dist.begin(), sp->dist.begin() + n);
        assert(meets_target(phi));
        return phi;
      }
    }
    return std::nullopt;
  }

  for (int rep = 0; rep < reps; ++rep) {
    for (i64 kappa : kappa_ladder(n)) {
      Budget budget{default_budget(cfg, n, m), 0};
      Rng sub = rng.split(static_cast<u64>(rep) * 131 + static_cast<u64>(kappa));
      auto phi = scale(g, sub, budget, cfg, kappa, stats);
      if (phi && meets_target(*phi)) return phi;
    }
  }
  return std::nullopt;
}

std::optional<SpResult> sssp_no_negcycle(const Graph& g, i64 s, Rng& rng, const Config& cfg,
                                         SolveStats* stats) {
  const i64 n = g.num_vertices();
  const i64 m = g.num_edges();

  Graph cur = [&] {
    std::vector<Edge> es = g.edges();
    const i128 factor = 4 * static_cast<i128>(std::max<i64>(n, 1));
    for (Edge& e : es) e.weight = checked_mul(e.weight, factor);
    return Graph::from_edges(n, std::move(es));
  }();

  // Iteration cap: each successful step contracts the minimum weight by a
  // factor 2/3, so log_{3/2} of the starting magnitude plus slack suffices.
  const double w0 = static_cast<double>(cur.min_weight() < 0 ? -cur.min_weight() : i128(2));
  const i64 cap =
      static_cast<i64>(std::ceil(std::log(std::max(2.0, w0)) / std::log(1.5))) + 4;

  i128 prev_min = cur.min_weight();
  for (i64 iter = 0; iter < cap && cur.min_weight() < -3; ++iter) {
    std::optional<Potential> phi;
    for (int attempt = 0; attempt < cfg.scale_attempts_per_rung && !phi; ++attempt) {
      for (i64 kappa : kappa_ladder(n)) {
        Budget budget{default_budget(cfg, n, m), 0};
        Rng sub = rng.split(static_cast<u64>(iter) * 1009 + static_cast<u64>(attempt) * 31 +
                            static_cast<u64>(kappa));
        phi = scale(cur, sub, budget, cfg, kappa, stats);
        if (phi) break;
      }
    }
    if (!phi) return std::nullopt;  // evidence of a negative cycle
    cur = reweight(cur, *phi);
    assert(cur.min_weight() >= prev_min);  // monotone progress
    prev_min = cur.min_weight();
    if (stats) stats->min_weight_trajectory.push_back(cur.min_weight());
  }
  if (cur.min_weight() < -3) return std::nullopt;

  // Clamp the residual negative weights and solve exactly; the scaled margin
  // of 4n dominates the at most 3(n-1) clamping error, so the tree is a
  // shortest path tree of the original graph.
  SpResult star = dijkstra(clamp_nonnegative(cur), s);

  // Recover distances by accumulating original weights down the tree.
  SpResult out;
  out.parent_edge = star.parent_edge;
  out.dist.assign(static_cast<size_t>(n), kInfDist);
  std::vector<std::vector<i64>> children(static_cast<size_t>(n));
  for (i64 v = 0; v < n; ++v)
    if (out.parent_edge[static_cast<size_t>(v)])
      children[static_cast<size_t>(g.edge(*out.parent_edge[static_cast<size_t>(v)]).src)]
          .push_back(v);
  out.dist[static_cast<size_t>(s)] = 0;
  std::vector<i64> stack = {s};
  while (!stack.empty()) {
    i64 v = stack.back();
    stack.pop_back();
    for (i64 c : children[static_cast<size_t>(v)]) {
      out.dist[static_cast<size_t>(c)] =
          checked_add(out.dist[static_cast<size_t>(v)],
                      g.edge(*out.parent_edge[static_cast<size_t>(c)]).weight);
      stack.push_back(c);
    }
  }
  return out;
}

CycleVerdict detect_neg_cycle(const Graph& g, Rng& rng, const Config& cfg, SolveStats* stats) {
  if (g.min_weight() >= 0) return CycleVerdict::NoNegCycle;
  const i64 n = g.num_vertices();
  std::vector<Edge> es = g.edges();
  for (i64 v = 0; v < n; ++v) es.push_back({n, v, 0});
  Graph h = Graph::from_edges(n + 1, std::move(es));
  auto sp = sssp_no_negcycle(h, n, rng, cfg, stats);
  return sp ? CycleVerdict::NoNegCycle : CycleVerdict::NegCycle;
}

}  // namespace nwsp
