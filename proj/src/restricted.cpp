#include "nwsp/restricted.hpp"

#include <algorithm>
#include <cassert>

#include "nwsp/errors.hpp"

namespace nwsp {

bool RestrictedInstance::validate() const {
  const i64 n = graph.num_vertices();
  if (source < 0 || source >= n) return false;
  for (const Edge& e : graph.edges())
    if (e.weight < -1) return false;

  std::vector<bool> zero_edge(static_cast<size_t>(n), false);
  for (i64 e : graph.out_edges(source))
    if (graph.edge(e).weight == 0) zero_edge[static_cast<size_t>(graph.edge(e).dst)] = true;
  for (i64 v = 0; v < n; ++v)
    if (v != source && !zero_edge[static_cast<size_t>(v)]) return false;

  try {
    RationalMean mu = oracle::karp_mcm(graph);
    return !(mu < RationalMean{1, 1});
  } catch (const NoCycle&) {
    return true;  // acyclic: the mean bound holds vacuously
  }
}

Potential dag_edge_potential(const Graph& g) {
  const i64 n = g.num_vertices();
  SccDecomposition comps = scc(g);
  i128 min_w = std::min<i128>(0, g.min_weight());

  for (i64 e = 0; e < g.num_edges(); ++e) {
    const Edge& ed = g.edge(e);
    if (comps.comp_id[static_cast<size_t>(ed.src)] == comps.comp_id[static_cast<size_t>(ed.dst)] &&
        ed.weight < 0)
      throw InternalNegativeEdge("negative edge inside a strongly connected component");
  }

  // Rank gaps of at least one pay for the worst negative condensation edge.
  i128 w_mag = -min_w;
  Potential phi(static_cast<size_t>(n));
  for (i64 v = 0; v < n; ++v) {
    i64 rank = comps.topo_rank[static_cast<size_t>(comps.comp_id[static_cast<size_t>(v)])];
    phi[static_cast<size_t>(v)] = checked_mul(-w_mag, rank);
  }

#ifndef NDEBUG
  for (i64 e = 0; e < g.num_edges(); ++e) {
    const Edge& ed = g.edge(e);
    assert(ed.weight + phi[static_cast<size_t>(ed.src)] - phi[static_cast<size_t>(ed.dst)] >= 0);
  }
#endif
  return phi;
}

namespace {

// Minimum weight over the parallel s -> v edges, or the infinity sentinel.
// Scans v's in-edges, which is cheap even when s has huge out-degree.
i128 direct_edge_dist(const Graph& g, i64 s, i64 v) {
  i128 best = kInfDist;
  for (i64 e : g.in_edges(v)) {
    const Edge& ed = g.edge(e);
    if (ed.src == s && ed.weight < best) best = ed.weight;
  }
  return best;
}

std::optional<SpResult> restricted_rec(const Graph& g, i64 s, i64 kappa, Rng& rng,
                                       Budget& budget, const Config& cfg,
                                       RestrictedStats* stats, i64 depth) {
  const i64 n = g.num_vertices();
  if (stats) {
    ++stats->calls;
    stats->max_depth = std::max(stats->max_depth, depth);
  }
  if (budget.exhausted()) return std::nullopt;

  if (kappa <= 2) {
    if (stats) ++stats->base_cases;
    return lazy_dijkstra(g, s, budget);
  }

  // A negative self-loop is a negative cycle of length 1: no finite distances
  // exist, so fail outright instead of diverging down the recursion.
  for (const Edge& e : g.edges())
    if (e.src == e.dst && e.weight < 0) return std::nullopt;

  EdgeSet cut = decompose(g, kappa, rng, cfg, &budget, stats ? &stats->decompose : nullptr);
  if (budget.exhausted()) return std::nullopt;

  std::vector<Edge> kept;
  kept.reserve(static_cast<size_t>(g.num_edges()));
  for (i64 e = 0; e < g.num_edges(); ++e)
    if (!cut.contains(e)) kept.push_back(g.edge(e));
  SccDecomposition comps = scc(Graph::from_edges(n, std::move(kept)));

  std::vector<std::vector<i64>> comp_vertices(static_cast<size_t>(comps.comp_count));
  for (i64 v = 0; v < n; ++v)
    comp_vertices[static_cast<size_t>(comps.comp_id[static_cast<size_t>(v)])].push_back(v);

  Potential phi1(static_cast<size_t>(n), 0);
  std::vector<i64> new_id(static_cast<size_t>(n), -1);  // scratch, reset per component
  for (i64 c = 0; c < comps.comp_count; ++c) {
    const auto& verts = comp_vertices[static_cast<size_t>(c)];
    const i64 size = static_cast<i64>(verts.size());
    if (size == 1 && verts[0] == s) continue;  // trivial component of the source
    if (size == 1) {
      // A singleton component only ever receives the direct source edge; its
      // exact distance needs no recursion. (A pathological negative self-loop
      // would make the final pass diverge and fail the budget either way.)
      i128 d = direct_edge_dist(g, s, verts[0]);
      phi1[static_cast<size_t>(verts[0])] = is_inf(d) ? 0 : d;
      continue;
    }

    // Large components are guaranteed (whp) to have halved kappa; small ones
    // keep it. The additional |C| cap is deterministically sound -- a simple
    // path from the source can use at most |C| edges -- and bounds the
    // recursion on degenerate components where the size rule alone stalls.
    i64 kappa_child = (4 * size <= 3 * n) ? kappa : (kappa + 1) / 2;
    kappa_child = std::min(kappa_child, std::max<i64>(1, size));
    // When the branch is the whole instance again, halve kappa anyway so the
    // recursion provably terminates (the result is correct for any kappa;
    // only the progress analysis prefers the larger value).
    bool whole = size == n || (size == n - 1 && comps.comp_id[static_cast<size_t>(s)] != c);
    if (whole && kappa_child >= kappa) kappa_child = std::max<i64>(1, (kappa + 1) / 2);
    if (stats) {
      double ratio = static_cast<double>(size) * static_cast<double>(kappa_child) /
                     (static_cast<double>(n) * static_cast<double>(kappa));
      stats->worst_branch_ratio = std::max(stats->worst_branch_ratio, ratio);
    }

    // Induced subgraph on verts + {s}, built against the reusable scratch map.
    std::vector<i64> orig_vertex(verts);
    if (comps.comp_id[static_cast<size_t>(s)] != c) orig_vertex.push_back(s);
    for (size_t i = 0; i < orig_vertex.size(); ++i)
      new_id[static_cast<size_t>(orig_vertex[i])] = static_cast<i64>(i);
    std::vector<Edge> sub_edges;
    for (i64 ov : orig_vertex)
      for (i64 e : g.out_edges(ov)) {
        const Edge& ed = g.edge(e);
        i64 nd = new_id[static_cast<size_t>(ed.dst)];
        if (nd != -1)
          sub_edges.push_back({new_id[static_cast<size_t>(ed.src)], nd, ed.weight});
      }
    Graph sub = Graph::from_edges(static_cast<i64>(orig_vertex.size()), std::move(sub_edges));
    i64 sub_source = new_id[static_cast<size_t>(s)];
    for (i64 ov : orig_vertex) new_id[static_cast<size_t>(ov)] = -1;

    auto sub_res =
        restricted_rec(sub, sub_source, kappa_child, rng, budget, cfg, stats, depth + 1);
    if (!sub_res) return std::nullopt;
    for (size_t i = 0; i < orig_vertex.size(); ++i) {
      i64 ov = orig_vertex[i];
      if (ov == s) continue;
      i128 d = sub_res->dist[i];
      phi1[static_cast<size_t>(ov)] = is_inf(d) ? 0 : d;
    }
  }

  // phi1 makes every surviving intra-component edge nonnegative; the DAG
  // potential clears the condensation edges; the cut edges stay negative and
  // the lazy Dijkstra absorbs them.
  std::vector<Edge> kept2;
  kept2.reserve(static_cast<size_t>(g.num_edges()));
  for (i64 e = 0; e < g.num_edges(); ++e) {
    if (cut.contains(e)) continue;
    const Edge& ed = g.edge(e);
    kept2.push_back({ed.src, ed.dst,
                     checked_add(checked_add(ed.weight, phi1[static_cast<size_t>(ed.src)]),
                                 -phi1[static_cast<size_t>(ed.dst)])});
  }
  Potential psi = dag_edge_potential(Graph::from_edges(n, std::move(kept2)));

  Potential phi2(static_cast<size_t>(n));
  for (i64 v = 0; v < n; ++v)
    phi2[static_cast<size_t>(v)] =
        checked_add(phi1[static_cast<size_t>(v)], psi[static_cast<size_t>(v)]);

  auto final_res = lazy_dijkstra(reweight(g, phi2), s, budget);
  if (!final_res) return std::nullopt;

  SpResult out;
  out.parent_edge = std::move(final_res->parent_edge);
  out.dist.assign(static_cast<size_t>(n), kInfDist);
  for (i64 v = 0; v < n; ++v) {
    i128 d = final_res->dist[static_cast<size_t>(v)];
    if (!is_inf(d))
      out.dist[static_cast<size_t>(v)] = checked_add(
          checked_sub(d, phi2[static_cast<size_t>(s)]), phi2[static_cast<size_t>(v)]);
  }
  return out;
}

}  // namespace

std::optional<SpResult> restricted_sssp(const Graph& g, i64 s, i64 kappa, Rng& rng,
                                        Budget& budget, const Config& cfg,
                                        RestrictedStats* stats) {
  if (kappa < 0) throw InvalidInput("kappa must be nonnegative");
  return restricted_rec(g, s, std::max<i64>(kappa, 0), rng, budget, cfg, stats, 0);
}

GeneratedRestricted make_restricted(const RestrictedGenOptions& opt, Rng& rng, int retry_cap) {
  for (int attempt = 0; attempt < retry_cap; ++attempt) {
    const i64 n = opt.n;
    const i64 chain = std::min(opt.chain_len, std::max<i64>(0, n - 1));
    // Vertex levels certify the cycle-mean bound: every generated edge (u,v)
    // satisfies w(u,v) - 1 >= level(u) - level(v), so around any cycle the
    // level terms cancel and the mean is at least 1. A weight of -1 is only
    // possible where the level rises by exactly 2.
    std::vector<i128> level(static_cast<size_t>(n));
    const i64 max_level = std::max<i64>(2, 2 * chain);
    for (i64 v = 0; v < n; ++v)
      level[static_cast<size_t>(v)] = rng.range(0, max_level);
    for (i64 i = 0; i <= chain; ++i) level[static_cast<size_t>(i)] = 2 * i;

    std::vector<std::tuple<i64, i64, i64>> edges;
    // Planted chain of `chain` weight -1 edges witnessing kappa.
    for (i64 i = 0; i < chain; ++i) edges.emplace_back(i, i + 1, -1);

    for (i64 j = 0; j < opt.m; ++j) {
      i64 u = rng.range(0, n - 1);
      i64 v = rng.range(0, n - 1);
      i128 gap = level[static_cast<size_t>(v)] - level[static_cast<size_t>(u)];
      i64 w;
      if (gap == 2 && rng.chance(opt.extra_neg_prob)) {
        w = -1;
      } else {
        i64 lo = std::max<i64>(0, to_i64(1 - gap));
        w = lo + rng.range(0, opt.max_extra_weight);
      }
      edges.emplace_back(u, v, w);
    }

    // Source gets id n with weight-0 edges to everything.
    for (i64 v = 0; v < n; ++v) edges.emplace_back(n, v, 0);

    GeneratedRestricted out;
    out.instance.graph = build_graph(n + 1, edges);
    out.instance.source = n;
    out.kappa_bound = opt.extra_neg_prob == 0.0 ? chain : std::min<i64>(n, max_level);
    if (out.instance.validate()) return out;
  }
  throw GenerationExhausted("could not generate a valid restricted instance");
}

}  // namespace nwsp
