#include "nwsp/solver.hpp"

#include <cassert>

#include "nwsp/errors.hpp"
#include "nwsp/negcycle.hpp"

namespace nwsp {

SolveOutcome sssp_or_neg_cycle(const Graph& g, i64 s, Rng& rng, const Config& cfg,
                               SolveStats* stats) {
  for (int round = 0; round < cfg.alternation_cap; ++round) {
    u64 mark = stats ? stats->steps : 0;
    Rng tree_rng = rng.split(0x1000 + static_cast<u64>(round));
    auto sp = sssp_no_negcycle(g, s, tree_rng, cfg, stats);
    if (stats) stats->tree_phase_steps += stats->steps - mark;
    if (sp && verify_sp_tree(g, s, *sp)) return SolveOutcome{std::move(*sp)};

    mark = stats ? stats->steps : 0;
    Rng cyc_rng = rng.split(0x2000 + static_cast<u64>(round));
    try {
      Cycle c = find_neg_cycle(g, cyc_rng, cfg, stats, /*restart_cap=*/2);
      if (stats) stats->cycle_phase_steps += stats->steps - mark;
      if (verify_negative_cycle(g, c)) return SolveOutcome{std::move(c)};
    } catch (const IterationCapExceeded&) {
      // No cycle surfaced within the per-round cap; alternate back.
      if (stats) stats->cycle_phase_steps += stats->steps - mark;
    }
    if (stats) ++stats->restarts;
  }
  throw ConfiguredCapExceeded("solver alternation cap exceeded");
}

SolveOutcome sssp_or_neg_cycle_with_dummy_source(const Graph& g, Rng& rng, const Config& cfg,
                                                 SolveStats* stats) {
  const i64 n = g.num_vertices();
  std::vector<Edge> es = g.edges();
  for (i64 v = 0; v < n; ++v) es.push_back({n, v, 0});
  Graph h = Graph::from_edges(n + 1, std::move(es));
  SolveOutcome out = sssp_or_neg_cycle(h, n, rng, cfg, stats);
  if (!out.is_tree()) {
    // Cycle edge ids are valid in g: the added source has no incoming edges,
    // so no cycle can use it.
    for (i64 e : out.cycle().edges) assert(e < g.num_edges());
  }
  return out;
}

ExtendedDistances single_source_distances(const Graph& g, i64 s, Rng& rng, const Config& cfg,
                                          SolveStats* stats) {
  const i64 n = g.num_vertices();
  ExtendedDistances out;
  out.kind.assign(static_cast<size_t>(n), DistKind::PosInf);
  out.value.assign(static_cast<size_t>(n), 0);

  // Vertices not reachable from s stay at +inf and are dropped.
  std::vector<bool> reach(static_cast<size_t>(n), false);
  std::vector<i64> stack = {s};
  reach[static_cast<size_t>(s)] = true;
  while (!stack.empty()) {
    i64 v = stack.back();
    stack.pop_back();
    for (i64 e : g.out_edges(v)) {
      i64 w = g.edge(e).dst;
      if (!reach[static_cast<size_t>(w)]) {
        reach[static_cast<size_t>(w)] = true;
        stack.push_back(w);
      }
    }
  }

  // A negative cycle lies inside a single strongly connected component, so
  // testing each reachable component in isolation finds them all.
  SccDecomposition comps = scc(g);
  std::vector<std::vector<i64>> comp_vertices(static_cast<size_t>(comps.comp_count));
  for (i64 v = 0; v < n; ++v)
    if (reach[static_cast<size_t>(v)])
      comp_vertices[static_cast<size_t>(comps.comp_id[static_cast<size_t>(v)])].push_back(v);

  std::vector<bool> neg_seed(static_cast<size_t>(n), false);
  for (i64 c = 0; c < comps.comp_count; ++c) {
    const auto& verts = comp_vertices[static_cast<size_t>(c)];
    if (verts.empty()) continue;
    std::vector<i64> local(static_cast<size_t>(n), -1);
    for (size_t i = 0; i < verts.size(); ++i) local[static_cast<size_t>(verts[i])] = static_cast<i64>(i);
    std::vector<Edge> es;
    bool has_internal = false;
    for (i64 v : verts)
      for (i64 e : g.out_edges(v)) {
        const Edge& ed = g.edge(e);
        if (local[static_cast<size_t>(ed.dst)] != -1 &&
            comps.comp_id[static_cast<size_t>(ed.dst)] == c) {
          es.push_back({local[static_cast<size_t>(v)], local[static_cast<size_t>(ed.dst)], ed.weight});
          has_internal = true;
        }
      }
    if (!has_internal) continue;
    if (Graph sub = Graph::from_edges(static_cast<i64>(verts.size()), std::move(es));
        sub.min_weight() < 0) {
      Rng sub_rng = rng.split(0x3000 + static_cast<u64>(c));
      SolveOutcome o = sssp_or_neg_cycle_with_dummy_source(sub, sub_rng, cfg, stats);
      if (!o.is_tree())
        for (i64 v : verts) neg_seed[static_cast<size_t>(v)] = true;
    }
  }

  // Everything reachable from a negative component reports -inf.
  std::vector<bool> neg(static_cast<size_t>(n), false);
  for (i64 v = 0; v < n; ++v)
    if (neg_seed[static_cast<size_t>(v)] && !neg[static_cast<size_t>(v)]) {
      neg[static_cast<size_t>(v)] = true;
      stack.push_back(v);
    }
  while (!stack.empty()) {
    i64 v = stack.back();
    stack.pop_back();
    for (i64 e : g.out_edges(v)) {
      i64 w = g.edge(e).dst;
      if (!neg[static_cast<size_t>(w)]) {
        neg[static_cast<size_t>(w)] = true;
        stack.push_back(w);
      }
    }
  }
  for (i64 v = 0; v < n; ++v)
    if (reach[static_cast<size_t>(v)] && neg[static_cast<size_t>(v)])
      out.kind[static_cast<size_t>(v)] = DistKind::NegInf;

  // The residual graph is free of negative cycles; solve it exactly.
  std::vector<i64> residual;
  for (i64 v = 0; v < n; ++v)
    if (reach[static_cast<size_t>(v)] && !neg[static_cast<size_t>(v)]) residual.push_back(v);
  if (!residual.empty()) {
    InducedGraph sub = induced_with_source(g, residual, s);
    Rng res_rng = rng.split(0x4000);
    SolveOutcome o = sssp_or_neg_cycle(sub.graph, sub.source, res_rng, cfg, stats);
    assert(o.is_tree());
    const SpResult& tree = o.tree();
    for (size_t i = 0; i < sub.orig_vertex.size(); ++i) {
      if (is_inf(tree.dist[i])) continue;  // cannot happen for s-reachable vertices
      out.kind[static_cast<size_t>(sub.orig_vertex[i])] = DistKind::Finite;
      out.value[static_cast<size_t>(sub.orig_vertex[i])] = tree.dist[i];
    }
  }
  return out;
}

}  // namespace nwsp
