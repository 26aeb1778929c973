#include "nwsp/oracle.hpp"

#include <algorithm>
#include <cassert>

#include "nwsp/errors.hpp"

namespace nwsp::oracle {

namespace {

std::vector<bool> reachable_from(const Graph& g, const std::vector<i64>& roots) {
  std::vector<bool> seen(static_cast<size_t>(g.num_vertices()), false);
  std::vector<i64> stack;
  for (i64 r : roots)
    if (!seen[static_cast<size_t>(r)]) {
      seen[static_cast<size_t>(r)] = true;
      stack.push_back(r);
    }
  while (!stack.empty()) {
    i64 v = stack.back();
    stack.pop_back();
    for (i64 e : g.out_edges(v)) {
      i64 w = g.edge(e).dst;
      if (!seen[static_cast<size_t>(w)]) {
        seen[static_cast<size_t>(w)] = true;
        stack.push_back(w);
      }
    }
  }
  return seen;
}

}  // namespace

BellmanFordResult bellman_ford(const Graph& g, i64 s) {
  const i64 n = g.num_vertices();
  const i64 m = g.num_edges();
  std::vector<i128> d(static_cast<size_t>(n), kInfDist);
  std::vector<i64> parent(static_cast<size_t>(n), -1);
  d[static_cast<size_t>(s)] = 0;

  for (i64 round = 0; round + 1 < n; ++round) {
    bool changed = false;
    for (i64 e = 0; e < m; ++e) {
      const Edge& ed = g.edge(e);
      if (is_inf(d[static_cast<size_t>(ed.src)])) continue;
      i128 cand = d[static_cast<size_t>(ed.src)] + ed.weight;
      if (cand < d[static_cast<size_t>(ed.dst)]) {
        d[static_cast<size_t>(ed.dst)] = cand;
        parent[static_cast<size_t>(ed.dst)] = e;
        changed = true;
      }
    }
    if (!changed) break;
  }

  // An n-th improving round marks vertices involved with negative cycles.
  std::vector<i64> improved;
  for (i64 e = 0; e < m; ++e) {
    const Edge& ed = g.edge(e);
    if (is_inf(d[static_cast<size_t>(ed.src)])) continue;
    if (d[static_cast<size_t>(ed.src)] + ed.weight < d[static_cast<size_t>(ed.dst)]) {
      improved.push_back(ed.dst);
      parent[static_cast<size_t>(ed.dst)] = e;
    }
  }

  BellmanFordResult out;
  out.dist.kind.assign(static_cast<size_t>(n), DistKind::Finite);
  out.dist.value = d;
  for (i64 v = 0; v < n; ++v)
    if (is_inf(d[static_cast<size_t>(v)])) out.dist.kind[static_cast<size_t>(v)] = DistKind::PosInf;

  if (!improved.empty()) {
    std::vector<bool> neg = reachable_from(g, improved);
    for (i64 v = 0; v < n; ++v)
      if (neg[static_cast<size_t>(v)] && out.dist.kind[static_cast<size_t>(v)] == DistKind::Finite)
        out.dist.kind[static_cast<size_t>(v)] = DistKind::NegInf;

    // Extract a concrete negative cycle by parent-walking from an improved
    // vertex: after n relaxation rounds the walk must enter a cycle, and that
    // cycle is negative.
    i64 x = improved.front();
    for (i64 i = 0; i < n; ++i) x = g.edge(parent[static_cast<size_t>(x)]).src;
    std::vector<i64> cyc_edges;
    i64 cur = x;
    do {
      i64 pe = parent[static_cast<size_t>(cur)];
      cyc_edges.push_back(pe);
      cur = g.edge(pe).src;
    } while (cur != x);
    std::reverse(cyc_edges.begin(), cyc_edges.end());
    out.negative_cycle = make_cycle(g, cyc_edges);
    assert(out.negative_cycle->weight < 0);
  }
  return out;
}

bool has_negative_cycle(const Graph& g) {
  // Super-source sweep so that every cycle is reachable.
  std::vector<Edge> es = g.edges();
  const i64 n = g.num_vertices();
  for (i64 v = 0; v < n; ++v) es.push_back({n, v, 0});
  Graph h = Graph::from_edges(n + 1, std::move(es));
  return bellman_ford(h, n).negative_cycle.has_value();
}

RationalMean karp_mcm(const Graph& g) {
  const i64 n = g.num_vertices();
  SccDecomposition comps = scc(g);

  std::vector<std::vector<i64>> comp_vertices(static_cast<size_t>(comps.comp_count));
  for (i64 v = 0; v < n; ++v)
    comp_vertices[static_cast<size_t>(comps.comp_id[static_cast<size_t>(v)])].push_back(v);

  std::optional<RationalMean> best;
  for (i64 c = 0; c < comps.comp_count; ++c) {
    const auto& verts = comp_vertices[static_cast<size_t>(c)];
    // Collect the component's internal edges.
    std::vector<i64> internal;
    for (i64 v : verts)
      for (i64 e : g.out_edges(v))
        if (comps.comp_id[static_cast<size_t>(g.edge(e).dst)] == c) internal.push_back(e);
    if (internal.empty()) continue;  // no cycle through this component

    const i64 nc = static_cast<i64>(verts.size());
    std::vector<i64> local(static_cast<size_t>(g.num_vertices()), -1);
    for (i64 i = 0; i < nc; ++i) local[static_cast<size_t>(verts[static_cast<size_t>(i)])] = i;

    // d[k][v]: min weight of a k-edge walk from the root within the SCC.
    std::vector<std::vector<i128>> d(static_cast<size_t>(nc) + 1,
                                     std::vector<i128>(static_cast<size_t>(nc), kInfDist));
    d[0][0] = 0;  // root = verts[0]
    for (i64 k = 1; k <= nc; ++k) {
      for (i64 e : internal) {
        const Edge& ed = g.edge(e);
        i64 lu = local[static_cast<size_t>(ed.src)];
        i64 lv = local[static_cast<size_t>(ed.dst)];
        if (is_inf(d[static_cast<size_t>(k) - 1][static_cast<size_t>(lu)])) continue;
        i128 cand = d[static_cast<size_t>(k) - 1][static_cast<size_t>(lu)] + ed.weight;
        if (cand < d[static_cast<size_t>(k)][static_cast<size_t>(lv)])
          d[static_cast<size_t>(k)][static_cast<size_t>(lv)] = cand;
      }
    }

    // mu* = min_v max_k (d[nc][v] - d[k][v]) / (nc - k)
    for (i64 vi = 0; vi < nc; ++vi) {
      if (is_inf(d[static_cast<size_t>(nc)][static_cast<size_t>(vi)])) continue;
      std::optional<RationalMean> vmax;
      for (i64 k = 0; k < nc; ++k) {
        if (is_inf(d[static_cast<size_t>(k)][static_cast<size_t>(vi)])) continue;
        RationalMean r{d[static_cast<size_t>(nc)][static_cast<size_t>(vi)] -
                           d[static_cast<size_t>(k)][static_cast<size_t>(vi)],
                       nc - k};
        if (!vmax || *vmax < r) vmax = r;
      }
      if (vmax && (!best || *vmax < *best)) best = *vmax;
    }
  }
  if (!best) throw NoCycle("graph contains no cycle");
  return *best;
}

i128 brute_threshold(const Graph& g) {
  i128 result = 0;
  bool cyclic = true;
  try {
    RationalMean mu = karp_mcm(g);
    // Smallest integer M >= 0 with M >= -mu.
    if (mu.numerator < 0) result = ceil_div(-mu.numerator, mu.denominator);
  } catch (const NoCycle&) {
    cyclic = false;
  }
  // Cross-check by direct scan around the candidate.
  if (cyclic) {
    if (result > 0) assert(has_negative_cycle(shift_weights(g, result - 1)));
    assert(!has_negative_cycle(shift_weights(g, result)));
  }
  return result;
}

DistTable dist_i_table(const Graph& g, i64 s, i64 i_max) {
  const i64 n = g.num_vertices();
  const i64 m = g.num_edges();
  DistTable out;
  out.dist.assign(static_cast<size_t>(i_max) + 1,
                  std::vector<i128>(static_cast<size_t>(n), kInfDist));
  out.dist_prime = out.dist;

  // layer c: best path using at most c negative edges. Within a layer, the
  // nonnegative edges are relaxed to a fixpoint.
  std::vector<std::vector<i128>> layer(static_cast<size_t>(i_max) + 1,
                                       std::vector<i128>(static_cast<size_t>(n), kInfDist));
  for (i64 c = 0; c < i_max; ++c) {
    if (c == 0) {
      layer[0][static_cast<size_t>(s)] = 0;
    } else {
      layer[static_cast<size_t>(c)] = layer[static_cast<size_t>(c) - 1];
      for (i64 e = 0; e < m; ++e) {
        const Edge& ed = g.edge(e);
        if (ed.weight >= 0) continue;
        i128 du = layer[static_cast<size_t>(c) - 1][static_cast<size_t>(ed.src)];
        if (is_inf(du)) continue;
        i128 cand = du + ed.weight;
        if (cand < layer[static_cast<size_t>(c)][static_cast<size_t>(ed.dst)])
          layer[static_cast<size_t>(c)][static_cast<size_t>(ed.dst)] = cand;
      }
    }
    for (i64 round = 0; round < n; ++round) {
      bool changed = false;
      for (i64 e = 0; e < m; ++e) {
        const Edge& ed = g.edge(e);
        if (ed.weight < 0) continue;
        i128 du = layer[static_cast<size_t>(c)][static_cast<size_t>(ed.src)];
        if (is_inf(du)) continue;
        i128 cand = du + ed.weight;
        if (cand < layer[static_cast<size_t>(c)][static_cast<size_t>(ed.dst)]) {
          layer[static_cast<size_t>(c)][static_cast<size_t>(ed.dst)] = cand;
          changed = true;
        }
      }
      if (!changed) break;
    }
    // dist[i] allows fewer than i negative edges, i.e. at most i-1.
    out.dist[static_cast<size_t>(c) + 1] = layer[static_cast<size_t>(c)];
  }

  for (i64 i = 0; i <= i_max; ++i) {
    out.dist_prime[static_cast<size_t>(i)] = out.dist[static_cast<size_t>(i)];
    for (i64 e = 0; e < m; ++e) {
      const Edge& ed = g.edge(e);
      if (ed.weight >= 0) continue;
      i128 du = out.dist[static_cast<size_t>(i)][static_cast<size_t>(ed.src)];
      if (is_inf(du)) continue;
      i128 cand = du + ed.weight;
      if (cand < out.dist_prime[static_cast<size_t>(i)][static_cast<size_t>(ed.dst)])
        out.dist_prime[static_cast<size_t>(i)][static_cast<size_t>(ed.dst)] = cand;
    }
  }

  // eta: smallest layer whose value equals the true distance.
  BellmanFordResult bf = bellman_ford(g, s);
  out.eta.assign(static_cast<size_t>(n), 0);
  for (i64 v = 0; v < n; ++v) {
    if (bf.dist.kind[static_cast<size_t>(v)] != DistKind::Finite) {
      out.eta[static_cast<size_t>(v)] = 0;
      continue;
    }
    i64 eta = i_max;
    for (i64 c = 0; c < i_max; ++c) {
      if (layer[static_cast<size_t>(c)][static_cast<size_t>(v)] ==
          bf.dist.value[static_cast<size_t>(v)]) {
        eta = c;
        break;
      }
    }
    out.eta[static_cast<size_t>(v)] = eta;
  }
  return out;
}

namespace {

void kappa_dfs(const Graph& g, i64 v, std::vector<bool>& on_path, i128 weight, i64 negs,
               i64& best) {
  if (weight <= 0 && negs > best) best = negs;
  for (i64 e : g.out_edges(v)) {
    const Edge& ed = g.edge(e);
    if (on_path[static_cast<size_t>(ed.dst)]) continue;
    on_path[static_cast<size_t>(ed.dst)] = true;
    kappa_dfs(g, ed.dst, on_path, weight + ed.weight, negs + (ed.weight == -1 ? 1 : 0), best);
    on_path[static_cast<size_t>(ed.dst)] = false;
  }
}

}  // namespace

i64 brute_kappa(const Graph& g, i64 s) {
  if (g.num_vertices() > 14)
    throw TooLarge("brute-force path enumeration limited to 14 vertices");
  std::vector<bool> on_path(static_cast<size_t>(g.num_vertices()), false);
  on_path[static_cast<size_t>(s)] = true;
  i64 best = 0;
  kappa_dfs(g, s, on_path, 0, 0, best);
  return best;
}

namespace {

// Returns true if a witness path (> bound negatives, nonpositive weight)
// exists below v; sets exhausted when the node budget runs out.
bool witness_dfs(const Graph& g, i64 v, std::vector<bool>& on_path, i128 weight, i64 negs,
                 i64 bound, i64& nodes, bool& exhausted) {
  if (--nodes <= 0) {
    exhausted = true;
    return false;
  }
  if (weight <= 0 && negs > bound) return true;
  for (i64 e : g.out_edges(v)) {
    const Edge& ed = g.edge(e);
    if (on_path[static_cast<size_t>(ed.dst)]) continue;
    on_path[static_cast<size_t>(ed.dst)] = true;
    bool found = witness_dfs(g, ed.dst, on_path, weight + ed.weight,
                             negs + (ed.weight == -1 ? 1 : 0), bound, nodes, exhausted);
    on_path[static_cast<size_t>(ed.dst)] = false;
    if (found || exhausted) return found;
  }
  return false;
}

}  // namespace

std::optional<bool> kappa_at_most(const Graph& g, i64 s, i64 bound, i64 node_budget) {
  std::vector<bool> on_path(static_cast<size_t>(g.num_vertices()), false);
  on_path[static_cast<size_t>(s)] = true;
  bool exhausted = false;
  i64 nodes = node_budget;
  bool witness = witness_dfs(g, s, on_path, 0, 0, bound, nodes, exhausted);
  if (witness) return false;
  if (exhausted) return std::nullopt;
  return true;
}

}  // namespace nwsp::oracle
