#include "nwsp/dijkstra.hpp"

#include <limits>

#include "nwsp/errors.hpp"
#include "nwsp/heap.hpp"

namespace nwsp {

namespace {

void require_nonnegative(const Graph& g) {
  if (g.min_weight() < 0)
    throw NegativeWeight("operation requires nonnegative edge weights");
}

}  // namespace

SpResult dijkstra(const Graph& g, i64 s) {
  require_nonnegative(g);
  const i64 n = g.num_vertices();
  SpResult res;
  res.dist.assign(static_cast<size_t>(n), kInfDist);
  res.parent_edge.assign(static_cast<size_t>(n), std::nullopt);
  res.dist[static_cast<size_t>(s)] = 0;

  MinQueue q(n);
  q.insert(0, s);
  while (!q.empty()) {
    i64 v = q.delete_min();
    i128 dv = res.dist[static_cast<size_t>(v)];
    for (i64 e : g.out_edges(v)) {
      const Edge& ed = g.edge(e);
      i128 cand = dv + ed.weight;
      if (cand < res.dist[static_cast<size_t>(ed.dst)]) {
        res.dist[static_cast<size_t>(ed.dst)] = cand;
        res.parent_edge[static_cast<size_t>(ed.dst)] = e;
        q.insert_or_decrease(cand, ed.dst);
      }
    }
  }
  return res;
}

BallResult ball_out(const Graph& g, i64 v, i128 r) {
  require_nonnegative(g);
  if (r < 0) throw InvalidInput("ball radius must be nonnegative");
  const i64 n = g.num_vertices();
  std::vector<i128> dist(static_cast<size_t>(n), kInfDist);
  std::vector<bool> in_ball(static_cast<size_t>(n), false);

  BallResult res;
  MinQueue q(n);
  dist[static_cast<size_t>(v)] = 0;
  q.insert(0, v);
  while (!q.empty()) {
    i64 u = q.find_min();
    if (dist[static_cast<size_t>(u)] > r) break;  // nothing beyond the radius settles
    q.delete_min();
    in_ball[static_cast<size_t>(u)] = true;
    res.members.push_back(u);
    res.dist_within.emplace_back(u, dist[static_cast<size_t>(u)]);
    for (i64 e : g.out_edges(u)) {
      const Edge& ed = g.edge(e);
      i128 cand = dist[static_cast<size_t>(u)] + ed.weight;
      if (cand <= r && cand < dist[static_cast<size_t>(ed.dst)]) {
        dist[static_cast<size_t>(ed.dst)] = cand;
        q.insert_or_decrease(cand, ed.dst);
      }
    }
  }
  for (i64 u : res.members)
    for (i64 e : g.out_edges(u))
      if (!in_ball[static_cast<size_t>(g.edge(e).dst)]) res.boundary.push_back(e);
  return res;
}

BallResult ball_in(const Graph& g, const Graph& g_rev, i64 v, i128 r) {
  (void)g;
  return ball_out(g_rev, v, r);
}

std::optional<SpResult> lazy_dijkstra(const Graph& g, i64 s, Budget& budget,
                                      LazyTrace* trace) {
  const i64 n = g.num_vertices();
  SpResult res;
  res.dist.assign(static_cast<size_t>(n), kInfDist);
  res.parent_edge.assign(static_cast<size_t>(n), std::nullopt);
  res.dist[static_cast<size_t>(s)] = 0;
  if (trace) trace->a_counts.assign(static_cast<size_t>(n), 0);

  MinQueue q(n);
  q.insert(0, s);
  std::vector<i64> settled;  // the set A of the current round
  std::vector<i128> frozen;

  while (!q.empty()) {
    // Dijkstra phase over nonnegative edges.
    settled.clear();
    while (!q.empty()) {
      if (!budget.take()) return std::nullopt;
      i64 v = q.delete_min();
      settled.push_back(v);
      if (trace) ++trace->a_counts[static_cast<size_t>(v)];
      i128 dv = res.dist[static_cast<size_t>(v)];
      for (i64 e : g.out_edges(v)) {
        const Edge& ed = g.edge(e);
        if (ed.weight < 0) continue;
        if (!budget.take()) return std::nullopt;
        i128 cand = dv + ed.weight;
        if (cand < res.dist[static_cast<size_t>(ed.dst)]) {
          res.dist[static_cast<size_t>(ed.dst)] = cand;
          res.parent_edge[static_cast<size_t>(ed.dst)] = e;
          q.insert_or_decrease(cand, ed.dst);
        }
      }
    }
    if (trace) trace->after_dijkstra_phase.push_back(res.dist);

    // Bellman-Ford phase over the negative edges out of this round's set.
    // Source values are frozen at their end-of-phase state so one pass moves
    // a distance across at most one negative edge.
    frozen.clear();
    for (i64 v : settled) frozen.push_back(res.dist[static_cast<size_t>(v)]);
    for (size_t i = 0; i < settled.size(); ++i) {
      i64 v = settled[i];
      i128 dv = frozen[i];
      for (i64 e : g.out_edges(v)) {
        const Edge& ed = g.edge(e);
        if (ed.weight >= 0) continue;
        if (!budget.take()) return std::nullopt;
        i128 cand = dv + ed.weight;
        if (cand < res.dist[static_cast<size_t>(ed.dst)]) {
          res.dist[static_cast<size_t>(ed.dst)] = cand;
          res.parent_edge[static_cast<size_t>(ed.dst)] = e;
          q.insert_or_decrease(cand, ed.dst);
        }
      }
    }
    if (trace) trace->after_bellman_ford_phase.push_back(res.dist);
  }
  return res;
}

std::optional<SpResult> phase_trace(const Graph& g, i64 s, LazyTrace& trace) {
  // Callers certify the absence of negative cycles; the budget is a backstop.
  i64 n = g.num_vertices(), m = g.num_edges();
  Budget budget{(m + n + 2) * (n + 2) * 4, 0};
  return lazy_dijkstra(g, s, budget, &trace);
}

}  // namespace nwsp
