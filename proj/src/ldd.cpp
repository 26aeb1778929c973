#include "nwsp/ldd.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>

#include "nwsp/decompose.hpp"
#include "nwsp/detail/ball_sweep.hpp"
#include "nwsp/errors.hpp"

namespace nwsp {

using detail::BallSweep;

namespace {

i128 carve_radius_limit(i128 d, i64 n) {
  i128 denom = std::max<i128>(1, static_cast<i128>(10.0 * log2_of(n)));
  return std::max<i128>(1, floor_div(d, denom));
}

// Recursion worker; appends original edge ids of the cut to `out`.
// n0 is the vertex count of the root call. Returns false on Fail.
bool ldd_rec(const Graph& g, const std::vector<i64>& orig_edge, i128 d, i64 n0, Rng& rng,
             const Config& cfg, std::vector<i64>& out) {
  const i64 n = g.num_vertices();
  if (n <= 100) {
    for (i64 e = 0; e < g.num_edges(); ++e) out.push_back(orig_edge[static_cast<size_t>(e)]);
    return true;
  }

  const i128 radius = carve_radius_limit(d, n);
  Rng rng_out = rng.split(0xa0);
  Rng rng_in = rng.split(0xa1);
  std::vector<bool> out_light =
      classify_light(g, BallDir::Out, radius, 13.0 / 16.0, 1.0 / 16.0, rng_out, cfg);
  std::vector<bool> in_light =
      classify_light(g, BallDir::In, radius, 13.0 / 16.0, 1.0 / 16.0, rng_in, cfg);

  i64 heavy = -1;
  for (i64 v = 0; v < n && heavy == -1; ++v)
    if (!out_light[static_cast<size_t>(v)] && !in_light[static_cast<size_t>(v)]) heavy = v;

  if (heavy != -1) {
    if (d - 4 * radius <= 0) {
      // Not enough budget for a collapse step; cutting everything is always
      // a valid decomposition (singleton components have diameter zero). The
      // hitting-probability bound is vacuous in this regime.
      for (i64 e = 0; e < g.num_edges(); ++e) out.push_back(orig_edge[static_cast<size_t>(e)]);
      return true;
    }
    // Vertices on shortest paths between `heavy` and the intersection of its
    // balls span a set of diameter at most 4*radius; collapse it.
    BallSweep sweep_out(n), sweep_in(n);
    BallSweep::Options opt_out, opt_in;
    opt_out.track_parents = opt_in.track_parents = true;
    opt_in.dir = BallSweep::Dir::In;
    sweep_out.run(g, heavy, radius, opt_out);
    sweep_in.run(g, heavy, radius, opt_in);

    std::vector<bool> in_c(static_cast<size_t>(n), false);
    std::vector<i64> members;
    // Walks stop only at vertices already visited by the same sweep, so each
    // tree contributes its full root path and C keeps diameter <= 4*radius.
    auto collect = [&](const BallSweep& sweep, bool forward) {
      std::vector<bool> seen(static_cast<size_t>(n), false);
      for (i64 w : sweep.members()) {
        if (!sweep_out.in_ball(w, radius) || !sweep_in.in_ball(w, radius)) continue;
        i64 cur = w;
        while (cur != -1 && !seen[static_cast<size_t>(cur)]) {
          seen[static_cast<size_t>(cur)] = true;
          if (!in_c[static_cast<size_t>(cur)]) {
            in_c[static_cast<size_t>(cur)] = true;
            members.push_back(cur);
          }
          i64 pe = sweep.parent_of(cur);
          if (pe == -1) break;
          cur = forward ? g.edge(pe).src : g.edge(pe).dst;
        }
      }
    };
    collect(sweep_out, true);
    collect(sweep_in, false);
    assert(!members.empty());

    ContractedGraph c = contract(g, members);
    std::vector<i64> sub_orig(c.orig_edge.size());
    for (size_t e = 0; e < c.orig_edge.size(); ++e)
      sub_orig[e] = orig_edge[static_cast<size_t>(c.orig_edge[e])];
    Rng sub_rng = rng.split(0xb0);
    return ldd_rec(c.graph, sub_orig, d - 4 * radius, n0, sub_rng, cfg, out);
  }

  // Light case: carve balls of geometric radius around every vertex, cutting
  // the boundary and recursing inside each ball with the same budget.
  const double p = std::min(1.0, 10.0 * ln_of(n0) / static_cast<double>(to_i64(radius)));
  std::vector<bool> alive(static_cast<size_t>(n), true);
  std::vector<i64> local(static_cast<size_t>(n), -1);
  BallSweep sweep(n);
  u64 carve_idx = 0;
  for (i64 v = 0; v < n; ++v) {
    if (!alive[static_cast<size_t>(v)]) continue;
    const bool use_out = out_light[static_cast<size_t>(v)];
    i128 r = rng.geometric(p);
    if (r > radius) return false;

    BallSweep::Options opt;
    opt.dir = use_out ? BallSweep::Dir::Out : BallSweep::Dir::In;
    opt.alive = &alive;
    sweep.run(g, v, r, opt);
    for (i64 u : sweep.members()) {
      auto edges = use_out ? g.out_edges(u) : g.in_edges(u);
      for (i64 e : edges) {
        const Edge& ed = g.edge(e);
        i64 to = use_out ? ed.dst : ed.src;
        if (!alive[static_cast<size_t>(to)]) continue;
        if (!sweep.in_ball(to, r)) out.push_back(orig_edge[static_cast<size_t>(e)]);
      }
    }

    // Recurse inside the ball on the forward orientation.
    const std::vector<i64> ball(sweep.members());
    for (size_t i = 0; i < ball.size(); ++i)
      local[static_cast<size_t>(ball[i])] = static_cast<i64>(i);
    std::vector<Edge> sub_edges;
    std::vector<i64> sub_orig;
    for (i64 u : ball)
      for (i64 e : g.out_edges(u)) {
        const Edge& ed = g.edge(e);
        if (local[static_cast<size_t>(ed.dst)] != -1) {
          sub_edges.push_back({local[static_cast<size_t>(ed.src)],
                               local[static_cast<size_t>(ed.dst)], ed.weight});
          sub_orig.push_back(orig_edge[static_cast<size_t>(e)]);
        }
      }
    for (i64 u : ball) {
      alive[static_cast<size_t>(u)] = false;
      local[static_cast<size_t>(u)] = -1;
    }
    sweep.reset();

    Graph sub = Graph::from_edges(static_cast<i64>(ball.size()), std::move(sub_edges));
    Rng sub_rng = rng.split(0xc0 + carve_idx++);
    if (!ldd_rec(sub, sub_orig, d, n0, sub_rng, cfg, out)) return false;
  }
  return true;
}

}  // namespace

std::optional<EdgeSet> strong_ldd_once(const Graph& g, i128 d, Rng& rng, const Config& cfg) {
  if (g.min_weight() < 0)
    throw NegativeWeight("low-diameter decomposition requires nonnegative weights");
  if (d < 1) throw InvalidInput("diameter bound must be positive");

  std::vector<i64> identity(static_cast<size_t>(g.num_edges()));
  for (i64 e = 0; e < g.num_edges(); ++e) identity[static_cast<size_t>(e)] = e;
  std::vector<i64> cut_edges;
  if (!ldd_rec(g, identity, d, g.num_vertices(), rng, cfg, cut_edges)) return std::nullopt;

  EdgeSet cut(g.num_edges());
  for (i64 e : cut_edges) cut.insert(e);
  return cut;
}

i128 diameter_2approx(const Graph& g, const std::vector<i64>& component) {
  if (component.empty()) throw InvalidInput("empty component");
  // Eccentricities of the lowest-id member, out of and into it.
  i64 root = *std::min_element(component.begin(), component.end());
  InducedGraph sub = induced_with_source(g, component, root);
  i128 best = 0;
  for (const Graph& side : {sub.graph, reverse(sub.graph)}) {
    SpResult sp = dijkstra(side, sub.source);
    for (i128 dv : sp.dist) {
      if (is_inf(dv)) throw NotStronglyConnected("component is not strongly connected");
      best = std::max(best, dv);
    }
  }
  return best;
}

i128 exact_diameter(const Graph& g, const std::vector<i64>& component) {
  if (component.empty()) throw InvalidInput("empty component");
  i64 root = *std::min_element(component.begin(), component.end());
  InducedGraph sub = induced_with_source(g, component, root);
  i128 best = 0;
  for (i64 v = 0; v < sub.graph.num_vertices(); ++v) {
    SpResult sp = dijkstra(sub.graph, v);
    for (i128 dv : sp.dist) {
      if (is_inf(dv)) throw NotStronglyConnected("component is not strongly connected");
      best = std::max(best, dv);
    }
  }
  return best;
}

LddResult strong_ldd(const Graph& g, i128 d, Rng& rng, const Config& cfg) {
  const i128 d_half = std::max<i128>(1, d / 2);
  for (int attempt = 0; attempt < 200; ++attempt) {
    Rng sub = rng.split(0xd00 + static_cast<u64>(attempt));
    auto cut = strong_ldd_once(g, d_half, sub, cfg);
    if (!cut) continue;

    // Certify: every strongly connected component of the remaining graph must
    // have diameter at most d. Small components are checked exactly; large
    // ones via the eccentricity 2-approximation against d/2.
    std::vector<Edge> kept;
    for (i64 e = 0; e < g.num_edges(); ++e)
      if (!cut->contains(e)) kept.push_back(g.edge(e));
    Graph rem = Graph::from_edges(g.num_vertices(), std::move(kept));
    SccDecomposition comps = scc(rem);
    std::vector<std::vector<i64>> comp_vertices(static_cast<size_t>(comps.comp_count));
    for (i64 v = 0; v < g.num_vertices(); ++v)
      comp_vertices[static_cast<size_t>(comps.comp_id[static_cast<size_t>(v)])].push_back(v);

    bool ok = true;
    for (const auto& verts : comp_vertices) {
      if (verts.size() <= 1) continue;
      if (static_cast<i64>(verts.size()) <= 4096) {
        ok = exact_diameter(rem, verts) <= d;
      } else {
        ok = diameter_2approx(rem, verts) <= d_half;
      }
      if (!ok) break;
    }
    if (ok) return LddResult{std::move(*cut), d};
  }
  throw ConfiguredCapExceeded("low-diameter decomposition kept failing certification");
}

}  // namespace nwsp
