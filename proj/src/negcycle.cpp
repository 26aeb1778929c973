#include "nwsp/negcycle.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>

#include "nwsp/dijkstra.hpp"
#include "nwsp/errors.hpp"
#include "nwsp/solver.hpp"

namespace nwsp {

namespace {

BigInt big(i128 v) {
  bool neg = v < 0;
  unsigned __int128 mag = neg ? static_cast<unsigned __int128>(-(v + 1)) + 1
                              : static_cast<unsigned __int128>(v);
  BigInt hi = static_cast<u64>(mag >> 64);
  BigInt out = (hi << 64) | static_cast<u64>(mag);
  return neg ? -out : out;
}

BigInt pow_big(const BigInt& b, int e) {
  BigInt r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

}  // namespace

DriftValue drift_value(i128 w_t, i128 delta_t, i128 m_star) {
  if (w_t < m_star || delta_t < 1) throw InvalidInput("drift requires W >= M* and Delta >= 1");
  BigInt gap = big(w_t) - big(m_star);
  BigInt two_delta = 2 * big(delta_t);
  // max{gap^19 * 2D, gap^21 / 2D} over the common denominator 2D.
  DriftValue d;
  d.num = std::max(pow_big(gap, 19) * two_delta * two_delta, pow_big(gap, 21));
  d.den = two_delta;
  return d;
}

double drift_ratio(const DriftValue& next, const DriftValue& cur) {
  BigInt num = next.num * cur.den;
  BigInt den = cur.num * next.den;
  if (den == 0) return 0.0;
  // Scaled integer division keeps the conversion in double range.
  BigInt scaled = (num << 53) / den;
  return static_cast<double>(scaled) * 0x1.0p-53;
}

i128 slow_threshold(const Graph& g, Rng& rng, const Config& cfg, SolveStats* stats) {
  const i128 w = g.min_weight() < 0 ? -g.min_weight() : 0;
  if (w <= 48) {
    for (i128 t = std::min<i128>(47, w - 1); t >= 0; --t) {
      Rng sub = rng.split(static_cast<u64>(static_cast<i64>(t)));
      if (detect_neg_cycle(shift_weights(g, t), sub, cfg, stats) == CycleVerdict::NegCycle)
        return t + 1;
    }
    return 0;
  }
  const i128 m = (w + 1) / 2;
  const double delta = std::pow(static_cast<double>(std::max<i64>(g.num_vertices(), 2)), -10.0);
  Rng sub = rng.split(0x51);
  auto phi = test_scale(shift_weights(g, m), delta, sub, cfg, stats);
  if (phi) return slow_threshold(reweight(g, *phi), rng, cfg, stats);
  return m + slow_threshold(shift_weights(g, m), rng, cfg, stats);
}

i128 fast_threshold(const Graph& g, Rng& rng, const Config& cfg, SolveStats* stats,
                    DriftTrace* trace) {
  const i64 n = g.num_vertices();
  const i128 w0 = g.min_weight() < 0 ? -g.min_weight() : 0;
  if (w0 == 0) return 0;

  // Iteration count from the drift tail bound: the drift starts at no more
  // than 4*W^21 and contracts by 0.7 per step, so T steps push the failure
  // probability below n^-10.
  const double ln_w = std::log(std::max(2.0, static_cast<double>(w0)));
  const i64 t_max = static_cast<i64>(
      std::ceil((21.0 * ln_w + std::log(4.0) + 10.0 * ln_of(n)) / std::log(1.0 / 0.7)));
  assert(t_max >= 1);

  Graph cur = g;
  i128 delta = 2;
  i128 w_cur = w0;
  int delta1_failures = 0;  // consecutive failures at step size 1
  for (i64 t = 0; t < t_max; ++t) {
    w_cur = cur.min_weight() < 0 ? -cur.min_weight() : 0;
    if (w_cur <= 24) {
      for (i128 j = std::min<i128>(23, w_cur - 1); j >= 0; --j) {
        Rng sub = rng.split(0x200 + static_cast<u64>(static_cast<i64>(j)));
        if (detect_neg_cycle(shift_weights(cur, j), sub, cfg, stats) == CycleVerdict::NegCycle)
          return j + 1;
      }
      return 0;
    }

    Rng sub = rng.split(0x300 + static_cast<u64>(t));
    auto phi = test_scale(shift_weights(cur, w_cur - delta), 0.01, sub, cfg, stats);
    if (trace && trace->m_star) {
      DriftRecord rec;
      rec.t = t;
      rec.w = w_cur;
      rec.delta = delta;
      rec.success = phi.has_value();
      rec.drift = drift_value(w_cur, delta, *trace->m_star);
      trace->records.push_back(rec);
    }
    if (phi) {
      cur = reweight(cur, *phi);
      // The tester's postcondition translates into additive progress.
      assert(4 * (w_cur - (cur.min_weight() < 0 ? -cur.min_weight() : 0)) >= delta);
      delta = std::min<i128>(checked_mul(delta, 2), i128(1) << 110);
      delta1_failures = 0;
    } else {
      // A failure at step size 1 is one-sided evidence that shifting by
      // W - 1 leaves a negative cycle, i.e. that W is already the answer.
      // Twelve independent pieces push the error probability far below the
      // drift bound, so stop early instead of idling until t_max.
      if (delta == 1 && ++delta1_failures >= 12) break;
      delta = std::max<i128>(1, delta / 2);
    }
  }
  return cur.min_weight() < 0 ? -cur.min_weight() : 0;
}

i128 threshold_las_vegas(const Graph& g, Rng& rng, const Config& cfg, SolveStats* stats) {
  for (int attempt = 0; attempt < cfg.threshold_certify_cap; ++attempt) {
    Rng sub = rng.split(0x400 + static_cast<u64>(attempt));
    i128 m = fast_threshold(g, sub, cfg, stats);

    // Certificates: no negative cycle at shift M, and one at shift M-1.
    Rng cert = rng.split(0x500 + static_cast<u64>(attempt));
    SolveOutcome at_m = sssp_or_neg_cycle_with_dummy_source(shift_weights(g, m), cert, cfg, stats);
    if (!std::holds_alternative<SpResult>(at_m.result)) {
      if (stats) ++stats->restarts;
      continue;
    }
    if (m > 0) {
      SolveOutcome below =
          sssp_or_neg_cycle_with_dummy_source(shift_weights(g, m - 1), cert, cfg, stats);
      if (!std::holds_alternative<Cycle>(below.result)) {
        if (stats) ++stats->restarts;
        continue;
      }
    }
    return m;
  }
  throw ConfiguredCapExceeded("threshold certification kept failing");
}

Cycle find_neg_cycle(const Graph& g, Rng& rng, const Config& cfg, SolveStats* stats,
                     int restart_cap, const ThresholdFn& threshold) {
  const i64 n = g.num_vertices();
  if (restart_cap < 0) restart_cap = cfg.find_cycle_restart_cap;
  const i128 factor = checked_add(checked_mul(checked_mul(i128(n), n), n), 1);

  Graph g0 = [&] {
    std::vector<Edge> es = g.edges();
    for (Edge& e : es) e.weight = checked_mul(e.weight, factor);
    return Graph::from_edges(n, std::move(es));
  }();

  for (int attempt = 0; attempt < restart_cap; ++attempt) {
    Rng sub = rng.split(0x600 + static_cast<u64>(attempt));
    i128 m_star = threshold ? threshold(g0, sub, cfg, stats) : fast_threshold(g0, sub, cfg, stats);

    // Shifted graph with a source added so every vertex is reachable.
    std::vector<Edge> es;
    es.reserve(static_cast<size_t>(g0.num_edges()) + static_cast<size_t>(n));
    for (const Edge& e : g0.edges()) es.push_back({e.src, e.dst, checked_add(e.weight, m_star)});
    for (i64 v = 0; v < n; ++v) es.push_back({n, v, 0});
    Graph g1 = Graph::from_edges(n + 1, std::move(es));

    Rng sssp_rng = rng.split(0x700 + static_cast<u64>(attempt));
    auto sp = sssp_no_negcycle(g1, n, sssp_rng, cfg, stats);
    if (!sp) {
      if (stats) ++stats->restarts;
      continue;  // threshold was too small; retry with fresh randomness
    }

    // Reweighted by exact distances every edge is nonnegative; the edges of
    // any minimum cycle are light (weight at most n), so searching among the
    // light edges finds a cycle that is negative in the original graph.
    std::vector<Edge> light;
    std::vector<i64> orig_id;
    for (i64 e = 0; e < g0.num_edges(); ++e) {
      const Edge& ed = g1.edge(e);
      i128 wr = checked_add(checked_add(ed.weight, sp->dist[static_cast<size_t>(ed.src)]),
                            -sp->dist[static_cast<size_t>(ed.dst)]);
      if (wr <= n) {
        light.push_back({ed.src, ed.dst, wr});
        orig_id.push_back(e);
      }
    }
    Graph g2 = Graph::from_edges(n, std::move(light));

    // Any back edge of a depth-first search closes a simple cycle.
    std::vector<i64> local_cycle = detail::find_any_cycle(g2);
    if (local_cycle.empty()) {
      if (stats) ++stats->restarts;
      continue;
    }
    std::vector<i64> ids;
    ids.reserve(local_cycle.size());
    for (i64 e : local_cycle) ids.push_back(orig_id[static_cast<size_t>(e)]);
    Cycle cyc = make_cycle(g, ids);
    if (cyc.weight < 0) return cyc;
    if (stats) ++stats->restarts;
  }
  throw IterationCapExceeded(
      "no negative cycle found; the input likely does not contain one");
}

namespace detail {

std::vector<i64> find_any_cycle(const Graph& g) {
  const i64 n = g.num_vertices();
  std::vector<int> state(static_cast<size_t>(n), 0);  // 0 new, 1 on stack, 2 done
  std::vector<i64> via_edge(static_cast<size_t>(n), -1);

  struct Frame {
    i64 v;
    size_t pos;
  };
  std::vector<Frame> frames;

  for (i64 root = 0; root < n; ++root) {
    if (state[static_cast<size_t>(root)] != 0) continue;
    frames.push_back({root, 0});
    state[static_cast<size_t>(root)] = 1;
    while (!frames.empty()) {
      Frame& f = frames.back();
      auto edges = g.out_edges(f.v);
      if (f.pos < edges.size()) {
        i64 e = edges[f.pos++];
        i64 w = g.edge(e).dst;
        if (state[static_cast<size_t>(w)] == 0) {
          via_edge[static_cast<size_t>(w)] = e;
          state[static_cast<size_t>(w)] = 1;
          frames.push_back({w, 0});
        } else if (state[static_cast<size_t>(w)] == 1) {
          // Walk the stack edges back from f.v to w, then close with e.
          std::vector<i64> cycle;
          i64 cur = f.v;
          while (cur != w) {
            cycle.push_back(via_edge[static_cast<size_t>(cur)]);
            cur = g.edge(via_edge[static_cast<size_t>(cur)]).src;
          }
          std::reverse(cycle.begin(), cycle.end());
          cycle.push_back(e);
          return cycle;
        }
      } else {
        state[static_cast<size_t>(f.v)] = 2;
        frames.pop_back();
      }
    }
  }
  return {};
}

}  // namespace detail

}  // namespace nwsp
