#include "nwsp.h"

#include <cstring>
#include <exception>
#include <string>
#include <variant>
#include <vector>

#include "nwsp/errors.hpp"
#include "nwsp/gen.hpp"
#include "nwsp/graph.hpp"
#include "nwsp/ldd.hpp"
#include "nwsp/mcm.hpp"
#include "nwsp/oracle.hpp"
#include "nwsp/solver.hpp"

using namespace nwsp;

namespace {

thread_local std::string g_last_error;

int fail(int code, const char* msg) {
  g_last_error = msg;
  return code;
}

template <typename Fn>
int guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const OverflowError& e) {
    return fail(NWSP_EOVERFLOW, e.what());
  } catch (const NegativeWeight& e) {
    return fail(NWSP_ENEGWEIGHT, e.what());
  } catch (const NoCycle& e) {
    return fail(NWSP_ENOCYCLE, e.what());
  } catch (const ConfiguredCapExceeded& e) {
    return fail(NWSP_ECAP, e.what());
  } catch (const IterationCapExceeded& e) {
    return fail(NWSP_ECAP, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(NWSP_EINVAL, e.what());
  } catch (const std::exception& e) {
    return fail(NWSP_EINTERNAL, e.what());
  }
}

Config profile_config(const char* profile) {
  if (profile && std::strcmp(profile, "bench") == 0) return Config::bench_profile();
  return Config{};
}

constexpr i64 kMaxInputWeight = i64(1) << 40;

}  // namespace

struct nwsp_graph {
  Graph g;
};

struct nwsp_result {
  int kind = NWSP_RESULT_TREE;
  u64 steps = 0;
  u64 tree_phase_steps = 0;
  u64 cycle_phase_steps = 0;
  bool verified = false;

  // tree / distances
  std::vector<i64> dist_value;
  std::vector<int> dist_kind;
  std::vector<i64> parent;

  // cycle / mcm
  std::vector<i64> cycle_edges;
  i64 mean_num = 0;
  i64 mean_den = 1;

  // ldd
  std::vector<i64> cut_edges;
  std::vector<i64> component_diameters;
};

extern "C" {

const char* nwsp_last_error(void) { return g_last_error.c_str(); }

int nwsp_graph_create(int64_t n, int64_t m, const int64_t* src, const int64_t* dst,
                      const int64_t* weight, nwsp_graph** out) {
  return guarded([&] {
    if (n < 0 || m < 0 || (m > 0 && (!src || !dst || !weight)) || !out)
      return fail(NWSP_EINVAL, "bad arguments");
    std::vector<Edge> es;
    es.reserve(static_cast<size_t>(m));
    for (int64_t e = 0; e < m; ++e) {
      if (weight[e] > kMaxInputWeight || weight[e] < -kMaxInputWeight)
        return fail(NWSP_EINVAL, "edge weight magnitude exceeds 2^40");
      es.push_back({src[e], dst[e], weight[e]});
    }
    auto* g = new nwsp_graph{Graph::from_edges(n, std::move(es))};
    *out = g;
    return int(NWSP_OK);
  });
}

void nwsp_graph_destroy(nwsp_graph* g) { delete g; }

int64_t nwsp_graph_vertices(const nwsp_graph* g) { return g->g.num_vertices(); }
int64_t nwsp_graph_edges(const nwsp_graph* g) { return g->g.num_edges(); }

int nwsp_graph_edge(const nwsp_graph* g, int64_t e, int64_t* src, int64_t* dst,
                    int64_t* weight) {
  return guarded([&] {
    if (!g || e < 0 || e >= g->g.num_edges()) return fail(NWSP_EINVAL, "edge id out of range");
    const Edge& ed = g->g.edge(e);
    if (src) *src = ed.src;
    if (dst) *dst = ed.dst;
    if (weight) *weight = to_i64(ed.weight);
    return int(NWSP_OK);
  });
}

int nwsp_generate(const char* kind, int64_t n, int64_t m, int64_t w_min, int64_t w_max,
                  uint64_t seed, nwsp_graph** out) {
  return guarded([&] {
    if (!kind || !out) return fail(NWSP_EINVAL, "bad arguments");
    GenParams p;
    p.kind = kind;
    p.n = n;
    p.m = m;
    p.w_min = w_min;
    p.w_max = w_max;
    *out = new nwsp_graph{generate_graph(p, seed)};
    return int(NWSP_OK);
  });
}

int nwsp_sssp(const nwsp_graph* g, int64_t source, uint64_t seed, const char* profile,
              nwsp_result** out) {
  return guarded([&] {
    if (!g || !out || source < 0 || source >= g->g.num_vertices())
      return fail(NWSP_EINVAL, "bad source vertex");
    Rng rng(seed);
    SolveStats stats;
    SolveOutcome o = sssp_or_neg_cycle(g->g, source, rng, profile_config(profile), &stats);
    auto* r = new nwsp_result;
    r->steps = stats.steps;
    r->tree_phase_steps = stats.tree_phase_steps;
    r->cycle_phase_steps = stats.cycle_phase_steps;
    if (o.is_tree()) {
      const SpResult& t = o.tree();
      r->kind = NWSP_RESULT_TREE;
      r->verified = verify_sp_tree(g->g, source, t);
      const i64 n = g->g.num_vertices();
      r->dist_value.assign(static_cast<size_t>(n), 0);
      r->dist_kind.assign(static_cast<size_t>(n), NWSP_DIST_FINITE);
      r->parent.assign(static_cast<size_t>(n), -1);
      for (i64 v = 0; v < n; ++v) {
        if (is_inf(t.dist[static_cast<size_t>(v)])) {
          r->dist_kind[static_cast<size_t>(v)] = NWSP_DIST_POS_INF;
        } else {
          r->dist_value[static_cast<size_t>(v)] = to_i64(t.dist[static_cast<size_t>(v)]);
        }
        if (t.parent_edge[static_cast<size_t>(v)])
          r->parent[static_cast<size_t>(v)] = *t.parent_edge[static_cast<size_t>(v)];
      }
    } else {
      r->kind = NWSP_RESULT_CYCLE;
      r->verified = verify_negative_cycle(g->g, o.cycle());
      r->cycle_edges = o.cycle().edges;
    }
    *out = r;
    return int(NWSP_OK);
  });
}

int nwsp_distances(const nwsp_graph* g, int64_t source, uint64_t seed, const char* profile,
                   nwsp_result** out) {
  return guarded([&] {
    if (!g || !out || source < 0 || source >= g->g.num_vertices())
      return fail(NWSP_EINVAL, "bad source vertex");
    Rng rng(seed);
    SolveStats stats;
    ExtendedDistances d = single_source_distances(g->g, source, rng, profile_config(profile), &stats);
    auto* r = new nwsp_result;
    r->kind = NWSP_RESULT_DISTANCES;
    r->steps = stats.steps;
    r->verified = true;  // Las Vegas construction; certified internally
    const i64 n = g->g.num_vertices();
    r->dist_value.assign(static_cast<size_t>(n), 0);
    r->dist_kind.assign(static_cast<size_t>(n), NWSP_DIST_FINITE);
    for (i64 v = 0; v < n; ++v) {
      switch (d.kind[static_cast<size_t>(v)]) {
        case DistKind::Finite:
          r->dist_value[static_cast<size_t>(v)] = to_i64(d.value[static_cast<size_t>(v)]);
          break;
        case DistKind::PosInf:
          r->dist_kind[static_cast<size_t>(v)] = NWSP_DIST_POS_INF;
          break;
        case DistKind::NegInf:
          r->dist_kind[static_cast<size_t>(v)] = NWSP_DIST_NEG_INF;
          break;
      }
    }
    *out = r;
    return int(NWSP_OK);
  });
}

int nwsp_min_cycle_mean(const nwsp_graph* g, uint64_t seed, const char* profile,
                        nwsp_result** out) {
  return guarded([&] {
    if (!g || !out) return fail(NWSP_EINVAL, "bad arguments");
    if (g->g.num_vertices() > (i64(1) << 11))
      return fail(NWSP_EINVAL, "minimum cycle mean limited to 2048 vertices (weight rescaling headroom)");
    Rng rng(seed);
    SolveStats stats;
    auto [cycle, mean] = min_cycle_mean(g->g, rng, profile_config(profile), &stats);
    auto* r = new nwsp_result;
    r->kind = NWSP_RESULT_MCM;
    r->steps = stats.steps;
    r->cycle_edges = cycle.edges;
    r->mean_num = to_i64(mean.numerator);
    r->mean_den = mean.denominator;
    // Optimality is certified inside min_cycle_mean (Las Vegas threshold);
    // re-check here that the reported fraction matches the witness cycle.
    Cycle recheck = make_cycle(g->g, cycle.edges);
    r->verified = recheck.weight == mean.numerator && recheck.length == mean.denominator;
    *out = r;
    return int(NWSP_OK);
  });
}

int nwsp_strong_ldd(const nwsp_graph* g, int64_t diameter_bound, uint64_t seed,
                    const char* profile, nwsp_result** out) {
  return guarded([&] {
    if (!g || !out || diameter_bound < 1) return fail(NWSP_EINVAL, "bad diameter bound");
    Rng rng(seed);
    LddResult ldd = strong_ldd(g->g, diameter_bound, rng, profile_config(profile));
    auto* r = new nwsp_result;
    r->kind = NWSP_RESULT_LDD;
    r->cut_edges = ldd.cut.to_sorted_vector();

    // Per-component certified diameters for the report.
    std::vector<Edge> kept;
    for (i64 e = 0; e < g->g.num_edges(); ++e)
      if (!ldd.cut.contains(e)) kept.push_back(g->g.edge(e));
    Graph rem = Graph::from_edges(g->g.num_vertices(), std::move(kept));
    SccDecomposition comps = scc(rem);
    std::vector<std::vector<i64>> comp_vertices(static_cast<size_t>(comps.comp_count));
    for (i64 v = 0; v < g->g.num_vertices(); ++v)
      comp_vertices[static_cast<size_t>(comps.comp_id[static_cast<size_t>(v)])].push_back(v);
    bool all_ok = true;
    for (const auto& verts : comp_vertices) {
      if (verts.empty()) continue;
      i128 diam = verts.size() == 1 ? 0 : exact_diameter(rem, verts);
      r->component_diameters.push_back(to_i64(diam));
      all_ok = all_ok && diam <= diameter_bound;
    }
    r->verified = all_ok;
    *out = r;
    return int(NWSP_OK);
  });
}

void nwsp_result_destroy(nwsp_result* r) { delete r; }

int nwsp_result_kind(const nwsp_result* r) { return r->kind; }
uint64_t nwsp_result_steps(const nwsp_result* r) { return r->steps; }
uint64_t nwsp_result_steps_tree_phase(const nwsp_result* r) { return r->tree_phase_steps; }
uint64_t nwsp_result_steps_cycle_phase(const nwsp_result* r) { return r->cycle_phase_steps; }
int nwsp_result_verified(const nwsp_result* r) { return r->verified ? 1 : 0; }

int nwsp_result_distance(const nwsp_result* r, int64_t v, int64_t* value, int* kind) {
  if (!r || (r->kind != NWSP_RESULT_TREE && r->kind != NWSP_RESULT_DISTANCES))
    return fail(NWSP_EINVAL, "result has no distances");
  if (v < 0 || v >= static_cast<int64_t>(r->dist_kind.size()))
    return fail(NWSP_EINVAL, "vertex out of range");
  if (value) *value = r->dist_value[static_cast<size_t>(v)];
  if (kind) *kind = r->dist_kind[static_cast<size_t>(v)];
  return NWSP_OK;
}

int nwsp_result_parent_edge(const nwsp_result* r, int64_t v, int64_t* edge) {
  if (!r || r->kind != NWSP_RESULT_TREE) return fail(NWSP_EINVAL, "result has no tree");
  if (v < 0 || v >= static_cast<int64_t>(r->parent.size()))
    return fail(NWSP_EINVAL, "vertex out of range");
  if (edge) *edge = r->parent[static_cast<size_t>(v)];
  return NWSP_OK;
}

int nwsp_result_cycle_len(const nwsp_result* r, int64_t* len) {
  if (!r || (r->kind != NWSP_RESULT_CYCLE && r->kind != NWSP_RESULT_MCM))
    return fail(NWSP_EINVAL, "result has no cycle");
  if (len) *len = static_cast<int64_t>(r->cycle_edges.size());
  return NWSP_OK;
}

int nwsp_result_cycle_edge(const nwsp_result* r, int64_t i, int64_t* edge) {
  if (!r || (r->kind != NWSP_RESULT_CYCLE && r->kind != NWSP_RESULT_MCM))
    return fail(NWSP_EINVAL, "result has no cycle");
  if (i < 0 || i >= static_cast<int64_t>(r->cycle_edges.size()))
    return fail(NWSP_EINVAL, "index out of range");
  if (edge) *edge = r->cycle_edges[static_cast<size_t>(i)];
  return NWSP_OK;
}

int nwsp_result_mean(const nwsp_result* r, int64_t* numerator, int64_t* denominator) {
  if (!r || r->kind != NWSP_RESULT_MCM) return fail(NWSP_EINVAL, "result has no mean");
  if (numerator) *numerator = r->mean_num;
  if (denominator) *denominator = r->mean_den;
  return NWSP_OK;
}

int nwsp_result_cut_size(const nwsp_result* r, int64_t* size) {
  if (!r || r->kind != NWSP_RESULT_LDD) return fail(NWSP_EINVAL, "result has no cut");
  if (size) *size = static_cast<int64_t>(r->cut_edges.size());
  return NWSP_OK;
}

int nwsp_result_cut_edge(const nwsp_result* r, int64_t i, int64_t* edge) {
  if (!r || r->kind != NWSP_RESULT_LDD) return fail(NWSP_EINVAL, "result has no cut");
  if (i < 0 || i >= static_cast<int64_t>(r->cut_edges.size()))
    return fail(NWSP_EINVAL, "index out of range");
  if (edge) *edge = r->cut_edges[static_cast<size_t>(i)];
  return NWSP_OK;
}

int nwsp_result_component_count(const nwsp_result* r, int64_t* count) {
  if (!r || r->kind != NWSP_RESULT_LDD) return fail(NWSP_EINVAL, "result has no components");
  if (count) *count = static_cast<int64_t>(r->component_diameters.size());
  return NWSP_OK;
}

int nwsp_result_component_diameter(const nwsp_result* r, int64_t i, int64_t* diameter) {
  if (!r || r->kind != NWSP_RESULT_LDD) return fail(NWSP_EINVAL, "result has no components");
  if (i < 0 || i >= static_cast<int64_t>(r->component_diameters.size()))
    return fail(NWSP_EINVAL, "index out of range");
  if (diameter) *diameter = r->component_diameters[static_cast<size_t>(i)];
  return NWSP_OK;
}

int nwsp_verify_tree(const nwsp_graph* g, int64_t source, const int64_t* dist_value,
                     const int* dist_kind, const int64_t* parent, int* ok) {
  return guarded([&] {
    if (!g || !dist_value || !dist_kind || !parent || !ok)
      return fail(NWSP_EINVAL, "bad arguments");
    const i64 n = g->g.num_vertices();
    SpResult sp;
    sp.dist.assign(static_cast<size_t>(n), kInfDist);
    sp.parent_edge.assign(static_cast<size_t>(n), std::nullopt);
    for (i64 v = 0; v < n; ++v) {
      if (dist_kind[v] == NWSP_DIST_FINITE) sp.dist[static_cast<size_t>(v)] = dist_value[v];
      if (parent[v] >= 0) sp.parent_edge[static_cast<size_t>(v)] = parent[v];
    }
    *ok = verify_sp_tree(g->g, source, sp) ? 1 : 0;
    return int(NWSP_OK);
  });
}

int nwsp_verify_cycle(const nwsp_graph* g, const int64_t* edges, int64_t len, int* ok) {
  return guarded([&] {
    if (!g || !edges || len < 1 || !ok) return fail(NWSP_EINVAL, "bad arguments");
    Cycle c;
    c.edges.assign(edges, edges + len);
    c.length = len;
    *ok = verify_negative_cycle(g->g, c) ? 1 : 0;
    return int(NWSP_OK);
  });
}

int nwsp_verify_distances(const nwsp_graph* g, int64_t source, const int64_t* dist_value,
                          const int* dist_kind, int* ok) {
  return guarded([&] {
    if (!g || !dist_value || !dist_kind || !ok) return fail(NWSP_EINVAL, "bad arguments");
    if (source < 0 || source >= g->g.num_vertices())
      return fail(NWSP_EINVAL, "bad source vertex");
    auto bf = oracle::bellman_ford(g->g, source);
    bool all = true;
    for (i64 v = 0; v < g->g.num_vertices() && all; ++v) {
      switch (bf.dist.kind[static_cast<size_t>(v)]) {
        case DistKind::Finite:
          all = dist_kind[v] == NWSP_DIST_FINITE &&
                dist_value[v] == bf.dist.value[static_cast<size_t>(v)];
          break;
        case DistKind::PosInf:
          all = dist_kind[v] == NWSP_DIST_POS_INF;
          break;
        case DistKind::NegInf:
          all = dist_kind[v] == NWSP_DIST_NEG_INF;
          break;
      }
    }
    *ok = all ? 1 : 0;
    return int(NWSP_OK);
  });
}

int nwsp_verify_ldd(const nwsp_graph* g, const int64_t* cut_edges, int64_t len,
                    int64_t diameter_bound, int* ok) {
  return guarded([&] {
    if (!g || (len > 0 && !cut_edges) || !ok) return fail(NWSP_EINVAL, "bad arguments");
    EdgeSet cut(g->g.num_edges());
    for (int64_t i = 0; i < len; ++i) {
      if (cut_edges[i] < 0 || cut_edges[i] >= g->g.num_edges())
        return fail(NWSP_EINVAL, "cut edge id out of range");
      cut.insert(cut_edges[i]);
    }
    std::vector<Edge> kept;
    for (i64 e = 0; e < g->g.num_edges(); ++e)
      if (!cut.contains(e)) kept.push_back(g->g.edge(e));
    Graph rem = Graph::from_edges(g->g.num_vertices(), std::move(kept));
    SccDecomposition comps = scc(rem);
    std::vector<std::vector<i64>> comp_vertices(static_cast<size_t>(comps.comp_count));
    for (i64 v = 0; v < g->g.num_vertices(); ++v)
      comp_vertices[static_cast<size_t>(comps.comp_id[static_cast<size_t>(v)])].push_back(v);
    bool all_ok = true;
    for (const auto& verts : comp_vertices)
      if (verts.size() > 1) all_ok = all_ok && exact_diameter(rem, verts) <= diameter_bound;
    *ok = all_ok ? 1 : 0;
    return int(NWSP_OK);
  });
}

}  // extern "C"
