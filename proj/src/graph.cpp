#include "nwsp/graph.hpp"

#include <algorithm>
#include <string>
#include <tuple>

#include "nwsp/errors.hpp"

namespace nwsp {

std::string to_string(i128 v) {
  if (v == 0) return "0";
  bool neg = v < 0;
  // Avoid negating INT128_MIN by peeling digits off the negative value.
  std::string digits;
  while (v != 0) {
    int d = static_cast<int>(v % 10);
    v /= 10;
    digits.push_back(static_cast<char>('0' + (d < 0 ? -d : d)));
  }
  if (neg) digits.push_back('-');
  std::reverse(digits.begin(), digits.end());
  return digits;
}

Graph Graph::from_edges(i64 n, std::vector<Edge> edges) {
  Graph g;
  g.n_ = n;
  g.edges_ = std::move(edges);
  const size_t m = g.edges_.size();

  g.min_weight_ = 0;
  g.max_weight_ = 0;
  for (size_t e = 0; e < m; ++e) {
    const Edge& ed = g.edges_[e];
    if (ed.src < 0 || ed.src >= n || ed.dst < 0 || ed.dst >= n)
      throw InvalidInput("edge endpoint out of range");
    if (e == 0 || ed.weight < g.min_weight_) g.min_weight_ = ed.weight;
    if (e == 0 || ed.weight > g.max_weight_) g.max_weight_ = ed.weight;
  }
  if (m == 0) {
    g.min_weight_ = 0;
    g.max_weight_ = 0;
  }

  auto build_csr = [&](bool out, std::vector<i64>& off, std::vector<i64>& ids) {
    off.assign(static_cast<size_t>(n) + 1, 0);
    for (const Edge& ed : g.edges_) ++off[static_cast<size_t>(out ? ed.src : ed.dst) + 1];
    for (size_t v = 0; v < static_cast<size_t>(n); ++v) off[v + 1] += off[v];
    ids.resize(m);
    std::vector<i64> cursor(off.begin(), off.end() - 1);
    for (size_t e = 0; e < m; ++e) {
      i64 v = out ? g.edges_[e].src : g.edges_[e].dst;
      ids[static_cast<size_t>(cursor[static_cast<size_t>(v)]++)] = static_cast<i64>(e);
    }
  };
  build_csr(true, g.csr_out_off_, g.csr_out_edges_);
  build_csr(false, g.csr_in_off_, g.csr_in_edges_);
  return g;
}

Graph build_graph(i64 n, const std::vector<std::tuple<i64, i64, i64>>& edges) {
  std::vector<Edge> es;
  es.reserve(edges.size());
  for (const auto& [u, v, w] : edges) es.push_back({u, v, static_cast<i128>(w)});
  return Graph::from_edges(n, std::move(es));
}

Graph reweight(const Graph& g, const Potential& phi) {
  if (static_cast<i64>(phi.size()) != g.num_vertices())
    throw InvalidInput("potential length does not match vertex count");
  std::vector<Edge> es = g.edges();
  for (Edge& e : es)
    e.weight = checked_add(checked_add(e.weight, phi[static_cast<size_t>(e.src)]),
                           -phi[static_cast<size_t>(e.dst)]);
  return Graph::from_edges(g.num_vertices(), std::move(es));
}

Graph shift_weights(const Graph& g, i128 delta) {
  std::vector<Edge> es = g.edges();
  for (Edge& e : es) e.weight = checked_add(e.weight, delta);
  return Graph::from_edges(g.num_vertices(), std::move(es));
}

Graph clamp_nonnegative(const Graph& g) {
  std::vector<Edge> es = g.edges();
  for (Edge& e : es)
    if (e.weight < 0) e.weight = 0;
  return Graph::from_edges(g.num_vertices(), std::move(es));
}

Graph reverse(const Graph& g) {
  std::vector<Edge> es = g.edges();
  for (Edge& e : es) std::swap(e.src, e.dst);
  return Graph::from_edges(g.num_vertices(), std::move(es));
}

InducedGraph induced_with_source(const Graph& g, const std::vector<i64>& members, i64 s) {
  InducedGraph out;
  std::vector<i64> new_id(static_cast<size_t>(g.num_vertices()), -1);
  for (i64 v : members) {
    if (new_id[static_cast<size_t>(v)] == -1) {
      new_id[static_cast<size_t>(v)] = static_cast<i64>(out.orig_vertex.size());
      out.orig_vertex.push_back(v);
    }
  }
  if (new_id[static_cast<size_t>(s)] == -1) {
    new_id[static_cast<size_t>(s)] = static_cast<i64>(out.orig_vertex.size());
    out.orig_vertex.push_back(s);
  }
  out.source = new_id[static_cast<size_t>(s)];

  std::vector<Edge> es;
  for (i64 v : out.orig_vertex) {
    for (i64 e : g.out_edges(v)) {
      const Edge& ed = g.edge(e);
      i64 nd = new_id[static_cast<size_t>(ed.dst)];
      if (nd != -1) {
        es.push_back({new_id[static_cast<size_t>(ed.src)], nd, ed.weight});
        out.orig_edge.push_back(e);
      }
    }
  }
  out.graph = Graph::from_edges(static_cast<i64>(out.orig_vertex.size()), std::move(es));
  return out;
}

ContractedGraph contract(const Graph& g, const std::vector<i64>& members) {
  if (members.empty()) throw InvalidInput("contract: empty vertex set");
  ContractedGraph out;
  std::vector<bool> in_c(static_cast<size_t>(g.num_vertices()), false);
  for (i64 v : members) in_c[static_cast<size_t>(v)] = true;

  out.vertex_map.assign(static_cast<size_t>(g.num_vertices()), -1);
  i64 next = 0;
  for (i64 v = 0; v < g.num_vertices(); ++v)
    if (!in_c[static_cast<size_t>(v)]) out.vertex_map[static_cast<size_t>(v)] = next++;
  out.super_vertex = next;
  for (i64 v = 0; v < g.num_vertices(); ++v)
    if (in_c[static_cast<size_t>(v)]) out.vertex_map[static_cast<size_t>(v)] = out.super_vertex;

  std::vector<Edge> es;
  for (i64 e = 0; e < g.num_edges(); ++e) {
    const Edge& ed = g.edge(e);
    i64 u = out.vertex_map[static_cast<size_t>(ed.src)];
    i64 v = out.vertex_map[static_cast<size_t>(ed.dst)];
    // Edges internal to C vanish, as do the self-loops they would become.
    if (u == out.super_vertex && v == out.super_vertex) continue;
    es.push_back({u, v, ed.weight});
    out.orig_edge.push_back(e);
  }
  out.graph = Graph::from_edges(next + 1, std::move(es));
  return out;
}

// Iterative Tarjan. Components are numbered in completion order, which is a
// reverse topological order of the condensation; topo_rank flips it so that
// every cross edge increases in rank.
SccDecomposition scc(const Graph& g) {
  const i64 n = g.num_vertices();
  SccDecomposition out;
  out.comp_id.assign(static_cast<size_t>(n), -1);

  std::vector<i64> index(static_cast<size_t>(n), -1);
  std::vector<i64> lowlink(static_cast<size_t>(n), 0);
  std::vector<bool> on_stack(static_cast<size_t>(n), false);
  std::vector<i64> stack;
  i64 next_index = 0;

  struct Frame {
    i64 v;
    size_t edge_pos;
  };
  std::vector<Frame> frames;

  for (i64 root = 0; root < n; ++root) {
    if (index[static_cast<size_t>(root)] != -1) continue;
    frames.push_back({root, 0});
    index[static_cast<size_t>(root)] = lowlink[static_cast<size_t>(root)] = next_index++;
    stack.push_back(root);
    on_stack[static_cast<size_t>(root)] = true;

    while (!frames.empty()) {
      Frame& f = frames.back();
      auto out_edges = g.out_edges(f.v);
      if (f.edge_pos < out_edges.size()) {
        i64 e = out_edges[f.edge_pos++];
        i64 w = g.edge(e).dst;
        if (index[static_cast<size_t>(w)] == -1) {
          index[static_cast<size_t>(w)] = lowlink[static_cast<size_t>(w)] = next_index++;
          stack.push_back(w);
          on_stack[static_cast<size_t>(w)] = true;
          frames.push_back({w, 0});
        } else if (on_stack[static_cast<size_t>(w)]) {
          lowlink[static_cast<size_t>(f.v)] =
              std::min(lowlink[static_cast<size_t>(f.v)], index[static_cast<size_t>(w)]);
        }
      } else {
        i64 v = f.v;
        frames.pop_back();
        if (!frames.empty()) {
          i64 parent = frames.back().v;
          lowlink[static_cast<size_t>(parent)] =
              std::min(lowlink[static_cast<size_t>(parent)], lowlink[static_cast<size_t>(v)]);
        }
        if (lowlink[static_cast<size_t>(v)] == index[static_cast<size_t>(v)]) {
          i64 comp = out.comp_count++;
          for (;;) {
            i64 w = stack.back();
            stack.pop_back();
            on_stack[static_cast<size_t>(w)] = false;
            out.comp_id[static_cast<size_t>(w)] = comp;
            if (w == v) break;
          }
        }
      }
    }
  }

  out.topo_rank.resize(static_cast<size_t>(out.comp_count));
  for (i64 c = 0; c < out.comp_count; ++c)
    out.topo_rank[static_cast<size_t>(c)] = out.comp_count - 1 - c;
  return out;
}

Cycle make_cycle(const Graph& g, std::vector<i64> edge_ids) {
  if (edge_ids.empty()) throw InvalidInput("cycle must contain at least one edge");
  Cycle c;
  c.length = static_cast<i64>(edge_ids.size());
  for (size_t i = 0; i < edge_ids.size(); ++i) {
    const Edge& cur = g.edge(edge_ids[i]);
    const Edge& nxt = g.edge(edge_ids[(i + 1) % edge_ids.size()]);
    if (cur.dst != nxt.src) throw InvalidInput("cycle edges are not head-to-tail");
    c.weight = checked_add(c.weight, cur.weight);
  }
  c.edges = std::move(edge_ids);
  return c;
}

bool verify_negative_cycle(const Graph& g, const Cycle& c) {
  if (c.edges.empty()) return false;
  i128 total = 0;
  for (size_t i = 0; i < c.edges.size(); ++i) {
    i64 e = c.edges[i];
    if (e < 0 || e >= g.num_edges()) return false;
    const Edge& cur = g.edge(e);
    const Edge& nxt = g.edge(c.edges[(i + 1) % c.edges.size()]);
    if (cur.dst != nxt.src) return false;
    total = checked_add(total, cur.weight);
  }
  return total < 0;
}

bool verify_sp_tree(const Graph& g, i64 s, const SpResult& result) {
  const i64 n = g.num_vertices();
  if (s < 0 || s >= n) return false;
  if (static_cast<i64>(result.dist.size()) != n ||
      static_cast<i64>(result.parent_edge.size()) != n)
    return false;
  if (result.dist[static_cast<size_t>(s)] != 0) return false;
  if (result.parent_edge[static_cast<size_t>(s)].has_value()) return false;

  // Reachability, ignoring weights.
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

  for (i64 v = 0; v < n; ++v) {
    bool finite = !is_inf(result.dist[static_cast<size_t>(v)]);
    if (finite != reach[static_cast<size_t>(v)]) return false;
    if (!finite && result.parent_edge[static_cast<size_t>(v)].has_value()) return false;
    if (finite && v != s && !result.parent_edge[static_cast<size_t>(v)].has_value()) return false;
  }

  // Every edge relaxed.
  for (i64 e = 0; e < g.num_edges(); ++e) {
    const Edge& ed = g.edge(e);
    i128 du = result.dist[static_cast<size_t>(ed.src)];
    if (is_inf(du)) continue;
    if (result.dist[static_cast<size_t>(ed.dst)] > checked_add(du, ed.weight)) return false;
  }

  // Tree edges tight, and parent pointers reach the source acyclically.
  for (i64 v = 0; v < n; ++v) {
    const auto& pe = result.parent_edge[static_cast<size_t>(v)];
    if (!pe) continue;
    if (*pe < 0 || *pe >= g.num_edges()) return false;
    const Edge& ed = g.edge(*pe);
    if (ed.dst != v) return false;
    i128 du = result.dist[static_cast<size_t>(ed.src)];
    if (is_inf(du)) return false;
    if (result.dist[static_cast<size_t>(v)] != checked_add(du, ed.weight)) return false;
  }
  for (i64 v = 0; v < n; ++v) {
    if (is_inf(result.dist[static_cast<size_t>(v)])) continue;
    i64 cur = v;
    i64 steps = 0;
    while (cur != s) {
      const auto& pe = result.parent_edge[static_cast<size_t>(cur)];
      if (!pe) return false;
      cur = g.edge(*pe).src;
      if (++steps > n) return false;
    }
  }
  return true;
}

}  // namespace nwsp
