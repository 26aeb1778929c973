#pragma once

#include <optional>
#include <span>
#include <vector>

#include "nwsp/int128.hpp"

namespace nwsp {

struct Edge {
  i64 src;
  i64 dst;
  i128 weight;
};

// Immutable directed multigraph with integer weights and CSR adjacency in
// both directions. Self-loops and parallel edges are allowed everywhere
// (contraction produces parallel edges, so the whole stack must cope).
// Safe to share across threads once built.
class Graph {
 public:
  Graph() = default;
  static Graph from_edges(i64 n, std::vector<Edge> edges);

  i64 num_vertices() const { return n_; }
  i64 num_edges() const { return static_cast<i64>(edges_.size()); }
  const Edge& edge(i64 e) const { return edges_[static_cast<size_t>(e)]; }
  const std::vector<Edge>& edges() const { return edges_; }

  // Smallest edge weight; 0 for an edgeless graph.
  i128 min_weight() const { return min_weight_; }
  i128 max_weight() const { return max_weight_; }

  // Out-edges of u as edge ids.
  std::span<const i64> out_edges(i64 u) const {
    return {csr_out_edges_.data() + csr_out_off_[static_cast<size_t>(u)],
            csr_out_edges_.data() + csr_out_off_[static_cast<size_t>(u) + 1]};
  }
  // In-edges of u as edge ids.
  std::span<const i64> in_edges(i64 u) const {
    return {csr_in_edges_.data() + csr_in_off_[static_cast<size_t>(u)],
            csr_in_edges_.data() + csr_in_off_[static_cast<size_t>(u) + 1]};
  }

  i64 out_degree(i64 u) const {
    return csr_out_off_[static_cast<size_t>(u) + 1] - csr_out_off_[static_cast<size_t>(u)];
  }

 private:
  i64 n_ = 0;
  std::vector<Edge> edges_;
  std::vector<i64> csr_out_off_, csr_out_edges_;
  std::vector<i64> csr_in_off_, csr_in_edges_;
  i128 min_weight_ = 0;
  i128 max_weight_ = 0;
};

// Vertex labeling used for reweighting: w_phi(u,v) = w(u,v) + phi(u) - phi(v).
// Preserves shortest paths and all cycle weights.
using Potential = std::vector<i128>;

// Ordered edge list forming a closed walk, with cached totals.
struct Cycle {
  std::vector<i64> edges;
  i128 weight = 0;
  i64 length = 0;
};

struct SccDecomposition {
  std::vector<i64> comp_id;    // vertex -> component index
  i64 comp_count = 0;
  std::vector<i64> topo_rank;  // component -> rank; cross edges go up in rank
};

// Set of edge ids as a bitmap.
class EdgeSet {
 public:
  EdgeSet() = default;
  explicit EdgeSet(i64 num_edges) : bits_(static_cast<size_t>(num_edges), false) {}

  void insert(i64 e) {
    if (!bits_[static_cast<size_t>(e)]) {
      bits_[static_cast<size_t>(e)] = true;
      ++count_;
    }
  }
  bool contains(i64 e) const { return bits_[static_cast<size_t>(e)]; }
  i64 count() const { return count_; }
  i64 capacity() const { return static_cast<i64>(bits_.size()); }

  std::vector<i64> to_sorted_vector() const {
    std::vector<i64> out;
    out.reserve(static_cast<size_t>(count_));
    for (size_t e = 0; e < bits_.size(); ++e)
      if (bits_[e]) out.push_back(static_cast<i64>(e));
    return out;
  }

 private:
  std::vector<bool> bits_;
  i64 count_ = 0;
};

// Shortest path tree: distances plus the tight parent edge of every reached
// non-source vertex.
struct SpResult {
  std::vector<i128> dist;                       // kInfDist when unreachable
  std::vector<std::optional<i64>> parent_edge;  // none for source/unreachable
};

// Subgraph induced on C (plus a source vertex), with id maps back to the
// original graph.
struct InducedGraph {
  Graph graph;
  std::vector<i64> orig_vertex;  // new id -> old id
  std::vector<i64> orig_edge;    // new edge id -> old edge id
  i64 source = 0;                // new id of the requested source
};

struct ContractedGraph {
  Graph graph;
  std::vector<i64> vertex_map;   // old id -> new id (members of C map to the super-vertex)
  std::vector<i64> orig_edge;    // new edge id -> old edge id
  i64 super_vertex = 0;
};

Graph build_graph(i64 n, const std::vector<std::tuple<i64, i64, i64>>& edges);

Graph reweight(const Graph& g, const Potential& phi);
Graph shift_weights(const Graph& g, i128 delta);
Graph clamp_nonnegative(const Graph& g);
Graph reverse(const Graph& g);  // preserves edge ids

InducedGraph induced_with_source(const Graph& g, const std::vector<i64>& members, i64 s);
ContractedGraph contract(const Graph& g, const std::vector<i64>& members);

SccDecomposition scc(const Graph& g);

bool verify_negative_cycle(const Graph& g, const Cycle& c);
bool verify_sp_tree(const Graph& g, i64 s, const SpResult& result);

// Recomputes the weight and length fields from the graph; throws InvalidInput
// if the edge list is not a closed walk.
Cycle make_cycle(const Graph& g, std::vector<i64> edge_ids);

}  // namespace nwsp
