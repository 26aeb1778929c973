#pragma once

#include <vector>

#include "nwsp/dijkstra.hpp"
#include "nwsp/graph.hpp"
#include "nwsp/heap.hpp"
#include "nwsp/int128.hpp"

namespace nwsp::detail {

// Truncated Dijkstra with an optional alive mask and lazily reset state, so a
// sequence of carves costs time proportional to the vertices it touches
// rather than to the whole graph. Can walk the out- or in-adjacency of the
// same graph (sharing edge ids) and clamp negative weights to zero on the
// fly, which saves materializing reversed/clamped copies. Optionally records
// the tight parent edge of every settled vertex.
class BallSweep {
 public:
  enum class Dir { Out, In };

  explicit BallSweep(i64 n)
      : dist_(static_cast<size_t>(n), kInfDist),
        parent_(static_cast<size_t>(n), -1),
        queue_(n) {}

  struct Options {
    Dir dir = Dir::Out;
    bool clamp_negative = false;
    i64 count_cap = -1;  // stop early once more members than this are found
    const std::vector<bool>* alive = nullptr;
    Budget* budget = nullptr;
    bool track_parents = false;
  };

  // Collects vertices within `radius` of `center`; returns false if the
  // count cap fired.
  bool run(const Graph& g, i64 center, i128 radius, const Options& opt) {
    members_.clear();
    touched_.clear();
    dist_[static_cast<size_t>(center)] = 0;
    parent_[static_cast<size_t>(center)] = -1;
    touched_.push_back(center);
    queue_.insert(0, center);
    bool complete = true;
    while (!queue_.empty()) {
      i64 u = queue_.find_min();
      if (dist_[static_cast<size_t>(u)] > radius) break;
      queue_.delete_min();
      if (opt.budget) opt.budget->take();
      members_.push_back(u);
      if (opt.count_cap >= 0 && static_cast<i64>(members_.size()) > opt.count_cap) {
        complete = false;
        break;
      }
      auto edges = opt.dir == Dir::Out ? g.out_edges(u) : g.in_edges(u);
      for (i64 e : edges) {
        const Edge& ed = g.edge(e);
        i64 to = opt.dir == Dir::Out ? ed.dst : ed.src;
        if (opt.alive && !(*opt.alive)[static_cast<size_t>(to)]) continue;
        if (opt.budget) opt.budget->take();
        i128 w = ed.weight;
        if (opt.clamp_negative && w < 0) w = 0;
        i128 cand = dist_[static_cast<size_t>(u)] + w;
        if (cand <= radius && cand < dist_[static_cast<size_t>(to)]) {
          if (is_inf(dist_[static_cast<size_t>(to)])) touched_.push_back(to);
          dist_[static_cast<size_t>(to)] = cand;
          if (opt.track_parents) parent_[static_cast<size_t>(to)] = e;
          queue_.insert_or_decrease(cand, to);
        }
      }
    }
    return complete;
  }

  void reset() {
    for (i64 v : touched_) {
      dist_[static_cast<size_t>(v)] = kInfDist;
      parent_[static_cast<size_t>(v)] = -1;
    }
    queue_.drain(touched_);
    touched_.clear();
    members_.clear();
  }

  const std::vector<i64>& members() const { return members_; }
  i128 dist_of(i64 v) const { return dist_[static_cast<size_t>(v)]; }
  i64 parent_of(i64 v) const { return parent_[static_cast<size_t>(v)]; }
  bool in_ball(i64 v, i128 radius) const { return dist_[static_cast<size_t>(v)] <= radius; }

 private:
  std::vector<i128> dist_;
  std::vector<i64> parent_;
  std::vector<i64> touched_;
  std::vector<i64> members_;
  MinQueue queue_;
};

}  // namespace nwsp::detail
