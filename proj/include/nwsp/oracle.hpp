#pragma once

#include <optional>
#include <vector>

#include "nwsp/graph.hpp"

namespace nwsp {

enum class DistKind { Finite, PosInf, NegInf };

struct ExtendedDistances {
  std::vector<DistKind> kind;
  std::vector<i128> value;  // meaningful only where kind == Finite
};

struct RationalMean {
  i128 numerator = 0;    // cycle weight
  i64 denominator = 1;   // cycle length, > 0

  // Comparisons by cross-multiplication; never reduced to floating point.
  bool operator==(const RationalMean& o) const {
    return numerator * o.denominator == o.numerator * denominator;
  }
  bool operator<(const RationalMean& o) const {
    return numerator * o.denominator < o.numerator * denominator;
  }
};

// Deliberately naive reference implementations, sharing no code with the main
// algorithms. Costs are O(mn) or worse, which confines them to small inputs.
namespace oracle {

struct BellmanFordResult {
  ExtendedDistances dist;
  std::optional<Cycle> negative_cycle;  // some negative cycle reachable from s
};

// n-1 rounds of full relaxation; an n-th improving round marks negative-cycle
// involvement and -inf is propagated by reachability.
BellmanFordResult bellman_ford(const Graph& g, i64 s);

// True iff the graph contains a negative cycle anywhere (super-source sweep).
bool has_negative_cycle(const Graph& g);

// Karp's minimum mean cycle, exact rational, minimum over SCCs.
RationalMean karp_mcm(const Graph& g);

// Smallest integer M >= 0 such that shifting all weights by M removes every
// negative cycle. Cross-checked internally against a Bellman-Ford scan.
i128 brute_threshold(const Graph& g);

struct DistTable {
  // dist[i][v]: min weight of an s-v path with fewer than i negative edges;
  // dist_prime[i][v] additionally allows one trailing negative edge.
  std::vector<std::vector<i128>> dist;
  std::vector<std::vector<i128>> dist_prime;
  std::vector<i64> eta;  // min negative edges over shortest s-v paths
};

// Layered DP over (vertex, negative edges used); requires that no negative
// cycle is reachable from s.
DistTable dist_i_table(const Graph& g, i64 s, i64 i_max);

// Max number of weight-(-1) edges over simple nonpositive-weight paths that
// start at s. Exponential; refuses graphs with more than 14 vertices.
i64 brute_kappa(const Graph& g, i64 s);

// Decision variant without the size cap: does every simple nonpositive path
// from s carry at most `bound` negative edges? Abandons the search (nullopt)
// after node_budget DFS steps.
std::optional<bool> kappa_at_most(const Graph& g, i64 s, i64 bound, i64 node_budget);

}  // namespace oracle
}  // namespace nwsp
