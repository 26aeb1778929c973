// Quick end-to-end exercise of the solver pipeline; superseded by the unit
// and acceptance suites but handy during bring-up.
#include <cstdio>

#include "nwsp/mcm.hpp"
#include "nwsp/negcycle.hpp"
#include "nwsp/oracle.hpp"
#include "nwsp/solver.hpp"
#include "test_helpers.hpp"

using namespace nwsp;

int main() {
  int failures = 0;
  auto check = [&](bool ok, const char* what) {
    std::printf("%s %s\n", ok ? "ok  " : "FAIL", what);
    if (!ok) ++failures;
  };

  Rng rng(42);
  int trees = 0, cycles = 0, dist_matches = 0, dist_total = 0;
  for (int it = 0; it < 40; ++it) {
    Rng gen = rng.split(static_cast<u64>(it));
    Graph g = testing::random_graph(gen, 12, 25, -4, 14);
    bool has_neg = oracle::has_negative_cycle(g);
    Rng solve_rng = rng.split(1000 + static_cast<u64>(it));
    SolveOutcome o = sssp_or_neg_cycle(g, 0, solve_rng);
    if (o.is_tree()) {
      ++trees;
      if (has_neg) check(false, "tree returned although a negative cycle exists");
      auto bf = oracle::bellman_ford(g, 0);
      for (i64 v = 0; v < g.num_vertices(); ++v) {
        ++dist_total;
        bool inf_match = (bf.dist.kind[static_cast<size_t>(v)] == DistKind::PosInf) ==
                         is_inf(o.tree().dist[static_cast<size_t>(v)]);
        bool val_match = bf.dist.kind[static_cast<size_t>(v)] != DistKind::Finite ||
                         bf.dist.value[static_cast<size_t>(v)] == o.tree().dist[static_cast<size_t>(v)];
        if (inf_match && val_match) ++dist_matches;
      }
    } else {
      ++cycles;
      if (!has_neg) check(false, "cycle returned although none exists");
      if (!verify_negative_cycle(g, o.cycle())) check(false, "cycle does not verify");
    }
  }
  std::printf("trees=%d cycles=%d dist_matches=%d/%d\n", trees, cycles, dist_matches, dist_total);
  check(dist_matches == dist_total, "tree distances match the reference");
  check(trees > 0 && cycles > 0, "both outcome kinds were exercised");

  // Threshold sanity.
  {
    Graph g = build_graph(1, {{0, 0, -7}});
    Rng r1(7), r2(8), r3(9);
    check(slow_threshold(g, r1) == 7, "slow threshold of a -7 self-loop");
    check(fast_threshold(g, r2) == 7, "fast threshold of a -7 self-loop");
    check(threshold_las_vegas(g, r3) == 7, "certified threshold of a -7 self-loop");
  }

  // Minimum cycle mean on two disjoint cycles (5/2 vs 7/3).
  {
    Graph g = build_graph(5, {{0, 1, 2}, {1, 0, 3}, {2, 3, 2}, {3, 4, 2}, {4, 2, 3}});
    Rng r(11);
    auto [cyc, mean] = min_cycle_mean(g, r);
    check(mean == (RationalMean{7, 3}), "minimum cycle mean 7/3");
    check(mean == oracle::karp_mcm(g), "karp agrees");
  }

  std::printf("%s\n", failures == 0 ? "SMOKE OK" : "SMOKE FAILED");
  return failures == 0 ? 0 : 1;
}
