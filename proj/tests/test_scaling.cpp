#include <doctest.h>

#include "nwsp/oracle.hpp"
#include "nwsp/scaling.hpp"
#include "test_helpers.hpp"

using namespace nwsp;

TEST_CASE("build_scale_instance") {
  SUBCASE("rounding formula") {
    // single edge of weight -5: divisor 2, rounded weight ceil(-5/2)+1 = -1
    Graph g = build_graph(2, {{0, 1, -5}});
    ScaleInstance si = build_scale_instance(g);
    CHECK(si.w == 2);
    CHECK(si.instance.graph.edge(0).weight == -1);
    CHECK(si.instance.source == 2);
  }
  SUBCASE("instance is restricted whenever the input has no negative cycle") {
    Rng rng(61);
    int checked = 0;
    for (int it = 0; it < 60; ++it) {
      Rng gen = rng.split(static_cast<u64>(it));
      Graph g = testing::disguised_graph(gen, 10, 24, 5, 8);
      if (g.min_weight() >= 0) continue;
      ++checked;
      ScaleInstance si = build_scale_instance(g);
      CHECK(si.instance.validate());
    }
    CHECK(checked > 20);
  }
}

TEST_CASE("scale") {
  SUBCASE("nonnegative input: zero potential") {
    Rng rng(62);
    Graph g = testing::random_graph(rng, 6, 12, 0, 9);
    Budget b{1000000, 0};
    auto phi = scale(g, rng, b);
    REQUIRE(phi.has_value());
    for (i128 p : *phi) CHECK(p == 0);
  }
  SUBCASE("successful steps lift the minimum weight above -2W") {
    Rng rng(63);
    int succ = 0;
    for (int it = 0; it < 60; ++it) {
      Rng gen = rng.split(static_cast<u64>(it));
      Graph g = testing::disguised_graph(gen, 10, 26, 6, 10);
      if (g.min_weight() >= 0) continue;
      ScaleInstance si = build_scale_instance(g);
      Rng solve = rng.split(500 + static_cast<u64>(it));
      Budget b{4000000, 0};
      auto phi = scale(g, solve, b);
      if (!phi) continue;
      ++succ;
      Graph r = reweight(g, *phi);
      CHECK(r.min_weight() > -2 * si.w);
      // equivalent graph: distances agree with the original once unshifted
      auto bf_g = oracle::bellman_ford(g, 0);
      auto bf_r = oracle::bellman_ford(r, 0);
      for (i64 v = 0; v < 10; ++v) {
        if (bf_g.dist.kind[static_cast<size_t>(v)] != DistKind::Finite) continue;
        CHECK(bf_r.dist.value[static_cast<size_t>(v)] ==
              bf_g.dist.value[static_cast<size_t>(v)] + (*phi)[0] -
                  (*phi)[static_cast<size_t>(v)]);
      }
    }
    CHECK(succ > 15);
  }
}

TEST_CASE("test_scale") {
  SUBCASE("nonnegative input is immediate") {
    Rng rng(64);
    Graph g = testing::random_graph(rng, 6, 10, 0, 5);
    auto phi = test_scale(g, 0.01, rng);
    REQUIRE(phi.has_value());
    for (i128 p : *phi) CHECK(p == 0);
  }
  SUBCASE("postcondition holds whenever a potential is returned") {
    Rng rng(65);
    int returned = 0;
    for (int it = 0; it < 80; ++it) {
      Rng gen = rng.split(static_cast<u64>(it));
      Graph g = testing::disguised_graph(gen, 9, 22, 8, 25);
      if (g.min_weight() >= 0) continue;
      i128 w_in = -g.min_weight();
      Rng solve = rng.split(700 + static_cast<u64>(it));
      auto phi = test_scale(g, 0.05, solve);
      if (!phi) continue;  // allowed either way when negative cycles exist
      ++returned;
      CHECK(reweight(g, *phi).min_weight() >= -floor_div(3 * w_in, 4));
    }
    CHECK(returned > 10);
  }
  SUBCASE("rarely fails without negative cycles") {
    Rng rng(66);
    int tried = 0, failed = 0;
    for (int it = 0; it < 80; ++it) {
      Rng gen = rng.split(static_cast<u64>(it));
      Graph g = testing::disguised_graph(gen, 9, 20, 12, 40);
      if (g.min_weight() >= 0) continue;
      ++tried;
      Rng solve = rng.split(900 + static_cast<u64>(it));
      if (!test_scale(g, 0.01, solve)) ++failed;
    }
    CHECK(tried > 10);
    CHECK(failed == 0);
  }
}

TEST_CASE("sssp_no_negcycle") {
  SUBCASE("nonnegative graph equals dijkstra") {
    Rng rng(67);
    Graph g = testing::random_graph(rng, 10, 24, 0, 7);
    auto r = sssp_no_negcycle(g, 0, rng);
    REQUIRE(r.has_value());
    SpResult d = dijkstra(g, 0);
    CHECK(r->dist == d.dist);
  }
  SUBCASE("matches the reference on negative-cycle-free graphs") {
    Rng rng(68);
    int solved = 0;
    for (int it = 0; it < 200; ++it) {
      Rng gen = rng.split(static_cast<u64>(it));
      Graph g = testing::disguised_graph(gen, 12, 28, 5, 9);
      if (g.min_weight() >= 0) continue;
      Rng solve = rng.split(1500 + static_cast<u64>(it));
      SolveStats stats;
      auto r = sssp_no_negcycle(g, 0, solve, {}, &stats);
      REQUIRE(r.has_value());
      ++solved;
      CHECK(verify_sp_tree(g, 0, *r));
      auto bf = oracle::bellman_ford(g, 0);
      for (i64 v = 0; v < 12; ++v) {
        if (bf.dist.kind[static_cast<size_t>(v)] == DistKind::Finite)
          CHECK(r->dist[static_cast<size_t>(v)] == bf.dist.value[static_cast<size_t>(v)]);
        else
          CHECK(is_inf(r->dist[static_cast<size_t>(v)]));
      }
      // monotone minimum-weight progress across scaling iterations
      for (size_t i = 1; i < stats.min_weight_trajectory.size(); ++i)
        CHECK(stats.min_weight_trajectory[i] >= stats.min_weight_trajectory[i - 1]);
      if (!stats.min_weight_trajectory.empty())
        CHECK(stats.min_weight_trajectory.back() >= -3);
    }
    CHECK(solved > 60);
  }
  SUBCASE("negative cycle forces the cap") {
    Graph g = build_graph(2, {{0, 1, -3}, {1, 0, 1}});
    Rng rng(69);
    CHECK_FALSE(sssp_no_negcycle(g, 0, rng).has_value());
  }
}

TEST_CASE("detect_neg_cycle") {
  Rng rng(70);
  SUBCASE("nonnegative input") {
    Graph g = testing::random_graph(rng, 8, 16, 0, 5);
    CHECK(detect_neg_cycle(g, rng) == CycleVerdict::NoNegCycle);
  }
  SUBCASE("negative self-loop") {
    Graph g = build_graph(1, {{0, 0, -1}});
    CHECK(detect_neg_cycle(g, rng) == CycleVerdict::NegCycle);
  }
  SUBCASE("agreement with the reference; no false NoNegCycle") {
    int checked = 0;
    for (int it = 0; it < 400; ++it) {
      Rng gen = rng.split(static_cast<u64>(it));
      Graph g = testing::random_graph(gen, 10, 24, -4, 8);
      Rng solve = rng.split(2000 + static_cast<u64>(it));
      CycleVerdict v = detect_neg_cycle(g, solve);
      bool truth = oracle::has_negative_cycle(g);
      if (v == CycleVerdict::NoNegCycle) CHECK_FALSE(truth);  // exact direction
      if (!truth) CHECK(v == CycleVerdict::NoNegCycle);       // whp direction
      ++checked;
    }
    CHECK(checked == 400);
  }
}

TEST_CASE("clamped graph preserves shortest paths") {
  // After the full scaling loop the clamped graph must have the same set of
  // minimizing paths; checked by exhaustive path enumeration.
  Rng rng(71);
  int checked = 0;
  for (int it = 0; it < 40; ++it) {
    Rng gen = rng.split(static_cast<u64>(it));
    Graph g = testing::disguised_graph(gen, 7, 14, 4, 6);
    if (g.min_weight() >= 0) continue;
    Rng solve = rng.split(3000 + static_cast<u64>(it));
    auto r = sssp_no_negcycle(g, 0, solve);
    REQUIRE(r.has_value());
    ++checked;
    for (i64 v = 1; v < 7; ++v) {
      auto paths = testing::enumerate_simple_paths(g, 0, v);
      if (paths.empty()) {
        CHECK(is_inf(r->dist[static_cast<size_t>(v)]));
        continue;
      }
      i128 best = testing::path_weight(g, paths[0]);
      for (const auto& p : paths) best = std::min(best, testing::path_weight(g, p));
      CHECK(r->dist[static_cast<size_t>(v)] == best);
    }
  }
  CHECK(checked > 10);
}
