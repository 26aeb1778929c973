#include <doctest.h>

#include "nwsp/errors.hpp"
#include "nwsp/gen.hpp"
#include "nwsp/ldd.hpp"
#include "nwsp/oracle.hpp"
#include "test_helpers.hpp"

using namespace nwsp;

namespace {

std::vector<std::vector<i64>> components_without(const Graph& g, const EdgeSet& cut) {
  std::vector<Edge> kept;
  for (i64 e = 0; e < g.num_edges(); ++e)
    if (!cut.contains(e)) kept.push_back(g.edge(e));
  Graph rem = Graph::from_edges(g.num_vertices(), std::move(kept));
  SccDecomposition comps = scc(rem);
  std::vector<std::vector<i64>> out(static_cast<size_t>(comps.comp_count));
  for (i64 v = 0; v < g.num_vertices(); ++v)
    out[static_cast<size_t>(comps.comp_id[static_cast<size_t>(v)])].push_back(v);
  return out;
}

Graph remaining(const Graph& g, const EdgeSet& cut) {
  std::vector<Edge> kept;
  for (i64 e = 0; e < g.num_edges(); ++e)
    if (!cut.contains(e)) kept.push_back(g.edge(e));
  return Graph::from_edges(g.num_vertices(), std::move(kept));
}

}  // namespace

TEST_CASE("diameter_2approx") {
  SUBCASE("singleton") {
    Graph g = build_graph(1, {});
    CHECK(diameter_2approx(g, {0}) == 0);
  }
  SUBCASE("directed triangle") {
    Graph g = build_graph(3, {{0, 1, 1}, {1, 2, 1}, {2, 0, 1}});
    CHECK(diameter_2approx(g, {0, 1, 2}) == 2);
    CHECK(exact_diameter(g, {0, 1, 2}) == 2);
  }
  SUBCASE("not strongly connected") {
    Graph g = build_graph(2, {{0, 1, 1}});
    CHECK_THROWS_AS(diameter_2approx(g, {0, 1}), NotStronglyConnected);
  }
  SUBCASE("sandwich bound on random components") {
    Rng rng(121);
    int checked = 0;
    for (int it = 0; it < 60; ++it) {
      Rng gen = rng.split(static_cast<u64>(it));
      Graph g = testing::random_graph(gen, 12, 40, 0, 6);
      SccDecomposition comps = scc(g);
      std::vector<std::vector<i64>> by_comp(static_cast<size_t>(comps.comp_count));
      for (i64 v = 0; v < 12; ++v)
        by_comp[static_cast<size_t>(comps.comp_id[static_cast<size_t>(v)])].push_back(v);
      for (const auto& verts : by_comp) {
        if (verts.size() < 2) continue;
        i128 approx = diameter_2approx(g, verts);
        i128 exact = exact_diameter(g, verts);
        CHECK(approx <= exact);
        CHECK(exact <= 2 * approx);
        ++checked;
      }
    }
    CHECK(checked > 20);
  }
}

TEST_CASE("strong_ldd_once") {
  SUBCASE("small graphs return all edges") {
    Rng rng(122);
    Graph g = testing::random_graph(rng, 50, 120, 0, 4);
    auto cut = strong_ldd_once(g, 10, rng);
    REQUIRE(cut.has_value());
    CHECK(cut->count() == g.num_edges());
  }
  SUBCASE("rejects negative weights") {
    Graph g = build_graph(2, {{0, 1, -1}});
    Rng rng(123);
    CHECK_THROWS_AS(strong_ldd_once(g, 5, rng), NegativeWeight);
  }
  SUBCASE("huge bound on a unit cycle cuts nothing") {
    // With the carve radius above n every vertex is heavy, the whole cycle
    // collapses, and the base case sees an edgeless single vertex.
    const i64 n = 200;
    std::vector<std::tuple<i64, i64, i64>> edges;
    for (i64 v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n, 1);
    Graph g = build_graph(n, edges);
    Rng rng(124);
    auto cut = strong_ldd_once(g, 100000, rng);
    REQUIRE(cut.has_value());
    CHECK(cut->count() == 0);
  }
}

TEST_CASE("strong_ldd certifies its diameter bound") {
  SUBCASE("edgeless graph") {
    Graph g = build_graph(40, {});
    Rng rng(125);
    LddResult r = strong_ldd(g, 5, rng);
    CHECK(r.cut.count() == 0);
  }
  SUBCASE("two clusters joined by a path") {
    // two unit cycles of length 60 joined by a long directed path; a small
    // bound must cut path edges
    std::vector<std::tuple<i64, i64, i64>> edges;
    for (i64 v = 0; v < 60; ++v) edges.emplace_back(v, (v + 1) % 60, 1);
    for (i64 v = 0; v < 60; ++v) edges.emplace_back(60 + v, 60 + (v + 1) % 60, 1);
    for (i64 i = 0; i < 10; ++i) edges.emplace_back(120 + i, 121 + i, 1);
    edges.emplace_back(0, 120, 1);
    edges.emplace_back(130, 60, 1);
    Graph g = build_graph(131, edges);
    Rng rng(126);
    LddResult r = strong_ldd(g, 70, rng);
    for (const auto& verts : components_without(g, r.cut)) {
      if (verts.size() < 2) continue;
      CHECK(exact_diameter(remaining(g, r.cut), verts) <= 70);
    }
  }
  SUBCASE("random graphs at several bounds") {
    Rng rng(127);
    for (int it = 0; it < 6; ++it) {
      Rng gen = rng.split(static_cast<u64>(it));
      Graph g = testing::random_graph(gen, 150, 450, 0, 4);
      for (i128 d : {i128(8), i128(40), i128(150)}) {
        Rng solve = rng.split(1000 + static_cast<u64>(it) * 4 + static_cast<u64>(to_i64(d)));
        LddResult r = strong_ldd(g, d, solve);
        Graph rem = remaining(g, r.cut);
        for (const auto& verts : components_without(g, r.cut)) {
          if (verts.size() < 2) continue;
          CHECK(exact_diameter(rem, verts) <= d);
        }
      }
    }
  }
}

TEST_CASE("strong_ldd fail rate is tiny") {
  // the once-variant fails only when a sampled radius overshoots
  Rng rng(128);
  GenParams p;
  p.kind = "grid";
  p.n = 256;
  p.w_max = 1;
  Graph g = generate_graph(p, 4242);
  int fails = 0;
  const int runs = 300;
  for (int it = 0; it < runs; ++it) {
    Rng solve = rng.split(static_cast<u64>(it));
    if (!strong_ldd_once(g, 64, solve)) ++fails;
  }
  CHECK(fails * 100 < runs);  // < 1%
}
