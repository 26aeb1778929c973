#include "nwsp/mcm.hpp"

#include <cassert>

#include "nwsp/errors.hpp"
#include "nwsp/negcycle.hpp"

namespace nwsp {

std::pair<Cycle, RationalMean> min_cycle_mean(const Graph& g, Rng& rng, const Config& cfg,
                                              SolveStats* stats) {
  const i64 n = g.num_vertices();

  // Cycle check up front: some component with an internal edge (which
  // includes self-loops) is required before any rescaling makes sense.
  SccDecomposition comps = scc(g);
  bool cyclic = false;
  for (i64 e = 0; e < g.num_edges() && !cyclic; ++e) {
    const Edge& ed = g.edge(e);
    cyclic = comps.comp_id[static_cast<size_t>(ed.src)] ==
             comps.comp_id[static_cast<size_t>(ed.dst)];
  }
  if (!cyclic) throw NoCycle("minimum cycle mean undefined on acyclic graphs");

  // w_h = n^2*w - n^3*L pushes all cycle means below zero while separating
  // distinct means by more than 1, so the integer threshold pins the optimum.
  const i128 n2 = checked_mul(i128(n), n);
  const i128 shift = checked_mul(n2, checked_mul(i128(n), g.max_weight()));
  std::vector<Edge> es = g.edges();
  for (Edge& e : es) e.weight = checked_sub(checked_mul(n2, e.weight), shift);
  Graph h = Graph::from_edges(n, std::move(es));

  Rng thr_rng = rng.split(0x8000);
  i128 m_star = threshold_las_vegas(h, thr_rng, cfg, stats);

  Rng find_rng = rng.split(0x8001);
  Cycle local = find_neg_cycle(shift_weights(h, m_star - 1), find_rng, cfg, stats);

  // Edge ids survive both transforms unchanged.
  Cycle cyc = make_cycle(g, local.edges);
  assert(verify_negative_cycle(shift_weights(h, m_star - 1), local));
  return {cyc, RationalMean{cyc.weight, cyc.length}};
}

}  // namespace nwsp
