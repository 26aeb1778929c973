#include "nwsp/decompose.hpp"

#include <algorithm>
#include <cmath>

#include "nwsp/detail/ball_sweep.hpp"
#include "nwsp/errors.hpp"

namespace nwsp {

using detail::BallSweep;

namespace {

i64 sample_count(i64 n, double eps, double coeff) {
  double k = std::ceil(coeff / (eps * eps) * ln_of(n));
  return std::max<i64>(1, static_cast<i64>(k));
}

BallSweep::Dir sweep_dir(BallDir dir) {
  return dir == BallDir::Out ? BallSweep::Dir::Out : BallSweep::Dir::In;
}

BallSweep::Dir opposite(BallDir dir) {
  return dir == BallDir::Out ? BallSweep::Dir::In : BallSweep::Dir::Out;
}

std::vector<double> estimate_dir(const Graph& g, BallDir dir, i128 r, double eps, Rng& rng,
                                 double sample_coeff) {
  const i64 n = g.num_vertices();
  const i64 k = sample_count(n, eps, sample_coeff);

  // v lies in B_out(u, r) exactly when u lies in B_in(v, r), so balls of the
  // opposite orientation around sampled centers yield unbiased estimates for
  // every vertex at once.
  std::vector<i64> hits(static_cast<size_t>(n), 0);
  BallSweep sweep(n);
  BallSweep::Options opt;
  opt.dir = opposite(dir);
  opt.clamp_negative = true;
  for (i64 i = 0; i < k; ++i) {
    i64 center = static_cast<i64>(rng.below(static_cast<u64>(n)));
    sweep.run(g, center, r, opt);
    for (i64 v : sweep.members()) ++hits[static_cast<size_t>(v)];
    sweep.reset();
  }
  std::vector<double> est(static_cast<size_t>(n));
  for (i64 v = 0; v < n; ++v)
    est[static_cast<size_t>(v)] = static_cast<double>(n) / static_cast<double>(k) *
                                  static_cast<double>(hits[static_cast<size_t>(v)]);
  return est;
}

}  // namespace

std::vector<double> estimate_ball_sizes(const Graph& g, i128 r, double eps, Rng& rng,
                                        double sample_coeff) {
  if (g.min_weight() < 0)
    throw NegativeWeight("ball estimation requires nonnegative weights");
  return estimate_dir(g, BallDir::Out, r, eps, rng, sample_coeff);
}

std::vector<bool> classify_light(const Graph& g, BallDir dir, i128 r, double cutoff,
                                 double eps, Rng& rng, const Config& cfg,
                                 bool force_sampling) {
  const i64 n = g.num_vertices();
  std::vector<bool> light(static_cast<size_t>(n), false);
  const i64 k = sample_count(n, eps, cfg.sample_coeff);

  if (!force_sampling && n <= k && n <= cfg.classify_exact_max_n) {
    // Exact sizes are cheaper than sampling here and make the labels
    // error-free. The sweep stops as soon as a ball provably exceeds the
    // cutoff.
    const i64 cap = static_cast<i64>(cutoff * static_cast<double>(n));
    BallSweep sweep(n);
    BallSweep::Options opt;
    opt.dir = sweep_dir(dir);
    opt.clamp_negative = true;
    opt.count_cap = cap;
    for (i64 v = 0; v < n; ++v) {
      bool complete = sweep.run(g, v, r, opt);
      light[static_cast<size_t>(v)] =
          complete && static_cast<i64>(sweep.members().size()) <= cap;
      sweep.reset();
    }
    return light;
  }

  std::vector<double> est = estimate_dir(g, dir, r, eps, rng, cfg.sample_coeff);
  for (i64 v = 0; v < n; ++v)
    light[static_cast<size_t>(v)] = est[static_cast<size_t>(v)] <= cutoff * static_cast<double>(n);
  return light;
}

EdgeSet decompose(const Graph& g, i64 kappa, Rng& rng, const Config& cfg, Budget* budget,
                  DecomposeStats* stats) {
  if (kappa < 1) throw InvalidInput("decompose requires kappa >= 1");
  const i64 n = g.num_vertices();
  EdgeSet cut(g.num_edges());
  if (n == 0) return cut;

  const i128 radius = kappa / 4;

  // Classification thresholds chosen so that light labels certify a ball of
  // at most 3n/4 and heavy labels one of more than n/2 in the clamped graph.
  Rng rng_out = rng.split(0x6f);
  Rng rng_in = rng.split(0x69);
  std::vector<bool> out_light =
      classify_light(g, BallDir::Out, radius, 5.0 / 8.0, 1.0 / 8.0, rng_out, cfg);
  std::vector<bool> in_light =
      classify_light(g, BallDir::In, radius, 5.0 / 8.0, 1.0 / 8.0, rng_in, cfg);

  const double p = std::min(1.0, cfg.carve_coeff * ln_of(n) / static_cast<double>(kappa));

  std::vector<bool> alive(static_cast<size_t>(n), true);
  BallSweep sweep(n);

  auto carve = [&](BallDir dir, const std::vector<bool>& light) {
    BallSweep::Options opt;
    opt.dir = sweep_dir(dir);
    opt.clamp_negative = true;
    opt.alive = &alive;
    opt.budget = budget;
    for (i64 v = 0; v < n; ++v) {
      if (!alive[static_cast<size_t>(v)] || !light[static_cast<size_t>(v)]) continue;
      if (budget && budget->exhausted()) return;
      i128 r = rng.geometric(p);
      if (stats) stats->max_radius_sampled = std::max<i64>(stats->max_radius_sampled, to_i64(r));
      sweep.run(g, v, r, opt);
      for (i64 u : sweep.members()) {
        auto edges = dir == BallDir::Out ? g.out_edges(u) : g.in_edges(u);
        for (i64 e : edges) {
          const Edge& ed = g.edge(e);
          i64 to = dir == BallDir::Out ? ed.dst : ed.src;
          if (!alive[static_cast<size_t>(to)]) continue;
          if (budget) budget->take();
          if (!sweep.in_ball(to, r)) cut.insert(e);
        }
      }
      for (i64 u : sweep.members()) alive[static_cast<size_t>(u)] = false;
      sweep.reset();
      if (stats) ++stats->balls_carved;
    }
  };

  // Out-balls around out-light vertices first, then in-balls around the
  // remaining in-light vertices.
  carve(BallDir::Out, out_light);
  carve(BallDir::In, in_light);
  return cut;
}

}  // namespace nwsp
