// Command-line front end. Parses DIMACS files, drives the solver through the
// shared-library C interface, and emits machine-readable JSON-line reports on
// stdout with a one-line human summary on stderr.
//
// Exit codes: 0 ok, 1 input error, 2 retry/budget cap exceeded,
// 3 verification failure (indicates a bug, never expected).
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "dimacs.hpp"
#include "nwsp.h"

using json = nlohmann::ordered_json;
using nwsp::cli::DimacsError;
using nwsp::cli::DimacsGraph;

namespace {

struct GraphHandle {
  nwsp_graph* g = nullptr;
  ~GraphHandle() { nwsp_graph_destroy(g); }
};

struct ResultHandle {
  nwsp_result* r = nullptr;
  ~ResultHandle() { nwsp_result_destroy(r); }
};

[[noreturn]] void die(int code, const std::string& msg) {
  std::cerr << "error: " << msg << "\n";
  std::exit(code);
}

int exit_code_for(int status) {
  switch (status) {
    case NWSP_ECAP:
      return 2;
    case NWSP_EINTERNAL:
      return 3;
    default:
      return 1;
  }
}

DimacsGraph load_dimacs(const std::string& path) {
  std::ifstream in(path);
  if (!in) die(1, "cannot open " + path);
  try {
    return nwsp::cli::parse_dimacs(in);
  } catch (const DimacsError& e) {
    die(1, path + ":" + std::to_string(e.line) + ": " + e.message);
  }
}

GraphHandle to_handle(const DimacsGraph& d) {
  GraphHandle h;
  int rc = nwsp_graph_create(d.n, static_cast<int64_t>(d.src.size()), d.src.data(), d.dst.data(),
                             d.weight.data(), &h.g);
  if (rc != NWSP_OK) die(exit_code_for(rc), nwsp_last_error());
  return h;
}

int64_t input_w(const DimacsGraph& d) {
  int64_t min_w = 0;
  for (int64_t w : d.weight) min_w = std::min(min_w, w);
  return -min_w;
}

json base_report(const std::string& command, const DimacsGraph& d, uint64_t seed) {
  json rep;
  rep["command"] = command;
  rep["seed"] = seed;
  rep["n"] = d.n;
  rep["m"] = static_cast<int64_t>(d.src.size());
  rep["W"] = input_w(d);
  return rep;
}

void finish_report(json& rep, const ResultHandle& res, double wall_ms) {
  rep["steps"] = nwsp_result_steps(res.r);
  rep["steps_tree_phase"] = nwsp_result_steps_tree_phase(res.r);
  rep["steps_cycle_phase"] = nwsp_result_steps_cycle_phase(res.r);
  rep["wall_ms"] = wall_ms;
  rep["verification"] = nwsp_result_verified(res.r) == 1 ? "passed" : "failed";
}

int emit_report(const json& rep) {
  std::cout << rep.dump() << "\n";
  bool ok = rep["verification"] == "passed";
  std::cerr << rep["command"].get<std::string>() << ": " << rep["outcome"].get<std::string>()
            << " (n=" << rep["n"] << ", m=" << rep["m"] << ", verification "
            << rep["verification"].get<std::string>() << ")\n";
  return ok ? 0 : 3;
}

json distances_payload(const ResultHandle& res, int64_t n) {
  json dist = json::array();
  for (int64_t v = 0; v < n; ++v) {
    int64_t value = 0;
    int kind = 0;
    nwsp_result_distance(res.r, v, &value, &kind);
    if (kind == NWSP_DIST_FINITE)
      dist.push_back(value);
    else
      dist.push_back(kind == NWSP_DIST_POS_INF ? "inf" : "-inf");
  }
  return dist;
}

json cycle_payload(const ResultHandle& res, const DimacsGraph& d) {
  int64_t len = 0;
  nwsp_result_cycle_len(res.r, &len);
  json edges = json::array();
  int64_t weight = 0;
  for (int64_t i = 0; i < len; ++i) {
    int64_t e = 0;
    nwsp_result_cycle_edge(res.r, i, &e);
    edges.push_back(e);
    weight += d.weight[static_cast<size_t>(e)];
  }
  json out;
  out["edges"] = edges;
  out["weight"] = weight;
  out["length"] = len;
  return out;
}

double wall_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

int cmd_sssp(const std::string& file, int64_t source, uint64_t seed, const std::string& profile,
             bool distances_mode) {
  DimacsGraph d = load_dimacs(file);
  if (source < 1 || source > d.n) die(1, "source outside 1..n");
  GraphHandle g = to_handle(d);

  auto t0 = std::chrono::steady_clock::now();
  ResultHandle res;
  int rc = distances_mode
               ? nwsp_distances(g.g, source - 1, seed, profile.c_str(), &res.r)
               : nwsp_sssp(g.g, source - 1, seed, profile.c_str(), &res.r);
  if (rc != NWSP_OK) die(exit_code_for(rc), nwsp_last_error());
  double wall = wall_since(t0);

  json rep = base_report(distances_mode ? "distances" : "sssp", d, seed);
  rep["source"] = source;
  if (nwsp_result_kind(res.r) == NWSP_RESULT_CYCLE) {
    rep["outcome"] = "negative_cycle";
    rep["cycle"] = cycle_payload(res, d);
  } else {
    rep["outcome"] = distances_mode ? "distances" : "tree";
    rep["distances"] = distances_payload(res, d.n);
    if (!distances_mode) {
      json parents = json::array();
      for (int64_t v = 0; v < d.n; ++v) {
        int64_t pe = -1;
        nwsp_result_parent_edge(res.r, v, &pe);
        parents.push_back(pe);
      }
      rep["parents"] = parents;
    }
  }
  finish_report(rep, res, wall);
  return emit_report(rep);
}

int cmd_mcm(const std::string& file, uint64_t seed, const std::string& profile) {
  DimacsGraph d = load_dimacs(file);
  GraphHandle g = to_handle(d);
  auto t0 = std::chrono::steady_clock::now();
  ResultHandle res;
  int rc = nwsp_min_cycle_mean(g.g, seed, profile.c_str(), &res.r);
  if (rc != NWSP_OK) die(exit_code_for(rc), nwsp_last_error());
  double wall = wall_since(t0);

  int64_t num = 0, den = 1;
  nwsp_result_mean(res.r, &num, &den);
  json rep = base_report("mcm", d, seed);
  rep["outcome"] = "min_cycle_mean";
  rep["mean"] = std::to_string(num) + "/" + std::to_string(den);
  rep["mean_decimal"] = static_cast<double>(num) / static_cast<double>(den);
  rep["cycle"] = cycle_payload(res, d);
  finish_report(rep, res, wall);
  return emit_report(rep);
}

int cmd_ldd(const std::string& file, int64_t diameter, uint64_t seed,
            const std::string& profile) {
  DimacsGraph d = load_dimacs(file);
  GraphHandle g = to_handle(d);
  auto t0 = std::chrono::steady_clock::now();
  ResultHandle res;
  int rc = nwsp_strong_ldd(g.g, diameter, seed, profile.c_str(), &res.r);
  if (rc != NWSP_OK) die(exit_code_for(rc), nwsp_last_error());
  double wall = wall_since(t0);

  json rep = base_report("ldd", d, seed);
  rep["outcome"] = "ldd";
  rep["diameter_bound"] = diameter;
  int64_t cut_size = 0;
  nwsp_result_cut_size(res.r, &cut_size);
  json cut = json::array();
  for (int64_t i = 0; i < cut_size; ++i) {
    int64_t e = 0;
    nwsp_result_cut_edge(res.r, i, &e);
    cut.push_back(e);
  }
  rep["cut_edges"] = cut;
  int64_t comp_count = 0;
  nwsp_result_component_count(res.r, &comp_count);
  json diams = json::array();
  for (int64_t i = 0; i < comp_count; ++i) {
    int64_t dv = 0;
    nwsp_result_component_diameter(res.r, i, &dv);
    diams.push_back(dv);
  }
  rep["component_diameters"] = diams;
  finish_report(rep, res, wall);
  return emit_report(rep);
}

int cmd_gen(const std::string& kind, int64_t n, int64_t m, int64_t w_min, int64_t w_max,
            uint64_t seed, const std::string& out_path) {
  GraphHandle g;
  int rc = nwsp_generate(kind.c_str(), n, m, w_min, w_max, seed, &g.g);
  if (rc != NWSP_OK) die(exit_code_for(rc), nwsp_last_error());

  DimacsGraph d;
  d.n = nwsp_graph_vertices(g.g);
  int64_t edges = nwsp_graph_edges(g.g);
  for (int64_t e = 0; e < edges; ++e) {
    int64_t u, v, w;
    nwsp_graph_edge(g.g, e, &u, &v, &w);
    d.src.push_back(u);
    d.dst.push_back(v);
    d.weight.push_back(w);
  }
  std::ostringstream comment;
  comment << "kind=" << kind << " seed=" << seed;
  if (out_path.empty()) {
    nwsp::cli::emit_dimacs(d, std::cout, comment.str());
  } else {
    std::ofstream out(out_path);
    if (!out) die(1, "cannot write " + out_path);
    nwsp::cli::emit_dimacs(d, out, comment.str());
  }
  std::cerr << "gen: " << kind << " n=" << d.n << " m=" << d.src.size() << "\n";
  return 0;
}

int cmd_verify(const std::string& file, const std::string& report_path) {
  DimacsGraph d = load_dimacs(file);
  GraphHandle g = to_handle(d);
  std::ifstream in(report_path);
  if (!in) die(1, "cannot open " + report_path);
  json rep;
  try {
    in >> rep;
  } catch (const std::exception& e) {
    die(1, std::string("bad report: ") + e.what());
  }

  std::string outcome = rep.value("outcome", "");
  int ok = 0;
  if (outcome == "tree") {
    std::vector<int64_t> value(static_cast<size_t>(d.n), 0);
    std::vector<int> kind(static_cast<size_t>(d.n), NWSP_DIST_FINITE);
    std::vector<int64_t> parent(static_cast<size_t>(d.n), -1);
    const json& dist = rep.at("distances");
    const json& parents = rep.at("parents");
    for (int64_t v = 0; v < d.n; ++v) {
      const json& x = dist.at(static_cast<size_t>(v));
      if (x.is_string()) {
        kind[static_cast<size_t>(v)] =
            x.get<std::string>() == "inf" ? NWSP_DIST_POS_INF : NWSP_DIST_NEG_INF;
      } else {
        value[static_cast<size_t>(v)] = x.get<int64_t>();
      }
      parent[static_cast<size_t>(v)] = parents.at(static_cast<size_t>(v)).get<int64_t>();
    }
    int64_t source = rep.at("source").get<int64_t>() - 1;
    if (nwsp_verify_tree(g.g, source, value.data(), kind.data(), parent.data(), &ok) != NWSP_OK)
      die(1, nwsp_last_error());
  } else if (outcome == "distances") {
    std::vector<int64_t> value(static_cast<size_t>(d.n), 0);
    std::vector<int> kind(static_cast<size_t>(d.n), NWSP_DIST_FINITE);
    const json& dist = rep.at("distances");
    for (int64_t v = 0; v < d.n; ++v) {
      const json& x = dist.at(static_cast<size_t>(v));
      if (x.is_string()) {
        kind[static_cast<size_t>(v)] =
            x.get<std::string>() == "inf" ? NWSP_DIST_POS_INF : NWSP_DIST_NEG_INF;
      } else {
        value[static_cast<size_t>(v)] = x.get<int64_t>();
      }
    }
    int64_t source = rep.at("source").get<int64_t>() - 1;
    if (nwsp_verify_distances(g.g, source, value.data(), kind.data(), &ok) != NWSP_OK)
      die(1, nwsp_last_error());
  } else if (outcome == "negative_cycle") {
    std::vector<int64_t> edges;
    for (const json& e : rep.at("cycle").at("edges")) edges.push_back(e.get<int64_t>());
    if (nwsp_verify_cycle(g.g, edges.data(), static_cast<int64_t>(edges.size()), &ok) != NWSP_OK)
      die(1, nwsp_last_error());
  } else if (outcome == "min_cycle_mean") {
    // Closed walk whose weight/length matches the reported fraction.
    std::vector<int64_t> edges;
    for (const json& e : rep.at("cycle").at("edges")) edges.push_back(e.get<int64_t>());
    int64_t weight = 0;
    bool closed = !edges.empty();
    for (size_t i = 0; i < edges.size() && closed; ++i) {
      int64_t e = edges[i], nxt = edges[(i + 1) % edges.size()];
      closed = e >= 0 && e < static_cast<int64_t>(d.src.size()) &&
               d.dst[static_cast<size_t>(e)] == d.src[static_cast<size_t>(nxt)];
      if (closed) weight += d.weight[static_cast<size_t>(e)];
    }
    std::string mean = rep.at("mean").get<std::string>();
    std::string expect = std::to_string(weight) + "/" + std::to_string(edges.size());
    ok = closed && mean == expect;
  } else if (outcome == "ldd") {
    std::vector<int64_t> cut;
    for (const json& e : rep.at("cut_edges")) cut.push_back(e.get<int64_t>());
    int64_t bound = rep.at("diameter_bound").get<int64_t>();
    if (nwsp_verify_ldd(g.g, cut.data(), static_cast<int64_t>(cut.size()), bound, &ok) != NWSP_OK)
      die(1, nwsp_last_error());
  } else {
    die(1, "report has unknown outcome kind '" + outcome + "'");
  }

  std::cerr << "verify: " << (ok ? "passed" : "FAILED") << "\n";
  return ok ? 0 : 3;
}

struct BenchRow {
  std::string line;
};

int cmd_bench(const std::string& suite, const std::vector<int64_t>& sizes, int seeds,
              int64_t degree, int64_t weight, uint64_t seed0, int jobs,
              const std::string& profile) {
  struct Task {
    int64_t n;
    uint64_t seed;
  };
  std::vector<Task> tasks;
  for (int64_t n : sizes)
    for (int s = 0; s < seeds; ++s) tasks.push_back({n, seed0 + static_cast<uint64_t>(s)});

  std::vector<BenchRow> rows(tasks.size());
  auto worker = [&](size_t begin, size_t step) {
    for (size_t i = begin; i < tasks.size(); i += step) {
      const Task& t = tasks[i];
      GraphHandle g;
      int rc = nwsp_generate(suite.c_str(), t.n, t.n * degree, -weight, weight, t.seed, &g.g);
      if (rc != NWSP_OK) die(exit_code_for(rc), nwsp_last_error());
      auto t0 = std::chrono::steady_clock::now();
      ResultHandle res;
      rc = nwsp_sssp(g.g, 0, t.seed, profile.c_str(), &res.r);
      if (rc != NWSP_OK) die(exit_code_for(rc), nwsp_last_error());
      double wall = wall_since(t0);

      std::ostringstream row;
      row << suite << "," << t.n << "," << nwsp_graph_edges(g.g) << "," << weight << ","
          << t.seed << "," << wall << "," << nwsp_result_steps(res.r) << ","
          << nwsp_result_steps_tree_phase(res.r) << "," << nwsp_result_steps_cycle_phase(res.r)
          << "," << (nwsp_result_kind(res.r) == NWSP_RESULT_TREE ? "tree" : "negative_cycle")
          << "," << (nwsp_result_verified(res.r) ? "passed" : "failed");
      rows[i].line = row.str();
    }
  };

  jobs = std::max(1, jobs);
  std::vector<std::thread> pool;
  for (int j = 1; j < jobs; ++j) pool.emplace_back(worker, static_cast<size_t>(j), jobs);
  worker(0, static_cast<size_t>(jobs));
  for (auto& th : pool) th.join();

  std::cout << "suite,n,m,W,seed,wall_ms,steps,steps_tree_phase,steps_cycle_phase,outcome,"
               "verification\n";
  for (const BenchRow& r : rows) std::cout << r.line << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"negative-weight shortest paths toolkit"};
  app.require_subcommand(1);

  uint64_t seed = 1;
  std::string profile = "default";
  app.add_option("--seed", seed, "random seed (all randomness derives from it)")
      ->capture_default_str();
  app.add_option("--profile", profile, "solver profile: default | bench")
      ->capture_default_str();

  std::string file, report_path, out_path;
  int64_t source = 1, diameter = 8;

  auto* sssp = app.add_subcommand("sssp", "shortest path tree or negative cycle");
  sssp->add_option("file", file)->required();
  sssp->add_option("-s,--source", source, "source vertex (1-based)")->capture_default_str();

  auto* dist = app.add_subcommand("distances", "distances with -inf/inf");
  dist->add_option("file", file)->required();
  dist->add_option("-s,--source", source, "source vertex (1-based)")->capture_default_str();

  auto* mcm = app.add_subcommand("mcm", "minimum cycle mean");
  mcm->add_option("file", file)->required();

  auto* ldd = app.add_subcommand("ldd", "strong low-diameter decomposition");
  ldd->add_option("file", file)->required();
  ldd->add_option("-D,--diameter", diameter, "diameter bound")->required();

  std::string kind = "random";
  int64_t gen_n = 16, gen_m = 32, w_min = -8, w_max = 8;
  auto* gen = app.add_subcommand("gen", "generate an instance");
  gen->add_option("--kind", kind, "random|restricted|negcycle|bellman-bad|grid")
      ->capture_default_str();
  gen->add_option("--n", gen_n)->capture_default_str();
  gen->add_option("--m", gen_m)->capture_default_str();
  gen->add_option("--wmin", w_min)->capture_default_str();
  gen->add_option("--wmax", w_max)->capture_default_str();
  gen->add_option("-o,--out", out_path, "output file (default stdout)");

  auto* verify = app.add_subcommand("verify", "re-check a stored report against a graph");
  verify->add_option("file", file)->required();
  verify->add_option("-r,--report", report_path, "report JSON file")->required();

  std::string sizes_str = "4096,8192";
  std::string suite = "bellman-bad";
  int seeds = 3, jobs = 1;
  int64_t degree = 4, bench_w = 1024;
  auto* bench = app.add_subcommand("bench", "scaling measurements (CSV on stdout)");
  bench->add_option("--suite", suite, "generator kind for instances")->capture_default_str();
  bench->add_option("--sizes", sizes_str, "comma-separated vertex counts")->capture_default_str();
  bench->add_option("--seeds", seeds, "seeds per size")->capture_default_str();
  bench->add_option("--degree", degree, "average out-degree")->capture_default_str();
  bench->add_option("--weight", bench_w, "weight magnitude")->capture_default_str();
  bench->add_option("--jobs", jobs, "parallel workers")->capture_default_str();

  for (CLI::App* sub : app.get_subcommands({})) sub->fallthrough();
  CLI11_PARSE(app, argc, argv);

  try {
    if (sssp->parsed()) return cmd_sssp(file, source, seed, profile, false);
    if (dist->parsed()) return cmd_sssp(file, source, seed, profile, true);
    if (mcm->parsed()) return cmd_mcm(file, seed, profile);
    if (ldd->parsed()) return cmd_ldd(file, diameter, seed, profile);
    if (gen->parsed()) return cmd_gen(kind, gen_n, gen_m, w_min, w_max, seed, out_path);
    if (verify->parsed()) return cmd_verify(file, report_path);
    if (bench->parsed()) {
      std::vector<int64_t> sizes;
      std::stringstream ss(sizes_str);
      std::string tok;
      while (std::getline(ss, tok, ','))
        if (!tok.empty()) sizes.push_back(std::stoll(tok));
      return cmd_bench(suite, sizes, seeds, degree, bench_w, seed, jobs, profile);
    }
  } catch (const std::exception& e) {
    die(1, e.what());
  }
  return 1;
}
