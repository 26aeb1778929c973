#include "dimacs.hpp"

#include <sstream>

namespace nwsp::cli {

namespace {

constexpr int64_t kMaxWeight = int64_t(1) << 40;

[[noreturn]] void oops(const std::string& msg, int line) { throw DimacsError{msg, line}; }

}  // namespace

DimacsGraph parse_dimacs(std::istream& in) {
  DimacsGraph g;
  bool have_problem = false;
  int64_t declared_m = 0;
  std::string line;
  int lineno = 0;

  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == 'c') continue;
    std::istringstream ss(line);
    char tag;
    ss >> tag;
    if (tag == 'p') {
      if (have_problem) oops("duplicate problem line", lineno);
      std::string kind;
      ss >> kind >> g.n >> declared_m;
      if (ss.fail() || kind != "sp") oops("malformed problem line (expected 'p sp <n> <m>')", lineno);
      if (g.n < 0 || declared_m < 0) oops("negative counts in problem line", lineno);
      have_problem = true;
    } else if (tag == 'a') {
      if (!have_problem) oops("arc line before problem line", lineno);
      int64_t u, v, w;
      ss >> u >> v >> w;
      if (ss.fail()) oops("malformed arc line (expected 'a <u> <v> <w>')", lineno);
      if (u < 1 || u > g.n || v < 1 || v > g.n)
        oops("vertex id outside 1.." + std::to_string(g.n), lineno);
      if (w > kMaxWeight || w < -kMaxWeight) oops("weight magnitude exceeds 2^40", lineno);
      g.src.push_back(u - 1);
      g.dst.push_back(v - 1);
      g.weight.push_back(w);
    } else {
      oops(std::string("unknown line tag '") + tag + "'", lineno);
    }
  }
  if (!have_problem) oops("missing problem line", lineno);
  if (static_cast<int64_t>(g.src.size()) != declared_m)
    oops("declared arc count " + std::to_string(declared_m) + " does not match " +
             std::to_string(g.src.size()) + " arc lines",
         lineno);
  return g;
}

void emit_dimacs(const DimacsGraph& g, std::ostream& out, const std::string& comment) {
  if (!comment.empty()) out << "c " << comment << "\n";
  out << "p sp " << g.n << " " << g.src.size() << "\n";
  for (size_t e = 0; e < g.src.size(); ++e)
    out << "a " << g.src[e] + 1 << " " << g.dst[e] + 1 << " " << g.weight[e] << "\n";
}

}  // namespace nwsp::cli
