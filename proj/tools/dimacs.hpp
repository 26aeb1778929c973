#pragma once

#include <cstdint>
#include <istream>
#include <ostream>
#include <string>
#include <vector>

namespace nwsp::cli {

// DIMACS shortest-path format: comment lines "c ...", one problem line
// "p sp <n> <m>", arc lines "a <u> <v> <w>" with 1-based endpoints. Unlike
// the classic nonnegative benchmarks, weights may be negative.
struct DimacsGraph {
  int64_t n = 0;
  std::vector<int64_t> src, dst, weight;  // 0-based endpoints
};

struct DimacsError {
  std::string message;
  int line = 0;
};

// Throws DimacsError on malformed input.
DimacsGraph parse_dimacs(std::istream& in);
void emit_dimacs(const DimacsGraph& g, std::ostream& out, const std::string& comment = "");

}  // namespace nwsp::cli
