#pragma once

#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "domcore/error.hpp"
#include "domcore/graph.hpp"

namespace domcore {

// Edge-list text format:
//   n m
//   u v      (m lines, 0-based endpoints)
// Blank lines and anything after '#' are ignored.

inline Graph read_edge_list(std::istream &in) {
  std::vector<long long> tokens;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string tok;
    while (ls >> tok) {
      std::size_t used = 0;
      long long value = 0;
      try {
        value = std::stoll(tok, &used);
      } catch (const std::exception &) {
        used = 0;
      }
      if (used != tok.size() || value < 0)
        throw FormatError("edge list line " + std::to_string(line_no) + ": bad token '" + tok + "'");
      tokens.push_back(value);
    }
  }
  if (tokens.size() < 2) throw FormatError("edge list: missing 'n m' header");
  const long long n = tokens[0], m = tokens[1];
  if (n > kMaxVertices) throw FormatError("edge list: order " + std::to_string(n) + " exceeds 64");
  if (static_cast<long long>(tokens.size()) != 2 + 2 * m)
    throw FormatError("edge list: header announces " + std::to_string(m) + " edges but " +
                      std::to_string((tokens.size() - 2) / 2.0) + " were given");
  std::vector<Edge> edges;
  for (long long i = 0; i < m; ++i) {
    const long long u = tokens[2 + 2 * i], v = tokens[3 + 2 * i];
    if (u >= n || v >= n) throw FormatError("edge list: endpoint out of range in edge " + std::to_string(i));
    if (u == v) throw FormatError("edge list: self-loop at vertex " + std::to_string(u));
    edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
  }
  return build_graph(static_cast<int>(n), edges);
}

inline Graph parse_edge_list(const std::string &text) {
  std::istringstream in(text);
  return read_edge_list(in);
}

inline void write_edge_list(std::ostream &out, const Graph &g) {
  const auto edges = g.edges();
  out << g.order() << ' ' << edges.size() << '\n';
  for (auto [u, v] : edges) out << u << ' ' << v << '\n';
}

}  // namespace domcore
