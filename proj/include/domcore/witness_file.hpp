#pragma once

#include <filesystem>
#include <fstream>
#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include "domcore/error.hpp"
#include "domcore/graph6.hpp"
#include "domcore/search.hpp"

namespace domcore {

// Witness files: one graph6 string per line; lines starting with '#' and
// blank lines are comments.

inline std::vector<Graph> read_witnesses(std::istream &in) {
  std::vector<Graph> out;
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t')) line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    out.push_back(parse_graph6(line));
  }
  return out;
}

inline std::vector<Graph> read_witness_file(const std::filesystem::path &path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open witness file " + path.string());
  return read_witnesses(in);
}

inline void write_witnesses(std::ostream &out, const PartitionSignature &sig, const SearchResult &result) {
  out << "# signature: " << sig.name << '\n';
  out << "# " << sig.description << '\n';
  const int last = result.orders.empty() ? result.n_max : result.orders.back().n;
  out << "# searched connected graphs n <= " << last << ", status " << to_string(result.status) << '\n';
  for (const auto &o : result.orders) {
    if (o.witnesses.empty()) continue;
    out << "# n=" << o.n << " witnesses=" << o.witnesses.size() << (o.truncated ? " (truncated)" : "") << '\n';
    for (const auto &w : o.witnesses) out << w.form.bytes << '\n';
  }
}

/// Writes <dir>/<signature>.g6 and returns its path.
inline std::filesystem::path save_witnesses(const std::filesystem::path &dir, const PartitionSignature &sig,
                                            const SearchResult &result) {
  std::filesystem::create_directories(dir);
  const auto path = dir / (sig.name + ".g6");
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  write_witnesses(out, sig, result);
  return path;
}

}  // namespace domcore
