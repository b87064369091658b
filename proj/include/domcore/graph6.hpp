#pragma once

#include <string>
#include <string_view>

#include "domcore/error.hpp"
#include "domcore/graph.hpp"

namespace domcore {

/// graph6 handles orders 0..62 (single-byte header).
inline constexpr int kGraph6Limit = 62;

// Layout: header byte n+63, then the upper triangle read column by column
// (x(0,1), x(0,2), x(1,2), x(0,3), ...), six bits per byte, most
// significant bit first, each byte offset by 63, zero-padded.

inline std::string write_graph6(const Graph &g) {
  const int n = g.order();
  if (n > kGraph6Limit) throw CapacityError("graph6 writer supports at most 62 vertices");
  std::string out(1, static_cast<char>(n + 63));
  int acc = 0, filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.nbr(j).contains(i) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
  return out;
}

/// Strict parser: rejects bad header bytes, bytes outside 63..126,
/// wrong length and nonzero padding. A trailing '\n' or "\r\n" is ignored.
inline Graph parse_graph6(std::string_view text) {
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (text.empty()) throw FormatError("graph6: empty string");
  const int header = static_cast<unsigned char>(text[0]);
  if (header < 63 || header > 63 + kGraph6Limit) {
    if (header == 126) throw FormatError("graph6: multi-byte header (order > 62) not supported");
    throw FormatError("graph6: bad header byte " + std::to_string(header));
  }
  const int n = header - 63;
  const long bits = static_cast<long>(n) * (n - 1) / 2;
  const long expected = (bits + 5) / 6;
  if (static_cast<long>(text.size()) - 1 != expected)
    throw FormatError("graph6: expected " + std::to_string(expected) + " data bytes for order " + std::to_string(n) +
                      ", got " + std::to_string(text.size() - 1));
  Graph::Adjacency adj{};
  long k = 0;
  for (std::size_t b = 1; b < text.size(); ++b) {
    const int byte = static_cast<unsigned char>(text[b]);
    if (byte < 63 || byte > 126) throw FormatError("graph6: byte " + std::to_string(byte) + " outside 63..126");
    const int value = byte - 63;
    for (int s = 5; s >= 0; --s, ++k) {
      const bool bit = (value >> s) & 1;
      if (k >= bits) {
        if (bit) throw FormatError("graph6: nonzero padding bits");
        continue;
      }
      if (!bit) continue;
      // Column-major upper triangle: k = j(j-1)/2 + i.
      int j = 1;
      while (static_cast<long>(j) * (j + 1) / 2 <= k) ++j;
      const int i = static_cast<int>(k - static_cast<long>(j) * (j - 1) / 2);
      adj[i].insert(j);
      adj[j].insert(i);
    }
  }
  return Graph(detail::Unchecked{}, n, adj);
}

}  // namespace domcore
