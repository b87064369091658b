#pragma once

#include <algorithm>
#include <array>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "domcore/graph.hpp"
#include "domcore/mds.hpp"

namespace domcore {

// ---------------------------------------------------------------------------
// Forbidden induced subgraph catalog
// ---------------------------------------------------------------------------

enum class Pattern { Claw, Diamond, Paw, Bull, Net, P4, P5, P6, P7, C4, C5, C6, C7, K4 };

inline constexpr std::array kPatterns = {Pattern::Claw, Pattern::Diamond, Pattern::Paw, Pattern::Bull, Pattern::Net,
                                         Pattern::P4,   Pattern::P5,      Pattern::P6,  Pattern::P7,   Pattern::C4,
                                         Pattern::C5,   Pattern::C6,      Pattern::C7,  Pattern::K4};

constexpr std::string_view to_string(Pattern p) {
  switch (p) {
    case Pattern::Claw: return "claw";
    case Pattern::Diamond: return "diamond";
    case Pattern::Paw: return "paw";
    case Pattern::Bull: return "bull";
    case Pattern::Net: return "net";
    case Pattern::P4: return "P4";
    case Pattern::P5: return "P5";
    case Pattern::P6: return "P6";
    case Pattern::P7: return "P7";
    case Pattern::C4: return "C4";
    case Pattern::C5: return "C5";
    case Pattern::C6: return "C6";
    case Pattern::C7: return "C7";
    case Pattern::K4: return "K4";
  }
  return "?";
}

inline Pattern parse_pattern(std::string_view name) {
  for (Pattern p : kPatterns)
    if (to_string(p) == name) return p;
  throw std::invalid_argument("unknown pattern '" + std::string(name) + "'");
}

/// Adjacency tables for the catalog. Vertex labels follow the usual
/// drawings: the claw center is 0; diamond 0,1 are the degree-3 pair;
/// paw/bull/net use a triangle 0,1,2 with pendants attached in order.
inline Graph pattern_graph(Pattern p) {
  switch (p) {
    case Pattern::Claw: return build_graph(4, {{0, 1}, {0, 2}, {0, 3}});
    case Pattern::Diamond: return build_graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}});
    case Pattern::Paw: return build_graph(4, {{0, 1}, {1, 2}, {0, 2}, {0, 3}});
    case Pattern::Bull: return build_graph(5, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {1, 4}});
    case Pattern::Net: return build_graph(6, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {1, 4}, {2, 5}});
    case Pattern::P4: return build_graph(4, {{0, 1}, {1, 2}, {2, 3}});
    case Pattern::P5: return build_graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}});
    case Pattern::P6: return build_graph(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}});
    case Pattern::P7: return build_graph(7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}});
    case Pattern::C4: return build_graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    case Pattern::C5: return build_graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
    case Pattern::C6: return build_graph(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}});
    case Pattern::C7: return build_graph(7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 0}});
    case Pattern::K4: return build_graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  }
  throw std::invalid_argument("unknown pattern");
}

namespace detail {

class InducedMatcher {
 public:
  InducedMatcher(const Graph &g, const Graph &h) : g_(g), h_(h) {
    // BFS order over the (connected) pattern so each vertex after the
    // first has an already-placed neighbor.
    VertexSet seen = VertexSet::single(0);
    order_.push_back(0);
    for (std::size_t i = 0; i < order_.size(); ++i)
      for (Vertex u : h_.nbr(order_[i]) - seen) {
        seen.insert(u);
        order_.push_back(u);
      }
    if (static_cast<int>(order_.size()) != h_.order()) throw std::invalid_argument("pattern must be connected");
    for (Vertex v = 0; v < g_.order(); ++v)
      for (int d = 0; d <= std::min(g_.nbr(v).size(), kMaxVertices - 1); ++d) min_degree_[d].insert(v);
  }

  bool find() {
    if (h_.order() > g_.order()) return false;
    image_.assign(h_.order(), -1);
    return rec(0, VertexSet{});
  }

 private:
  bool rec(std::size_t i, VertexSet used) {
    if (i == order_.size()) return true;
    const Vertex p = order_[i];
    VertexSet cand = min_degree_[h_.nbr(p).size()] - used;
    for (std::size_t j = 0; j < i; ++j) {
      const Vertex q = order_[j];
      if (h_.nbr(p).contains(q))
        cand &= g_.nbr(image_[q]);
      else
        cand -= g_.nbr(image_[q]);
    }
    for (Vertex w : cand) {
      image_[p] = w;
      if (rec(i + 1, used.with(w))) return true;
    }
    image_[p] = -1;
    return false;
  }

  const Graph &g_;
  const Graph &h_;
  std::vector<Vertex> order_;
  std::vector<Vertex> image_;
  std::array<VertexSet, kMaxVertices> min_degree_{};
};

}  // namespace detail

/// Whether some vertex subset of G induces a copy of the pattern.
inline bool contains_induced(const Graph &g, Pattern p) {
  const Graph h = pattern_graph(p);
  return detail::InducedMatcher(g, h).find();
}

inline bool contains_induced(const Graph &g, const Graph &pattern) { return detail::InducedMatcher(g, pattern).find(); }

/// Reference check: every |H|-subset, every bijection.
inline bool contains_induced_bruteforce(const Graph &g, const Graph &h) {
  const int k = h.order();
  if (k > g.order()) return false;
  std::vector<int> h_deg(k);
  for (int i = 0; i < k; ++i) h_deg[i] = h.nbr(i).size();
  std::sort(h_deg.begin(), h_deg.end());
  return detail::for_each_combination(g.order(), k, [&](VertexSet s) {
    const Graph sub = induced_subgraph(g, s);
    if (sub.edge_count() != h.edge_count()) return false;
    std::vector<int> deg(k);
    for (int i = 0; i < k; ++i) deg[i] = sub.nbr(i).size();
    std::sort(deg.begin(), deg.end());
    if (deg != h_deg) return false;
    std::vector<int> perm(k);
    std::iota(perm.begin(), perm.end(), 0);
    do {
      bool ok = true;
      for (int a = 0; a < k && ok; ++a)
        for (int b = a + 1; b < k && ok; ++b) ok = h.adjacent(a, b) == sub.adjacent(perm[a], perm[b]);
      if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
  });
}

// ---------------------------------------------------------------------------
// Class recognition
// ---------------------------------------------------------------------------

/// Chordality via maximum cardinality search: the reverse visit order must
/// be a perfect elimination ordering.
inline bool is_chordal(const Graph &g) {
  const int n = g.order();
  std::vector<int> weight(n, 0);
  VertexSet visited;
  for (int step = 0; step < n; ++step) {
    Vertex pick = -1;
    for (Vertex v : g.vertices() - visited)
      if (pick < 0 || weight[v] > weight[pick]) pick = v;
    // Earlier-visited neighbors must form a clique.
    if (!is_clique(g, g.nbr(pick) & visited)) return false;
    visited.insert(pick);
    for (Vertex u : g.nbr(pick) - visited) ++weight[u];
  }
  return true;
}

inline bool is_bipartite(const Graph &g) {
  VertexSet side_a, side_b, placed;
  for (VertexSet comp : connected_components(g)) {
    VertexSet frontier = VertexSet::single(comp.first());
    VertexSet *here = &side_a, *there = &side_b;
    placed |= frontier;
    side_a |= frontier;
    while (!frontier.empty()) {
      VertexSet next;
      for (Vertex u : frontier) next |= g.nbr(u);
      if (next.intersects(*here)) return false;
      next -= placed;
      *there |= next;
      placed |= next;
      frontier = next;
      std::swap(here, there);
    }
  }
  return true;
}

/// Connected with n-1 edges; the empty graph is not a tree.
inline bool is_tree(const Graph &g) { return g.order() >= 1 && is_connected(g) && g.edge_count() == g.order() - 1; }

inline bool is_cograph(const Graph &g) { return !contains_induced(g, Pattern::P4); }
inline bool is_claw_free(const Graph &g) { return !contains_induced(g, Pattern::Claw); }

/// Cograph test through the complement-reducible decomposition: every
/// induced subgraph on ≥ 2 vertices is disconnected or has a disconnected
/// complement. Independent of the P4 search.
inline bool is_cograph_by_decomposition(const Graph &g) {
  struct Rec {
    const Graph &g;
    const Graph gc;
    bool operator()(VertexSet s) const {
      if (s.size() <= 1) return true;
      auto parts = connected_components(g, s);
      if (parts.size() == 1) parts = connected_components(gc, s);
      if (parts.size() == 1) return false;
      for (VertexSet p : parts)
        if (!(*this)(p)) return false;
      return true;
    }
  };
  return Rec{g, complement(g)}(g.vertices());
}

inline bool is_path_graph(const Graph &g) {
  if (!is_tree(g)) return false;
  for (Vertex v = 0; v < g.order(); ++v)
    if (g.nbr(v).size() > 2) return false;
  return true;
}

inline bool is_cycle_graph(const Graph &g) {
  if (g.order() < 3 || !is_connected(g)) return false;
  for (Vertex v = 0; v < g.order(); ++v)
    if (g.nbr(v).size() != 2) return false;
  return true;
}

inline bool is_regular(const Graph &g, int degree) {
  for (Vertex v = 0; v < g.order(); ++v)
    if (g.nbr(v).size() != degree) return false;
  return true;
}

struct ClassFlags {
  bool chordal = false;
  bool bipartite = false;
  bool tree = false;
  bool cograph = false;
  bool claw_free = false;
  /// contains[i]: G contains kPatterns[i] as an induced subgraph.
  std::array<bool, kPatterns.size()> contains{};

  bool has(Pattern p) const { return contains[static_cast<std::size_t>(p)]; }
  bool free_of(Pattern p) const { return !has(p); }
};

inline ClassFlags class_flags(const Graph &g) {
  ClassFlags f;
  for (std::size_t i = 0; i < kPatterns.size(); ++i) f.contains[i] = contains_induced(g, kPatterns[i]);
  f.chordal = is_chordal(g);
  f.bipartite = is_bipartite(g);
  f.tree = is_tree(g);
  f.cograph = f.free_of(Pattern::P4);
  f.claw_free = f.free_of(Pattern::Claw);
  return f;
}

// ---------------------------------------------------------------------------
// Twin clique partition
// ---------------------------------------------------------------------------

/// Partition (K0 = {root}, K1, ..., Kq): the other vertices grouped by equal
/// closed neighborhood, N[u] = N[w].
struct TwinCliquePartition {
  Vertex root = 0;
  /// cliques[0] = {root}; the rest ordered by smallest member.
  std::vector<VertexSet> cliques;
  /// Quotient graph: vertex i stands for cliques[i]; adjacent iff the
  /// cliques are completely joined.
  Graph reduced;
};

inline TwinCliquePartition twin_clique_partition(const Graph &g, Vertex root) {
  g.neighbors(root);
  TwinCliquePartition tcp;
  tcp.root = root;
  tcp.cliques.push_back(VertexSet::single(root));
  VertexSet rest = g.vertices().without(root);
  while (!rest.empty()) {
    const Vertex u = rest.first();
    VertexSet clique;
    for (Vertex w : rest)
      if (g.closed_nbr(w) == g.closed_nbr(u)) clique.insert(w);
    tcp.cliques.push_back(clique);
    rest -= clique;
  }
  const int q = static_cast<int>(tcp.cliques.size());
  std::vector<Edge> edges;
  for (int i = 0; i < q; ++i)
    for (int j = i + 1; j < q; ++j)
      if (g.adjacent(tcp.cliques[i].first(), tcp.cliques[j].first())) edges.emplace_back(i, j);
  tcp.reduced = build_graph(q, edges);
  return tcp;
}

}  // namespace domcore
