#pragma once

#include <algorithm>
#include <array>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "domcore/error.hpp"
#include "domcore/vertex_set.hpp"

namespace domcore {

namespace detail {
struct Unchecked {};
}  // namespace detail

/// Simple undirected graph on at most 64 vertices, stored as one
/// neighborhood bitset per vertex. Values are immutable once built.
class Graph {
 public:
  using Adjacency = std::array<VertexSet, kMaxVertices>;

  Graph() = default;

  /// Validates symmetry, absence of loops and stray bits.
  static Graph from_adjacency(int n, std::span<const VertexSet> adj) {
    if (n < 0 || n > kMaxVertices) throw CapacityError("graph order " + std::to_string(n) + " outside [0, 64]");
    if (static_cast<int>(adj.size()) != n) throw std::invalid_argument("adjacency length does not match order");
    Graph g;
    g.n_ = n;
    const VertexSet all = VertexSet::range(n);
    for (int v = 0; v < n; ++v) {
      if (!adj[v].subset_of(all)) throw std::invalid_argument("neighborhood refers to a vertex outside the graph");
      if (adj[v].contains(v)) throw std::invalid_argument("self-loop at vertex " + std::to_string(v));
      g.adj_[v] = adj[v];
    }
    for (int v = 0; v < n; ++v)
      for (Vertex u : adj[v])
        if (!adj[u].contains(v)) throw std::invalid_argument("asymmetric adjacency");
    return g;
  }

  Graph(detail::Unchecked, int n, const Adjacency &adj) : n_(n), adj_(adj) {}

  int order() const { return n_; }
  int edge_count() const {
    int twice = 0;
    for (int v = 0; v < n_; ++v) twice += adj_[v].size();
    return twice / 2;
  }
  VertexSet vertices() const { return VertexSet::range(n_); }

  VertexSet neighbors(Vertex v) const { return adj_[check(v)]; }
  VertexSet closed_neighborhood(Vertex v) const { return adj_[check(v)].with(v); }
  int degree(Vertex v) const { return adj_[check(v)].size(); }
  bool adjacent(Vertex u, Vertex v) const { return adj_[check(u)].contains(check(v)); }

  /// Unchecked access for inner loops.
  VertexSet nbr(Vertex v) const { return adj_[v]; }
  VertexSet closed_nbr(Vertex v) const { return adj_[v].with(v); }
  const Adjacency &adjacency() const { return adj_; }

  std::vector<std::pair<Vertex, Vertex>> edges() const {
    std::vector<std::pair<Vertex, Vertex>> out;
    for (Vertex v = 0; v < n_; ++v)
      for (Vertex u : adj_[v])
        if (v < u) out.emplace_back(v, u);
    return out;
  }

  bool operator==(const Graph &o) const {
    return n_ == o.n_ && std::equal(adj_.begin(), adj_.begin() + n_, o.adj_.begin());
  }

 private:
  Vertex check(Vertex v) const {
    if (v < 0 || v >= n_) throw std::out_of_range("vertex " + std::to_string(v) + " out of range for order " + std::to_string(n_));
    return v;
  }

  int n_ = 0;
  Adjacency adj_{};
};

using Edge = std::pair<Vertex, Vertex>;

inline Graph build_graph(int n, std::span<const Edge> edges) {
  if (n < 0 || n > kMaxVertices) throw CapacityError("graph order " + std::to_string(n) + " outside [0, 64]");
  Graph::Adjacency adj{};
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw std::out_of_range("edge (" + std::to_string(u) + "," + std::to_string(v) + ") has an endpoint out of range");
    if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    adj[u].insert(v);
    adj[v].insert(u);
  }
  return Graph(detail::Unchecked{}, n, adj);
}

inline Graph build_graph(int n, std::initializer_list<Edge> edges) {
  return build_graph(n, std::span<const Edge>(edges.begin(), edges.size()));
}

inline VertexSet closed_neighborhood(const Graph &g, Vertex v) { return g.closed_neighborhood(v); }

/// Vertices at graph distance exactly k from v.
inline VertexSet distance_shell(const Graph &g, Vertex v, int k) {
  if (k < 0) throw std::invalid_argument("negative distance");
  VertexSet seen = VertexSet::single(v);
  VertexSet layer = seen;
  g.neighbors(v);  // range check
  for (int d = 0; d < k; ++d) {
    VertexSet next;
    for (Vertex u : layer) next |= g.nbr(u);
    layer = next - seen;
    seen |= layer;
    if (layer.empty()) break;
  }
  return layer;
}

/// G[S], with the members of S renumbered 0..|S|-1 in increasing order.
inline Graph induced_subgraph(const Graph &g, VertexSet s) {
  if (!s.subset_of(g.vertices())) throw std::out_of_range("vertex set exceeds graph order");
  std::array<int, kMaxVertices> index{};
  int k = 0;
  for (Vertex v : s) index[v] = k++;
  Graph::Adjacency adj{};
  for (Vertex v : s)
    for (Vertex u : g.nbr(v) & s) adj[index[v]].insert(index[u]);
  return Graph(detail::Unchecked{}, k, adj);
}

struct VertexDeletion {
  Graph graph;
  /// old_to_new[v] for every old vertex; -1 for the deleted one.
  std::vector<int> old_to_new;
};

/// G - v with the vertex map; indices above v shift down by one.
inline VertexDeletion delete_vertex_mapped(const Graph &g, Vertex v) {
  if (g.order() == 0) throw std::invalid_argument("cannot delete a vertex from the empty graph");
  g.neighbors(v);
  std::vector<int> map(g.order());
  for (int u = 0; u < g.order(); ++u) map[u] = u < v ? u : (u == v ? -1 : u - 1);
  return {induced_subgraph(g, g.vertices().without(v)), std::move(map)};
}

inline Graph delete_vertex(const Graph &g, Vertex v) { return delete_vertex_mapped(g, v).graph; }

/// Appends a vertex with index n adjacent exactly to `neighbors`.
inline Graph add_vertex(const Graph &g, VertexSet neighbors) {
  const int n = g.order();
  if (n >= kMaxVertices) throw CapacityError("graph already has 64 vertices");
  if (!neighbors.subset_of(g.vertices())) throw std::out_of_range("neighbor outside the graph");
  Graph::Adjacency adj = g.adjacency();
  adj[n] = neighbors;
  for (Vertex u : neighbors) adj[u].insert(n);
  return Graph(detail::Unchecked{}, n + 1, adj);
}

/// The pendant construction: a new degree-one vertex (index n) attached to v.
inline Graph add_pendant(const Graph &g, Vertex v) {
  if (g.order() >= kMaxVertices) throw CapacityError("graph already has 64 vertices");
  g.neighbors(v);
  return add_vertex(g, VertexSet::single(v));
}

/// Union of the closed neighborhoods of S.
inline VertexSet dominated_by(const Graph &g, VertexSet s) {
  VertexSet out = s;
  for (Vertex v : s) out |= g.nbr(v);
  return out;
}

inline bool is_dominating(const Graph &g, VertexSet s) {
  if (!s.subset_of(g.vertices())) throw std::out_of_range("vertex set exceeds graph order");
  return dominated_by(g, s) == g.vertices();
}

/// pn[u,S] = { v : N[v] ∩ S = {u} }.
inline VertexSet private_neighbors(const Graph &g, Vertex u, VertexSet s) {
  if (!s.contains(u)) throw std::invalid_argument("vertex " + std::to_string(u) + " is not in the set");
  VertexSet out;
  for (Vertex v : g.closed_neighborhood(u))
    if ((g.closed_nbr(v) & s) == VertexSet::single(u)) out.insert(v);
  return out;
}

inline bool is_clique(const Graph &g, VertexSet s) {
  for (Vertex v : s)
    if (!(s.without(v)).subset_of(g.nbr(v))) return false;
  return true;
}

inline bool is_independent(const Graph &g, VertexSet s) {
  for (Vertex v : s)
    if (g.nbr(v).intersects(s)) return false;
  return true;
}

/// Vertices reachable from `start` inside `within` (start must be in within).
inline VertexSet reach(const Graph &g, Vertex start, VertexSet within) {
  VertexSet seen = VertexSet::single(start);
  VertexSet frontier = seen;
  while (!frontier.empty()) {
    VertexSet next;
    for (Vertex u : frontier) next |= g.nbr(u);
    frontier = (next & within) - seen;
    seen |= frontier;
  }
  return seen;
}

/// Components of G[within], ordered by smallest member.
inline std::vector<VertexSet> connected_components(const Graph &g, VertexSet within) {
  std::vector<VertexSet> out;
  VertexSet rest = within & g.vertices();
  while (!rest.empty()) {
    VertexSet c = reach(g, rest.first(), rest);
    out.push_back(c);
    rest -= c;
  }
  return out;
}

inline std::vector<VertexSet> connected_components(const Graph &g) { return connected_components(g, g.vertices()); }

/// The empty graph counts as connected.
inline bool is_connected(const Graph &g) {
  if (g.order() == 0) return true;
  return reach(g, 0, g.vertices()) == g.vertices();
}

/// Vertices whose removal increases the number of connected components.
inline VertexSet cut_vertices(const Graph &g) {
  VertexSet out;
  const auto base = connected_components(g).size();
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.nbr(v).size() < 2) continue;
    if (connected_components(g, g.vertices().without(v)).size() > base) out.insert(v);
  }
  return out;
}

inline Graph complement(const Graph &g) {
  Graph::Adjacency adj{};
  const VertexSet all = g.vertices();
  for (Vertex v = 0; v < g.order(); ++v) adj[v] = (all - g.nbr(v)).without(v);
  return Graph(detail::Unchecked{}, g.order(), adj);
}

/// Relabels vertex v as perm[v]; perm must be a permutation of 0..n-1.
inline Graph relabel(const Graph &g, std::span<const int> perm) {
  const int n = g.order();
  if (static_cast<int>(perm.size()) != n) throw std::invalid_argument("permutation length does not match order");
  VertexSet image;
  for (int p : perm) {
    if (p < 0 || p >= n || image.contains(p)) throw std::invalid_argument("not a permutation");
    image.insert(p);
  }
  Graph::Adjacency adj{};
  for (Vertex v = 0; v < n; ++v)
    for (Vertex u : g.nbr(v)) adj[perm[v]].insert(perm[u]);
  return Graph(detail::Unchecked{}, n, adj);
}

}  // namespace domcore
