#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <numeric>
#include <string>
#include <vector>

#include "domcore/error.hpp"
#include "domcore/graph.hpp"
#include "domcore/graph6.hpp"

namespace domcore {

inline constexpr int kCanonicalLimit = 16;

/// Relabeling-invariant identifier: the graph6 string of the canonically
/// labeled graph. Equal iff the graphs are isomorphic.
struct CanonicalForm {
  std::string bytes;
  auto operator<=>(const CanonicalForm &) const = default;
  bool operator==(const CanonicalForm &) const = default;
};

using Permutation = std::vector<int>;

struct CanonicalLabeling {
  /// position[v]: index of v in the canonical labeling.
  std::vector<int> position;
  /// Automorphisms found during the search; they generate Aut(G).
  std::vector<Permutation> generators;
  /// orbit[v]: smallest vertex in the Aut(G)-orbit of v.
  std::vector<int> orbit;

  bool trivial_group() const { return generators.empty(); }
};

namespace detail {

using Key = unsigned __int128;
using Cells = std::array<VertexSet, kCanonicalLimit>;

/// Adjacency bits of the labeled graph in graph6 order, first bit most
/// significant.
inline Key labeling_key(const Graph &g, const std::array<Vertex, kCanonicalLimit> &ord, int n) {
  Key key = 0;
  for (int j = 1; j < n; ++j) {
    const VertexSet nj = g.nbr(ord[j]);
    for (int i = 0; i < j; ++i) key = (key << 1) | static_cast<Key>(nj.contains(ord[i]));
  }
  return key;
}

class CanonicalSearch {
 public:
  explicit CanonicalSearch(const Graph &g) : g_(g), n_(g.order()) {}

  CanonicalLabeling run() {
    Cells cells{};
    int count = 0;
    if (n_ > 0) cells[count++] = g_.vertices();
    std::array<Vertex, kCanonicalLimit> prefix{};
    dfs(cells, count, prefix, 0);

    CanonicalLabeling out;
    out.position.resize(n_);
    for (int i = 0; i < n_; ++i) out.position[best_ord_[i]] = i;
    out.generators = autos_;
    out.orbit = orbits(0, prefix);
    return out;
  }

 private:
  // Equitable refinement: split every cell by the vector of neighbor
  // counts into the cells of the current partition, until stable. New
  // cells are ordered by that vector so the result is label-invariant.
  void refine(Cells &cells, int &count) const {
    while (true) {
      Cells next{};
      int next_count = 0;
      bool split = false;
      for (int c = 0; c < count; ++c) {
        if (cells[c].size() == 1) {
          next[next_count++] = cells[c];
          continue;
        }
        std::array<std::pair<std::uint64_t, Vertex>, kCanonicalLimit> sig{};
        int k = 0;
        for (Vertex u : cells[c]) {
          std::uint64_t s = 0;
          const VertexSet nu = g_.nbr(u);
          for (int d = 0; d < count; ++d)
            s |= static_cast<std::uint64_t>((nu & cells[d]).size()) << (4 * (kCanonicalLimit - 1 - d));
          sig[k++] = {s, u};
        }
        std::sort(sig.begin(), sig.begin() + k);
        VertexSet group = VertexSet::single(sig[0].second);
        for (int i = 1; i < k; ++i) {
          if (sig[i].first != sig[i - 1].first) {
            next[next_count++] = group;
            group = VertexSet{};
            split = true;
          }
          group.insert(sig[i].second);
        }
        next[next_count++] = group;
      }
      cells = next;
      count = next_count;
      if (!split) return;
    }
  }

  std::vector<int> orbits(int depth, const std::array<Vertex, kCanonicalLimit> &prefix) const {
    std::vector<int> parent(n_);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (const auto &a : autos_) {
      bool fixes = true;
      for (int i = 0; i < depth && fixes; ++i) fixes = a[prefix[i]] == prefix[i];
      if (!fixes) continue;
      for (int v = 0; v < n_; ++v) {
        int x = find(v), y = find(a[v]);
        if (x != y) parent[std::max(x, y)] = std::min(x, y);
      }
    }
    for (int v = 0; v < n_; ++v) parent[v] = find(v);
    return parent;
  }

  void record_automorphism(const std::array<Vertex, kCanonicalLimit> &from, const std::array<Vertex, kCanonicalLimit> &to) {
    Permutation perm(n_);
    bool identity = true;
    for (int i = 0; i < n_; ++i) {
      perm[from[i]] = to[i];
      identity = identity && from[i] == to[i];
    }
    if (!identity) autos_.push_back(std::move(perm));
  }

  void dfs(Cells cells, int count, std::array<Vertex, kCanonicalLimit> &prefix, int depth) {
    refine(cells, count);
    if (count == n_) {
      std::array<Vertex, kCanonicalLimit> ord{};
      for (int i = 0; i < n_; ++i) ord[i] = cells[i].first();
      const Key key = labeling_key(g_, ord, n_);
      if (!have_leaf_) {
        have_leaf_ = true;
        first_ord_ = best_ord_ = ord;
        first_key_ = best_key_ = key;
        return;
      }
      if (key == first_key_) {
        record_automorphism(first_ord_, ord);
      } else if (key == best_key_) {
        record_automorphism(best_ord_, ord);
      } else if (key < best_key_) {
        best_key_ = key;
        best_ord_ = ord;
      }
      return;
    }
    int target = 0;
    while (cells[target].size() == 1) ++target;
    VertexSet tried;
    for (Vertex u : cells[target]) {
      if (!tried.empty() && !autos_.empty()) {
        const auto orb = orbits(depth, prefix);
        bool equivalent = false;
        for (Vertex t : tried) equivalent = equivalent || orb[t] == orb[u];
        if (equivalent) continue;
      }
      Cells child{};
      int k = 0;
      for (int c = 0; c < count; ++c) {
        if (c == target) {
          child[k++] = VertexSet::single(u);
          child[k++] = cells[c].without(u);
        } else {
          child[k++] = cells[c];
        }
      }
      prefix[depth] = u;
      dfs(child, k, prefix, depth + 1);
      tried.insert(u);
    }
  }

  const Graph &g_;
  int n_;
  bool have_leaf_ = false;
  std::array<Vertex, kCanonicalLimit> first_ord_{}, best_ord_{};
  Key first_key_ = 0, best_key_ = 0;
  std::vector<Permutation> autos_;
};

}  // namespace detail

/// Canonical labeling by partition refinement and individualization,
/// taking the smallest adjacency bitstring; automorphisms found along the
/// way prune equivalent branches.
inline CanonicalLabeling canonical_labeling(const Graph &g) {
  if (g.order() > kCanonicalLimit)
    throw CapacityError("canonical labeling supports at most " + std::to_string(kCanonicalLimit) + " vertices");
  return detail::CanonicalSearch(g).run();
}

inline Graph canonical_graph(const Graph &g) {
  const auto lab = canonical_labeling(g);
  return relabel(g, lab.position);
}

inline CanonicalForm canonical_form(const Graph &g) { return {write_graph6(canonical_graph(g))}; }

/// Image of a vertex set under a permutation.
inline VertexSet apply(const Permutation &perm, VertexSet s) {
  VertexSet out;
  for (Vertex v : s) out.insert(perm[v]);
  return out;
}

}  // namespace domcore
