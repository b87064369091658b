#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

#include "domcore/canonical.hpp"
#include "domcore/error.hpp"
#include "domcore/graph.hpp"

namespace domcore {

inline constexpr int kEnumerationLimit = 10;

namespace detail {

inline bool connected_without(const Graph::Adjacency &adj, int n, Vertex v) {
  const VertexSet rest = VertexSet::range(n).without(v);
  if (rest.empty()) return true;
  VertexSet seen = VertexSet::single(rest.first());
  VertexSet frontier = seen;
  while (!frontier.empty()) {
    VertexSet next;
    for (Vertex u : frontier) next |= adj[u];
    frontier = (next & rest) - seen;
    seen |= frontier;
  }
  return seen == rest;
}

/// Is `s` the smallest bitmask in its orbit under the group generated by `gens`?
inline bool orbit_minimal(VertexSet s, const std::vector<Permutation> &gens) {
  if (gens.empty()) return true;
  std::vector<std::uint64_t> seen{s.bits()};
  for (std::size_t i = 0; i < seen.size(); ++i) {
    for (const auto &g : gens) {
      const VertexSet img = apply(g, VertexSet(seen[i]));
      if (img.bits() < s.bits()) return false;
      if (std::find(seen.begin(), seen.end(), img.bits()) == seen.end()) seen.push_back(img.bits());
    }
  }
  return true;
}

}  // namespace detail

/// Isomorph-free generation of connected graphs by canonical augmentation.
///
/// A graph of order n is produced from a parent of order n-1 by adding
/// vertex n-1 with neighborhood S. The child is kept only when the new
/// vertex lies in the Aut-orbit of the canonical deletion vertex: among
/// non-cut vertices with the largest (degree, neighbor-degree sum), the
/// one that comes first in the canonical labeling. S ranges over one
/// representative per Aut(parent)-orbit. Each isomorphism class is then
/// produced exactly once.
///
/// Parent levels are cached, so one instance serves a run over several
/// orders.
class ConnectedGraphs {
 public:
  explicit ConnectedGraphs(int jobs = 1) : jobs_(std::max(1, jobs)) {}

  /// visit(const Graph &, std::uint64_t order_key) for every class of
  /// order n. With jobs > 1 visit runs concurrently on worker threads;
  /// order_key = parent index * 2^16 + S gives the single-threaded order.
  template <class Visit>
  void for_each(int n, Visit &&visit) {
    check_order(n);
    if (n == 1) {
      visit(build_graph(1, {}), std::uint64_t{0});
      return;
    }
    const std::vector<Graph> &parents = level(n - 1);
    run_blocks(parents.size(), [&](std::size_t begin, std::size_t end) {
      for (std::size_t p = begin; p < end; ++p)
        children(parents[p], [&](const Graph &child, std::uint64_t s) { visit(child, (std::uint64_t{p} << 16) | s); });
    });
  }

  /// The materialized list for order n, in single-threaded order.
  const std::vector<Graph> &level(int n) {
    check_order(n);
    if (static_cast<int>(levels_.size()) <= n) levels_.resize(n + 1);
    if (!levels_[n].empty()) return levels_[n];
    if (n == 1) {
      levels_[1].push_back(build_graph(1, {}));
      return levels_[1];
    }
    const std::vector<Graph> &parents = level(n - 1);
    constexpr std::size_t kBlock = 256;
    const std::size_t blocks = (parents.size() + kBlock - 1) / kBlock;
    std::vector<std::vector<Graph>> out(blocks);
    run_blocks(blocks, [&](std::size_t begin, std::size_t end) {
      for (std::size_t b = begin; b < end; ++b)
        for (std::size_t p = b * kBlock; p < std::min(parents.size(), (b + 1) * kBlock); ++p)
          children(parents[p], [&](const Graph &child, std::uint64_t) { out[b].push_back(child); });
    });
    auto &dst = levels_[n];
    for (auto &chunk : out) dst.insert(dst.end(), chunk.begin(), chunk.end());
    return dst;
  }

  std::uint64_t count(int n) {
    std::atomic<std::uint64_t> c{0};
    for_each(n, [&](const Graph &, std::uint64_t) { c.fetch_add(1, std::memory_order_relaxed); });
    return c.load();
  }

  /// Drops cached levels of order >= n.
  void release_from(int n) {
    for (int i = n; i < static_cast<int>(levels_.size()); ++i) std::vector<Graph>().swap(levels_[i]);
  }

 private:
  static void check_order(int n) {
    if (n < 1 || n > kEnumerationLimit)
      throw CapacityError("enumeration supports orders 1.." + std::to_string(kEnumerationLimit) + ", got " +
                          std::to_string(n));
  }

  /// Runs work(begin, end) over [0, total) split across the workers.
  template <class Work>
  void run_blocks(std::size_t total, Work &&work) const {
    if (jobs_ == 1 || total < 2) {
      work(std::size_t{0}, total);
      return;
    }
    std::atomic<std::size_t> next{0};
    const std::size_t step = std::max<std::size_t>(1, total / (std::size_t(jobs_) * 16));
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs_; ++t)
      pool.emplace_back([&] {
        while (true) {
          const std::size_t begin = next.fetch_add(step);
          if (begin >= total) break;
          work(begin, std::min(total, begin + step));
        }
      });
    for (auto &th : pool) th.join();
  }

  template <class Emit>
  static void children(const Graph &parent, Emit &&emit) {
    const int m = parent.order();
    const int n = m + 1;
    const auto parent_gens = canonical_labeling(parent).generators;
    std::array<int, kMaxVertices> deg{};
    std::array<int, kMaxVertices> score{};
    for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << m); ++bits) {
      const VertexSet s(bits);
      if (!detail::orbit_minimal(s, parent_gens)) continue;
      Graph::Adjacency adj = parent.adjacency();
      adj[m] = s;
      for (Vertex u : s) adj[u].insert(m);

      for (int v = 0; v < n; ++v) deg[v] = adj[v].size();
      for (int v = 0; v < n; ++v) {
        int sum = 0;
        for (Vertex u : adj[v]) sum += deg[u];
        score[v] = deg[v] * 256 + sum;
      }
      // The new vertex is never a cut vertex: removing it leaves the parent.
      bool reject = false;
      VertexSet ties;
      for (int v = 0; v < m && !reject; ++v) {
        if (score[v] < score[m]) continue;
        if (!detail::connected_without(adj, n, v)) continue;
        if (score[v] > score[m])
          reject = true;
        else
          ties.insert(v);
      }
      if (reject) continue;
      Graph child(detail::Unchecked{}, n, adj);
      if (!ties.empty()) {
        const auto lab = canonical_labeling(child);
        Vertex first = m;
        for (Vertex v : ties)
          if (lab.position[v] < lab.position[first]) first = v;
        if (lab.orbit[first] != lab.orbit[m]) continue;
      }
      emit(child, bits);
    }
  }

  int jobs_;
  std::vector<std::vector<Graph>> levels_;
};

/// One representative per isomorphism class of connected graphs of order n.
inline std::vector<Graph> enumerate_connected(int n, int jobs = 1) { return ConnectedGraphs(jobs).level(n); }

}  // namespace domcore
