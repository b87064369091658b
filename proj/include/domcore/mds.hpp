#pragma once

#include <algorithm>
#include <array>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "domcore/error.hpp"
#include "domcore/graph.hpp"

namespace domcore {

/// Result of a domination computation.
///
/// `witness` is the lexicographically smallest minimum dominating set
/// (compared as sorted index sequences). `all_sets`, when present, holds
/// every minimum dominating set in lexicographic order.
struct DominationReport {
  int gamma = 0;
  VertexSet witness;
  std::optional<std::vector<VertexSet>> all_sets;
};

inline constexpr int kBruteForceLimit = 30;
inline constexpr int kAllSetsLimit = 24;

namespace detail {

/// Calls visit(set) for every k-subset of {0..n-1} in lexicographic order
/// until visit returns true. Returns whether it stopped early.
template <class Visit>
bool for_each_combination(int n, int k, Visit &&visit) {
  if (k > n) return false;
  std::array<int, kMaxVertices> idx{};
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    VertexSet s;
    for (int i = 0; i < k; ++i) s.insert(idx[i]);
    if (visit(s)) return true;
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) return false;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

/// Branch-and-bound for the smallest subset of `allowed` whose closed
/// neighborhoods cover `target`. Branches on the target vertex with the
/// fewest candidate dominators.
class CoverSearch {
 public:
  explicit CoverSearch(const Graph &g) : g_(g) {}

  /// Smallest cover size if it is < limit, otherwise `limit`.
  int solve(VertexSet target, VertexSet allowed, int limit) {
    best_ = limit;
    rec(target, allowed, 0);
    return best_;
  }

 private:
  int packing_bound(VertexSet target, VertexSet allowed) const {
    VertexSet used;
    int count = 0;
    int max_cover = 0;
    for (Vertex w : allowed) max_cover = std::max(max_cover, (g_.closed_nbr(w) & target).size());
    for (Vertex u : target) {
      const VertexSet dominators = g_.closed_nbr(u) & allowed;
      if (!dominators.intersects(used)) {
        used |= dominators;
        ++count;
      }
    }
    if (max_cover == 0) return std::numeric_limits<int>::max() / 2;
    return std::max(count, (target.size() + max_cover - 1) / max_cover);
  }

  void rec(VertexSet target, VertexSet allowed, int depth) {
    if (target.empty()) {
      best_ = depth;
      return;
    }
    if (depth + 1 >= best_) return;
    Vertex pivot = -1;
    int fewest = kMaxVertices + 1;
    for (Vertex u : target) {
      const int c = (g_.closed_nbr(u) & allowed).size();
      if (c < fewest) {
        fewest = c;
        pivot = u;
        if (c <= 1) break;
      }
    }
    if (fewest == 0) return;
    if (depth + packing_bound(target, allowed) >= best_) return;

    VertexSet cand = g_.closed_nbr(pivot) & allowed;
    std::array<std::pair<int, Vertex>, kMaxVertices> order{};
    int k = 0;
    for (Vertex w : cand) order[k++] = {-(g_.closed_nbr(w) & target).size(), w};
    std::sort(order.begin(), order.begin() + k);
    for (int i = 0; i < k; ++i) {
      const Vertex w = order[i].second;
      rec(target - g_.closed_nbr(w), allowed, depth + 1);
      allowed.erase(w);
      if (depth + 1 >= best_) return;
    }
  }

  const Graph &g_;
  int best_ = 0;
};

/// Greedy max-coverage dominating set; seeds the branch-and-bound.
inline int greedy_domination_size(const Graph &g) {
  VertexSet undominated = g.vertices();
  int size = 0;
  while (!undominated.empty()) {
    Vertex pick = -1;
    int gain = -1;
    for (Vertex w = 0; w < g.order(); ++w) {
      const int c = (g.closed_nbr(w) & undominated).size();
      if (c > gain) {
        gain = c;
        pick = w;
      }
    }
    undominated -= g.closed_nbr(pick);
    ++size;
  }
  return size;
}

inline VertexSet lex_min_cover(const Graph &g, int size) {
  CoverSearch search(g);
  const int n = g.order();
  VertexSet chosen;
  Vertex start = 0;
  for (int k = 0; k < size; ++k) {
    const int need = size - k - 1;
    bool placed = false;
    for (Vertex w = start; w < n && !placed; ++w) {
      const VertexSet with_w = chosen.with(w);
      const VertexSet rest = g.vertices() - dominated_by(g, with_w);
      const VertexSet later = VertexSet::range(n) - VertexSet::range(w + 1);
      if (search.solve(rest, later, need + 1) <= need) {
        chosen = with_w;
        start = w + 1;
        placed = true;
      }
    }
    if (!placed) throw std::logic_error("lex_min_cover: no cover of the requested size");
  }
  return chosen;
}

}  // namespace detail

/// γ(G) without a witness; the fast path used by the classifier.
inline int domination_number(const Graph &g) {
  if (g.order() == 0) return 0;
  const int upper = detail::greedy_domination_size(g);
  return detail::CoverSearch(g).solve(g.vertices(), g.vertices(), upper);
}

/// Exhaustive oracle: tests subsets by increasing size, lexicographically
/// within a size; the first dominating subset is the witness.
inline DominationReport gamma_bruteforce(const Graph &g) {
  if (g.order() > kBruteForceLimit)
    throw CapacityError("gamma_bruteforce supports at most " + std::to_string(kBruteForceLimit) + " vertices");
  DominationReport report;
  for (int k = 0; k <= g.order(); ++k) {
    bool found = detail::for_each_combination(g.order(), k, [&](VertexSet s) {
      if (dominated_by(g, s) != g.vertices()) return false;
      report.gamma = k;
      report.witness = s;
      return true;
    });
    if (found) break;
  }
  return report;
}

/// Branch-and-bound γ(G) with the same lexicographically smallest witness
/// as gamma_bruteforce.
inline DominationReport gamma_exact(const Graph &g) {
  DominationReport report;
  report.gamma = domination_number(g);
  report.witness = detail::lex_min_cover(g, report.gamma);
  return report;
}

namespace detail {

class AllSetsSearch {
 public:
  AllSetsSearch(const Graph &g, std::vector<VertexSet> *out) : g_(g), out_(out) {}

  bool run(int k) {
    found_ = false;
    rec(0, VertexSet{}, VertexSet{}, k);
    return found_;
  }

 private:
  void rec(Vertex next, VertexSet chosen, VertexSet dominated, int remaining) {
    const int n = g_.order();
    const VertexSet undominated = g_.vertices() - dominated;
    if (remaining == 0) {
      if (undominated.empty()) {
        found_ = true;
        if (out_) out_->push_back(chosen);
      }
      return;
    }
    if (undominated.empty()) return;
    const Vertex u = undominated.first();
    const VertexSet need = g_.closed_nbr(u);
    for (Vertex w = next; w <= n - remaining; ++w) {
      if ((need - VertexSet::range(w)).empty()) break;
      rec(w + 1, chosen.with(w), dominated | g_.closed_nbr(w), remaining - 1);
      if (found_ && !out_) return;
    }
  }

  const Graph &g_;
  std::vector<VertexSet> *out_;
  bool found_ = false;
};

}  // namespace detail

/// Every minimum dominating set, in lexicographic order.
inline DominationReport all_minimum_dominating_sets(const Graph &g) {
  if (g.order() > kAllSetsLimit)
    throw CapacityError("all_minimum_dominating_sets supports at most " + std::to_string(kAllSetsLimit) + " vertices");
  DominationReport report;
  std::vector<VertexSet> sets;
  if (g.order() == 0) {
    sets.push_back(VertexSet{});
  } else {
    for (int k = 1; k <= g.order(); ++k) {
      if (detail::AllSetsSearch(g, nullptr).run(k)) {
        detail::AllSetsSearch(g, &sets).run(k);
        report.gamma = k;
        break;
      }
    }
  }
  report.witness = sets.front();
  report.all_sets = std::move(sets);
  return report;
}

struct IndependentDomination {
  int size = 0;
  VertexSet witness;
};

/// i(G): the minimum size of an independent dominating set.
inline IndependentDomination independent_domination_number(const Graph &g) {
  IndependentDomination best;
  if (g.order() == 0) return best;

  // Any maximal independent set dominates; build one greedily as the seed.
  VertexSet free = g.vertices();
  while (!free.empty()) {
    Vertex pick = free.first();
    for (Vertex w : free)
      if ((g.nbr(w) & free).size() > (g.nbr(pick) & free).size()) pick = w;
    best.witness.insert(pick);
    free -= g.closed_nbr(pick);
  }
  best.size = best.witness.size();

  struct Rec {
    const Graph &g;
    IndependentDomination &best;
    void operator()(VertexSet target, VertexSet allowed, VertexSet chosen) {
      const int depth = chosen.size();
      if (target.empty()) {
        best.size = depth;
        best.witness = chosen;
        return;
      }
      if (depth + 1 >= best.size) return;
      Vertex pivot = -1;
      int fewest = kMaxVertices + 1;
      for (Vertex u : target) {
        const int c = (g.closed_nbr(u) & allowed).size();
        if (c < fewest) {
          fewest = c;
          pivot = u;
        }
      }
      if (fewest == 0) return;
      VertexSet used;
      int packing = 0;
      for (Vertex u : target) {
        const VertexSet d = g.closed_nbr(u) & allowed;
        if (!d.intersects(used)) {
          used |= d;
          ++packing;
        }
      }
      if (depth + packing >= best.size) return;
      for (Vertex w : g.closed_nbr(pivot) & allowed) {
        (*this)(target - g.closed_nbr(w), allowed - g.closed_nbr(w), chosen.with(w));
        allowed.erase(w);
      }
    }
  };
  Rec{g, best}(g.vertices(), g.vertices(), VertexSet{});
  return best;
}

namespace detail {
inline int max_independent(const Graph &g, VertexSet p) {
  if (p.empty()) return 0;
  Vertex branch = -1;
  int max_deg = -1;
  for (Vertex v : p) {
    const int d = (g.nbr(v) & p).size();
    if (d <= 1) return 1 + max_independent(g, p - g.closed_nbr(v));
    if (d > max_deg) {
      max_deg = d;
      branch = v;
    }
  }
  return std::max(max_independent(g, p.without(branch)), 1 + max_independent(g, p - g.closed_nbr(branch)));
}
}  // namespace detail

/// α(G)
inline int independence_number(const Graph &g) { return detail::max_independent(g, g.vertices()); }

/// γ of a forest by rooted dynamic programming; throws if G has a cycle.
inline int gamma_tree(const Graph &g) {
  const int n = g.order();
  const auto comps = connected_components(g);
  if (g.edge_count() != n - static_cast<int>(comps.size())) throw std::invalid_argument("gamma_tree: input is not a forest");

  constexpr int kInf = std::numeric_limits<int>::max() / 4;
  // in_set: v in D; by_child: v not in D, dominated by a child;
  // needs_parent: v not in D, undominated, everything below dominated.
  std::vector<int> in_set(n), by_child(n), needs_parent(n), parent(n, -1), order;
  order.reserve(n);
  int total = 0;
  for (VertexSet comp : comps) {
    const Vertex root = comp.first();
    order.clear();
    order.push_back(root);
    for (std::size_t i = 0; i < order.size(); ++i) {
      const Vertex v = order[i];
      for (Vertex c : g.nbr(v)) {
        if (c == parent[v]) continue;
        parent[c] = v;
        order.push_back(c);
      }
    }
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      const Vertex v = *it;
      int a = 1, c = 0, b = 0, extra = kInf;
      bool any_child = false;
      for (Vertex ch : g.nbr(v)) {
        if (ch == parent[v]) continue;
        any_child = true;
        a += std::min({in_set[ch], by_child[ch], needs_parent[ch]});
        c = std::min(kInf, c + by_child[ch]);
        const int best = std::min(in_set[ch], by_child[ch]);
        b = std::min(kInf, b + best);
        extra = std::min(extra, in_set[ch] - best);
      }
      in_set[v] = a;
      needs_parent[v] = c;
      by_child[v] = any_child ? std::min(kInf, b + extra) : kInf;
    }
    total += std::min(in_set[root], by_child[root]);
  }
  return total;
}

}  // namespace domcore
