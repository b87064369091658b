#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <mutex>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "domcore/canonical.hpp"
#include "domcore/classify.hpp"
#include "domcore/enumerate.hpp"
#include "domcore/graph6.hpp"
#include "domcore/mds.hpp"
#include "domcore/recognize.hpp"

namespace domcore {

inline constexpr int kVerifyLimit = 8;
/// The all-subsets pattern oracle is only run up to this order.
inline constexpr int kPatternOracleLimit = 7;

struct CheckResult {
  std::string name;
  std::uint64_t applicable = 0;
  std::uint64_t violations = 0;
  /// graph6 of the first violating graph (smallest order, then enumeration order).
  std::optional<std::string> first_counterexample;
};

struct VerificationReport {
  int n_max = 0;
  /// graphs_per_order[n] for n = 1..n_max (index 0 unused).
  std::vector<std::uint64_t> graphs_per_order;
  std::vector<CheckResult> checks;

  std::uint64_t graphs_checked() const {
    std::uint64_t t = 0;
    for (auto c : graphs_per_order) t += c;
    return t;
  }
  bool ok() const {
    return std::all_of(checks.begin(), checks.end(), [](const auto &c) { return c.violations == 0; });
  }
  const CheckResult *find(std::string_view name) const {
    for (const auto &c : checks)
      if (c.name == name) return &c;
    return nullptr;
  }
};

/// Outcome of one check on one graph: not applicable, held, or violated.
enum class Outcome { Skip, Pass, Fail };

namespace detail {

inline Outcome holds(bool b) { return b ? Outcome::Pass : Outcome::Fail; }

/// Everything the checks share for one graph.
struct GraphFacts {
  const Graph &g;
  std::uint64_t key;
  ClassificationReport report;
  DominationReport all;  // all_sets populated
  ClassFlags flags;
  bool connected;
  /// core and corona straight from the definition (intersection/union of γ-sets).
  VertexSet core_def, corona_def;

  GraphFacts(const Graph &graph, std::uint64_t k)
      : g(graph),
        key(k),
        report(classify_all(graph)),
        all(all_minimum_dominating_sets(graph)),
        flags(class_flags(graph)),
        connected(is_connected(graph)),
        core_def(graph.vertices()) {
    for (VertexSet s : gamma_sets()) {
      core_def &= s;
      corona_def |= s;
    }
  }

  const std::vector<VertexSet> &gamma_sets() const { return *all.all_sets; }
};

inline bool any_subset_dominates_without(const Graph &g, Vertex v, int size) {
  const VertexSet pool = g.vertices() - g.closed_nbr(v);
  const VertexSet target = g.vertices().without(v);
  const std::vector<Vertex> members = pool.to_vector();
  if (size > static_cast<int>(members.size())) return false;
  return for_each_combination(static_cast<int>(members.size()), size, [&](VertexSet idx) {
    VertexSet s;
    for (int i : idx) s.insert(members[i]);
    return target.subset_of(dominated_by(g, s));
  });
}

using Check = std::pair<std::string, std::function<Outcome(const GraphFacts &)>>;

inline std::vector<Check> corpus_checks() {
  std::vector<Check> checks;
  auto add = [&](std::string name, std::function<Outcome(const GraphFacts &)> fn) {
    checks.emplace_back(std::move(name), std::move(fn));
  };

  // graph-core
  add("distance-shells-cover-closed-neighborhood", [](const GraphFacts &f) {
    for (Vertex v = 0; v < f.g.order(); ++v)
      if ((distance_shell(f.g, v, 0) | distance_shell(f.g, v, 1)) != f.g.closed_neighborhood(v)) return Outcome::Fail;
    return Outcome::Pass;
  });
  add("delete-reinsert-isomorphic", [](const GraphFacts &f) {
    const CanonicalForm form = canonical_form(f.g);
    for (Vertex v = 0; v < f.g.order(); ++v) {
      const auto del = delete_vertex_mapped(f.g, v);
      VertexSet nb;
      for (Vertex u : f.g.nbr(v)) nb.insert(del.old_to_new[u]);
      if (canonical_form(add_vertex(del.graph, nb)) != form) return Outcome::Fail;
    }
    return Outcome::Pass;
  });
  add("pendant-adds-one-vertex-one-edge", [](const GraphFacts &f) {
    const int n = f.g.order(), m = f.g.edge_count();
    for (Vertex v = 0; v < n; ++v) {
      const Graph p = add_pendant(f.g, v);
      if (p.order() != n + 1 || p.edge_count() != m + 1 || p.closed_neighborhood(n) != VertexSet{n, v})
        return Outcome::Fail;
    }
    return Outcome::Pass;
  });
  add("whole-vertex-set-dominates", [](const GraphFacts &f) {
    if (f.g.order() == 0) return Outcome::Skip;
    return holds(is_dominating(f.g, f.g.vertices()));
  });
  add("private-neighbors-within-closed-neighborhood", [](const GraphFacts &f) {
    for (VertexSet s : f.gamma_sets())
      for (Vertex u : s)
        if (!private_neighbors(f.g, u, s).subset_of(f.g.closed_neighborhood(u))) return Outcome::Fail;
    return Outcome::Pass;
  });

  // mds-solver
  add("gamma-exact-matches-bruteforce", [](const GraphFacts &f) {
    const auto a = gamma_exact(f.g), b = gamma_bruteforce(f.g);
    return holds(a.gamma == b.gamma && a.witness == b.witness && f.all.gamma == a.gamma &&
                 f.gamma_sets().front() == a.witness);
  });
  add("gamma-le-i-le-alpha", [](const GraphFacts &f) {
    const auto i = independent_domination_number(f.g);
    const int alpha = independence_number(f.g);
    return holds(f.report.gamma <= i.size && i.size <= alpha && i.witness.size() == i.size &&
                 is_independent(f.g, i.witness) && is_dominating(f.g, i.witness));
  });
  add("gamma-sets-are-minimum-and-sorted", [](const GraphFacts &f) {
    const auto &sets = f.gamma_sets();
    for (std::size_t k = 0; k < sets.size(); ++k) {
      if (sets[k].size() != f.all.gamma || !is_dominating(f.g, sets[k])) return Outcome::Fail;
      if (k > 0 && !lex_less(sets[k - 1], sets[k])) return Outcome::Fail;
    }
    return Outcome::Pass;
  });
  add("private-neighbors-nonempty-in-gamma-sets", [](const GraphFacts &f) {
    for (VertexSet s : f.gamma_sets())
      for (Vertex u : s)
        if (private_neighbors(f.g, u, s).empty()) return Outcome::Fail;
    return Outcome::Pass;
  });
  add("gamma-tree-matches-exact", [](const GraphFacts &f) {
    if (!f.flags.tree) return Outcome::Skip;
    return holds(gamma_tree(f.g) == f.report.gamma);
  });
  add("claw-free-gamma-equals-i", [](const GraphFacts &f) {
    if (!f.flags.claw_free) return Outcome::Skip;
    return holds(independent_domination_number(f.g).size == f.report.gamma);
  });

  // classifier
  add("classifier-matches-enumeration", [](const GraphFacts &f) {
    return holds(classify_by_enumeration(f.g) == f.report);
  });
  add("report-partition-consistent", [](const GraphFacts &f) {
    const auto &r = f.report;
    const auto &s = r.summary;
    return holds(r.core().subset_of(r.corona()) && r.anticore() == f.g.vertices() - r.corona() &&
                 s.plus + s.zero + s.minus == f.g.order() && s.core + s.corona_only + s.anticore == f.g.order());
  });
  add("theorem-v-plus", [](const GraphFacts &f) {
    for (Vertex v = 0; v < f.g.order(); ++v) {
      const auto c = f.report.per_vertex[v];
      const bool rhs = !f.g.nbr(v).empty() && f.core_def.contains(v) &&
                       !any_subset_dominates_without(f.g, v, f.report.gamma);
      if ((c.removal == Removal::Plus) != rhs) return Outcome::Fail;
    }
    return Outcome::Pass;
  });
  add("theorem-v-minus", [](const GraphFacts &f) {
    for (Vertex v = 0; v < f.g.order(); ++v) {
      bool rhs = false;
      for (VertexSet s : f.gamma_sets())
        if (s.contains(v) && private_neighbors(f.g, v, s) == VertexSet::single(v)) rhs = true;
      if ((f.report.per_vertex[v].removal == Removal::Minus) != rhs) return Outcome::Fail;
    }
    return Outcome::Pass;
  });
  add("pendant-gamma-sets-contain-u-or-v", [](const GraphFacts &f) {
    const int u = f.g.order();
    for (Vertex v = 0; v < f.g.order(); ++v) {
      const auto sets = *all_minimum_dominating_sets(add_pendant(f.g, v)).all_sets;
      bool some_u = false, some_v = false;
      for (VertexSet s : sets) {
        if (!s.contains(u) && !s.contains(v)) return Outcome::Fail;
        some_u = some_u || s.contains(u);
        some_v = some_v || s.contains(v);
      }
      if (some_u && !some_v) return Outcome::Fail;
    }
    return Outcome::Pass;
  });
  add("anticore-disjoint-from-v-minus", [](const GraphFacts &f) {
    return holds(!f.report.anticore().intersects(f.report.with_removal(Removal::Minus)));
  });
  add("core-v-minus-are-isolated", [](const GraphFacts &f) {
    VertexSet isolated;
    for (Vertex v = 0; v < f.g.order(); ++v)
      if (f.g.nbr(v).empty()) isolated.insert(v);
    return holds((f.report.core() & f.report.with_removal(Removal::Minus)) == isolated);
  });
  add("simplicial-vertex-not-in-core", [](const GraphFacts &f) {
    if (!f.connected || f.g.order() < 2) return Outcome::Skip;
    for (Vertex v = 0; v < f.g.order(); ++v)
      if (is_clique(f.g, f.g.closed_nbr(v)) && f.report.core().contains(v)) return Outcome::Fail;
    return Outcome::Pass;
  });
  add("cut-vertex-lemma", [](const GraphFacts &f) {
    bool applied = false;
    for (Vertex v : cut_vertices(f.g) & f.report.core()) {
      bool cliques = true;
      for (VertexSet c : connected_components(f.g, f.g.vertices().without(v)))
        cliques = cliques && is_clique(f.g, c & f.g.nbr(v));
      if (!cliques) continue;
      applied = true;
      if (f.report.per_vertex[v].removal != Removal::Plus) return Outcome::Fail;
    }
    return applied ? Outcome::Pass : Outcome::Skip;
  });
  add("attachment-clique-lemma", [](const GraphFacts &f) {
    if (!f.connected || f.g.order() < 2) return Outcome::Skip;
    bool applied = false;
    for (Vertex v : f.report.core()) {
      bool cliques = true;
      for (VertexSet c : connected_components(f.g, f.g.vertices() - f.g.closed_nbr(v))) {
        VertexSet attach;
        for (Vertex u : f.g.nbr(v))
          if (f.g.nbr(u).intersects(c)) attach.insert(u);
        cliques = cliques && is_clique(f.g, attach);
      }
      if (!cliques) continue;
      applied = true;
      if (f.report.per_vertex[v].removal != Removal::Plus) return Outcome::Fail;
    }
    return applied ? Outcome::Pass : Outcome::Skip;
  });

  // class-recognizers
  add("class-flag-implications", [](const GraphFacts &f) {
    const bool tree_ok = !f.flags.tree || (f.flags.bipartite && f.flags.chordal);
    return holds(tree_ok && f.flags.cograph == is_cograph_by_decomposition(f.g));
  });
  add("twin-clique-partition-preserves-gamma", [](const GraphFacts &f) {
    for (Vertex v = 0; v < f.g.order(); ++v) {
      const auto tcp = twin_clique_partition(f.g, v);
      VertexSet covered;
      for (std::size_t i = 0; i < tcp.cliques.size(); ++i) {
        const VertexSet k = tcp.cliques[i];
        if (covered.intersects(k) || !is_clique(f.g, k)) return Outcome::Fail;
        covered |= k;
        for (Vertex a : k)
          if (f.g.closed_nbr(a) != f.g.closed_nbr(k.first())) return Outcome::Fail;
        for (std::size_t j = 0; j < tcp.cliques.size(); ++j) {
          if (i == j) continue;
          int joined = 0;
          for (Vertex a : k) joined += (f.g.nbr(a) & tcp.cliques[j]).size();
          const int full = k.size() * tcp.cliques[j].size();
          if (joined != 0 && joined != full) return Outcome::Fail;
        }
      }
      if (covered != f.g.vertices() || tcp.cliques[0] != VertexSet::single(v)) return Outcome::Fail;
      if (domination_number(tcp.reduced) != f.report.gamma) return Outcome::Fail;
    }
    return Outcome::Pass;
  });
  add("twin-clique-partition-core-correspondence", [](const GraphFacts &f) {
    for (Vertex v = 0; v < f.g.order(); ++v) {
      const auto tcp = twin_clique_partition(f.g, v);
      const auto h_sets = *all_minimum_dominating_sets(tcp.reduced).all_sets;
      for (std::size_t i = 0; i < tcp.cliques.size(); ++i) {
        bool always_one = true, never = true;
        for (VertexSet s : f.gamma_sets()) {
          const int meet = (s & tcp.cliques[i]).size();
          always_one = always_one && meet == 1;
          never = never && meet == 0;
        }
        bool in_all = true, in_none = true;
        for (VertexSet s : h_sets) {
          in_all = in_all && s.contains(static_cast<Vertex>(i));
          in_none = in_none && !s.contains(static_cast<Vertex>(i));
        }
        if (always_one != in_all || never != in_none) return Outcome::Fail;
      }
    }
    return Outcome::Pass;
  });
  add("chordal-core-equals-v-plus", [](const GraphFacts &f) {
    if (!f.connected || f.g.order() < 2 || !f.flags.chordal) return Outcome::Skip;
    return holds(f.report.core() == f.report.with_removal(Removal::Plus));
  });
  add("cograph-core-at-most-one", [](const GraphFacts &f) {
    if (!f.connected || f.g.order() < 2 || !f.flags.cograph) return Outcome::Skip;
    const VertexSet core = f.report.core();
    return holds(core.size() <= 1 && core.subset_of(f.report.with_removal(Removal::Plus)));
  });
  add("claw-p6-free-core-in-v-plus", [](const GraphFacts &f) {
    if (!f.connected || f.g.order() < 2 || !f.flags.claw_free || f.flags.has(Pattern::P6)) return Outcome::Skip;
    return holds(f.report.core().subset_of(f.report.with_removal(Removal::Plus)));
  });
  add("claw-bull-free-core-in-v-plus", [](const GraphFacts &f) {
    if (!f.connected || f.g.order() < 2 || !f.flags.claw_free || f.flags.has(Pattern::Bull)) return Outcome::Skip;
    return holds(f.report.core().subset_of(f.report.with_removal(Removal::Plus)));
  });
  add("bipartite-claw-free-is-path-or-even-cycle", [](const GraphFacts &f) {
    if (!f.connected || f.g.order() < 2 || !f.flags.bipartite || !f.flags.claw_free) return Outcome::Skip;
    return holds(is_path_graph(f.g) || (is_cycle_graph(f.g) && f.g.order() % 2 == 0));
  });
  add("pattern-search-matches-bruteforce", [](const GraphFacts &f) {
    if (f.g.order() > kPatternOracleLimit) return Outcome::Skip;
    for (std::size_t i = 0; i < kPatterns.size(); ++i)
      if (f.flags.contains[i] != contains_induced_bruteforce(f.g, pattern_graph(kPatterns[i]))) return Outcome::Fail;
    return Outcome::Pass;
  });

  // enumeration-search
  add("graph6-roundtrip", [](const GraphFacts &f) {
    const std::string s = write_graph6(f.g);
    const Graph back = parse_graph6(s);
    return holds(back == f.g && write_graph6(back) == s);
  });
  add("canonical-form-relabel-invariant", [](const GraphFacts &f) {
    std::mt19937_64 rng(f.key * 1000003ULL + f.g.order());
    std::vector<int> perm(f.g.order());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    return holds(canonical_form(relabel(f.g, perm)) == canonical_form(f.g));
  });
  return checks;
}

inline void fold(VerificationReport &report, std::vector<std::pair<int, std::uint64_t>> &first_at, const Graph &g,
                 std::uint64_t key, const std::vector<Outcome> &outcomes) {
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    auto &c = report.checks[i];
    if (outcomes[i] == Outcome::Skip) continue;
    ++c.applicable;
    if (outcomes[i] != Outcome::Fail) continue;
    ++c.violations;
    const std::pair<int, std::uint64_t> at{g.order(), key};
    if (!c.first_counterexample || at < first_at[i]) {
      c.first_counterexample = write_graph6(g);
      first_at[i] = at;
    }
  }
}
}  // namespace detail

/// Checks every invariant over all connected graphs of order 1..n_max.
/// Violations are reported, not thrown.
inline VerificationReport verify_corpus(int n_max, int jobs = 1) {
  if (n_max < 1 || n_max > kVerifyLimit)
    throw CapacityError("verify_corpus supports n_max in 1.." + std::to_string(kVerifyLimit));
  const auto checks = detail::corpus_checks();
  VerificationReport report;
  report.n_max = n_max;
  report.graphs_per_order.assign(n_max + 1, 0);
  for (const auto &[name, fn] : checks) report.checks.push_back(CheckResult{name, 0, 0, std::nullopt});
  std::vector<std::pair<int, std::uint64_t>> first_at(checks.size());

  ConnectedGraphs gen(jobs);
  std::mutex mu;
  for (int n = 1; n <= n_max; ++n) {
    gen.for_each(n, [&](const Graph &g, std::uint64_t key) {
      // Facts are computed outside the lock; folding is serialized.
      const detail::GraphFacts facts(g, key);
      std::vector<Outcome> outcomes;
      for (const auto &[name, fn] : checks) outcomes.push_back(fn(facts));
      std::lock_guard lock(mu);
      ++report.graphs_per_order[n];
      detail::fold(report, first_at, g, key, outcomes);
    });
  }
  return report;
}

}  // namespace domcore
