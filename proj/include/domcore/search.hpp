#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <functional>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "domcore/canonical.hpp"
#include "domcore/classify.hpp"
#include "domcore/enumerate.hpp"
#include "domcore/recognize.hpp"

namespace domcore {

// ---------------------------------------------------------------------------
// Partition signatures
// ---------------------------------------------------------------------------

/// An intersection of classes, e.g. "core ∩ V⁰ ∩ cut vertices".
/// Unset fields do not constrain.
struct ClassSelector {
  std::optional<Removal> removal;
  std::optional<Membership> membership;
  bool cut_vertex = false;

  bool matches(VertexClassification c, bool is_cut) const {
    return (!removal || c.removal == *removal) && (!membership || c.membership == *membership) &&
           (!cut_vertex || is_cut);
  }
};

/// min ≤ |selected vertices| ≤ max
struct CountConstraint {
  ClassSelector select;
  int min = 0;
  int max = kMaxVertices;
};

/// A condition on the core/corona/anticore and V⁺/V⁰/V⁻ partitions.
struct PartitionSignature {
  std::string name;
  std::string description;
  std::vector<CountConstraint> constraints;

  bool evaluate(const Graph &g, const ClassificationReport &r) const {
    const VertexSet cuts = needs_cut_vertices() ? cut_vertices(g) : VertexSet{};
    for (const auto &c : constraints) {
      int count = 0;
      for (Vertex v = 0; v < static_cast<int>(r.per_vertex.size()); ++v)
        count += c.select.matches(r.per_vertex[v], cuts.contains(v));
      if (count < c.min || count > c.max) return false;
    }
    return true;
  }

  bool needs_cut_vertices() const {
    return std::any_of(constraints.begin(), constraints.end(), [](const auto &c) { return c.select.cut_vertex; });
  }
};

namespace signatures {

inline CountConstraint nonempty(ClassSelector s) { return {s, 1, kMaxVertices}; }
inline CountConstraint empty(ClassSelector s) { return {s, 0, 0}; }

/// V⁺, V⁰, V⁻ all nonempty and anticore empty.
inline PartitionSignature plus_zero_minus_no_anticore() {
  return {"min-plus-zero-minus-empty-anticore",
          "V+, V0, V- all nonempty and anticore empty",
          {nonempty({Removal::Plus, {}, false}), nonempty({Removal::Zero, {}, false}),
           nonempty({Removal::Minus, {}, false}), empty({{}, Membership::Anticore, false})}};
}

/// Every vertex in V⁰ and core nonempty.
inline PartitionSignature all_zero_core_nonempty() {
  return {"all-zero-core-nonempty",
          "V = V0 and core nonempty",
          {empty({Removal::Plus, {}, false}), empty({Removal::Minus, {}, false}),
           nonempty({{}, Membership::Core, false})}};
}

/// Exactly one vertex in V⁺, the rest in V⁰, some V⁰ vertex in core.
inline PartitionSignature one_plus_rest_zero_core_zero() {
  return {"one-plus-rest-zero-core-zero",
          "exactly one vertex in V+, all others in V0, some V0 vertex in core",
          {{{Removal::Plus, {}, false}, 1, 1},
           empty({Removal::Minus, {}, false}),
           nonempty({Removal::Zero, Membership::Core, false})}};
}

/// Some cut vertex lies in core ∩ V⁰.
inline PartitionSignature cut_vertex_core_zero() {
  return {"cut-vertex-core-zero", "some cut vertex in core and V0", {nonempty({Removal::Zero, Membership::Core, true})}};
}

/// V = (core ∩ V⁰) ∪ anticore.
inline PartitionSignature core_zero_or_anticore() {
  return {"core-zero-or-anticore",
          "every vertex in core and V0, or in anticore",
          {empty({{}, Membership::CoronaOnly, false}), empty({Removal::Plus, Membership::Core, false}),
           empty({Removal::Minus, Membership::Core, false}), nonempty({Removal::Zero, Membership::Core, false})}};
}

/// Some vertex in core ∩ V⁰.
inline PartitionSignature core_zero() {
  return {"core-zero", "some vertex in core and V0", {nonempty({Removal::Zero, Membership::Core, false})}};
}

inline std::vector<PartitionSignature> all() {
  return {plus_zero_minus_no_anticore(), all_zero_core_nonempty(), one_plus_rest_zero_core_zero(),
          cut_vertex_core_zero(),        core_zero_or_anticore(),  core_zero()};
}

inline PartitionSignature by_name(std::string_view name) {
  for (auto &s : all())
    if (s.name == name) return s;
  throw std::invalid_argument("unknown signature '" + std::string(name) + "'");
}

}  // namespace signatures

// ---------------------------------------------------------------------------
// Graph class filters
// ---------------------------------------------------------------------------

/// Conjunction of class requirements parsed from a comma-separated list:
/// chordal, cograph, bipartite, tree, claw-free, cubic, <pattern>-free.
struct ClassFilter {
  std::string text;
  std::vector<std::function<bool(const Graph &)>> tests;

  bool operator()(const Graph &g) const {
    return std::all_of(tests.begin(), tests.end(), [&](const auto &t) { return t(g); });
  }

  static ClassFilter parse(std::string_view text) {
    ClassFilter f;
    f.text = std::string(text);
    std::stringstream ss(f.text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      if (tok.empty()) continue;
      if (tok == "chordal") {
        f.tests.push_back(is_chordal);
      } else if (tok == "cograph") {
        f.tests.push_back(is_cograph);
      } else if (tok == "bipartite") {
        f.tests.push_back(is_bipartite);
      } else if (tok == "tree") {
        f.tests.push_back(is_tree);
      } else if (tok == "cubic") {
        f.tests.push_back([](const Graph &g) { return is_regular(g, 3); });
      } else if (tok.size() > 5 && tok.ends_with("-free")) {
        const Pattern p = parse_pattern(std::string_view(tok).substr(0, tok.size() - 5));
        f.tests.push_back([p](const Graph &g) { return !contains_induced(g, p); });
      } else {
        throw std::invalid_argument("unknown class '" + tok + "'");
      }
    }
    return f;
  }
};

// ---------------------------------------------------------------------------
// Signature evaluation with early exits
// ---------------------------------------------------------------------------

/// Classifies g against sig, stopping as soon as the outcome is decided by
/// the removal classes or by a partial membership pass. On a match the full
/// theorem-based report is returned.
inline std::optional<ClassificationReport> match_signature(const Graph &g, const PartitionSignature &sig) {
  const int n = g.order();
  const int gamma = domination_number(g);
  const std::vector<int> gamma_without = gamma_after_removal(g);
  const VertexSet cuts = sig.needs_cut_vertices() ? cut_vertices(g) : VertexSet{};

  std::vector<Removal> removal(n);
  for (Vertex v = 0; v < n; ++v) removal[v] = removal_from(gamma_without[v], gamma);

  // Relax each selector to its removal/cut part: an upper bound on the
  // final count, and exact when the selector ignores membership.
  for (const auto &c : sig.constraints) {
    int relaxed = 0;
    for (Vertex v = 0; v < n; ++v)
      relaxed += (!c.select.removal || removal[v] == *c.select.removal) && (!c.select.cut_vertex || cuts.contains(v));
    if (relaxed < c.min) return std::nullopt;
    if (!c.select.membership && relaxed > c.max) return std::nullopt;
  }

  ClassificationReport report;
  report.gamma = gamma;
  report.per_vertex.resize(n);
  std::vector<int> running(sig.constraints.size(), 0);
  for (Vertex v = 0; v < n; ++v) {
    auto &c = report.per_vertex[v];
    c.removal = removal[v];
    if (detail::in_core_given(g, v, gamma, gamma_without[v]))
      c.membership = Membership::Core;
    else if (detail::in_anticore_given(g, v, gamma))
      c.membership = Membership::Anticore;
    else
      c.membership = Membership::CoronaOnly;
    for (std::size_t i = 0; i < sig.constraints.size(); ++i)
      if (sig.constraints[i].select.matches(c, cuts.contains(v)) && ++running[i] > sig.constraints[i].max)
        return std::nullopt;
  }
  report.summary = summarize(report.per_vertex);
  if (!sig.evaluate(g, report)) return std::nullopt;
  return report;
}

// ---------------------------------------------------------------------------
// Exhaustive search over connected graphs
// ---------------------------------------------------------------------------

struct Witness {
  Graph graph;
  CanonicalForm form;
  ClassificationReport report;
};

struct OrderResult {
  int n = 0;
  std::uint64_t graphs_checked = 0;
  std::uint64_t graphs_in_class = 0;
  std::vector<Witness> witnesses;
  /// More witnesses exist at this order than were kept (first-k mode).
  bool truncated = false;
};

enum class SearchStatus { Found, Exhausted, BudgetExceeded };

constexpr std::string_view to_string(SearchStatus s) {
  switch (s) {
    case SearchStatus::Found: return "found";
    case SearchStatus::Exhausted: return "exhausted";
    case SearchStatus::BudgetExceeded: return "budget_exceeded";
  }
  return "?";
}

struct SearchOptions {
  int n_min = 1;
  int n_max = 8;
  /// Keep at most this many witnesses per order (earliest in enumeration order).
  std::optional<std::size_t> first_k;
  /// Stop after the first order that has a witness.
  bool stop_at_first_order = false;
  /// Abort once this many graphs have been examined; 0 means unlimited.
  std::uint64_t max_graphs = 0;
  int jobs = 1;
  std::optional<ClassFilter> filter;
};

struct SearchResult {
  std::string signature;
  int n_max = 0;
  SearchStatus status = SearchStatus::Exhausted;
  std::vector<OrderResult> orders;

  /// Smallest order with a witness, if any.
  std::optional<int> smallest_order() const {
    for (const auto &o : orders)
      if (!o.witnesses.empty()) return o.n;
    return std::nullopt;
  }
};

/// Examines every connected graph of order n_min..n_max (one per
/// isomorphism class) and collects those matching `sig`. Witnesses of an
/// order are sorted by canonical form, so results do not depend on `jobs`.
inline SearchResult search_signature(const PartitionSignature &sig, const SearchOptions &opt,
                                     ConnectedGraphs *shared = nullptr) {
  if (opt.n_max > kEnumerationLimit)
    throw CapacityError("search supports n_max <= " + std::to_string(kEnumerationLimit));
  ConnectedGraphs local(opt.jobs);
  ConnectedGraphs &gen = shared ? *shared : local;

  SearchResult result;
  result.signature = sig.name;
  result.n_max = opt.n_max;
  std::uint64_t examined = 0;
  for (int n = std::max(1, opt.n_min); n <= opt.n_max; ++n) {
    OrderResult order;
    order.n = n;
    std::mutex mu;
    std::vector<std::pair<std::uint64_t, Witness>> found;
    std::atomic<std::uint64_t> checked{0}, in_class{0};
    std::atomic<bool> over_budget{false};
    gen.for_each(n, [&](const Graph &g, std::uint64_t key) {
      if (over_budget.load(std::memory_order_relaxed)) return;
      const std::uint64_t seen = examined + checked.fetch_add(1, std::memory_order_relaxed) + 1;
      if (opt.max_graphs && seen > opt.max_graphs) {
        over_budget = true;
        return;
      }
      if (opt.filter && !(*opt.filter)(g)) return;
      in_class.fetch_add(1, std::memory_order_relaxed);
      if (opt.first_k && opt.jobs == 1 && found.size() > *opt.first_k) return;
      if (auto report = match_signature(g, sig)) {
        std::lock_guard lock(mu);
        found.push_back({key, Witness{g, canonical_form(g), std::move(*report)}});
      }
    });
    order.graphs_checked = std::min<std::uint64_t>(checked.load(), opt.max_graphs ? opt.max_graphs - examined : ~0ULL);
    order.graphs_in_class = in_class.load();
    examined += order.graphs_checked;

    std::sort(found.begin(), found.end(), [](const auto &a, const auto &b) { return a.first < b.first; });
    if (opt.first_k && found.size() > *opt.first_k) {
      found.resize(*opt.first_k);
      order.truncated = true;
    }
    for (auto &[key, w] : found) order.witnesses.push_back(std::move(w));
    std::sort(order.witnesses.begin(), order.witnesses.end(),
              [](const Witness &a, const Witness &b) { return a.form < b.form; });
    result.orders.push_back(std::move(order));

    if (over_budget) {
      result.status = SearchStatus::BudgetExceeded;
      return result;
    }
    if (opt.stop_at_first_order && !result.orders.back().witnesses.empty()) break;
  }
  result.status = result.smallest_order() ? SearchStatus::Found : SearchStatus::Exhausted;
  return result;
}

}  // namespace domcore
