#pragma once

#include <array>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "domcore/graph.hpp"
#include "domcore/mds.hpp"

namespace domcore {

/// Sign of γ(G-v) - γ(G).
enum class Removal { Plus, Zero, Minus };

/// core: in every γ-set; corona only: in some but not all; anticore: in none.
enum class Membership { Core, CoronaOnly, Anticore };

struct VertexClassification {
  Removal removal = Removal::Zero;
  Membership membership = Membership::CoronaOnly;
  bool operator==(const VertexClassification &) const = default;
};

struct ClassSummary {
  int plus = 0, zero = 0, minus = 0;
  int core = 0, corona_only = 0, anticore = 0;
  bool operator==(const ClassSummary &) const = default;
};

struct ClassificationReport {
  int gamma = 0;
  std::vector<VertexClassification> per_vertex;
  ClassSummary summary;

  bool operator==(const ClassificationReport &) const = default;

  VertexSet with_removal(Removal r) const {
    VertexSet s;
    for (int v = 0; v < static_cast<int>(per_vertex.size()); ++v)
      if (per_vertex[v].removal == r) s.insert(v);
    return s;
  }
  VertexSet with_membership(Membership m) const {
    VertexSet s;
    for (int v = 0; v < static_cast<int>(per_vertex.size()); ++v)
      if (per_vertex[v].membership == m) s.insert(v);
    return s;
  }
  VertexSet core() const { return with_membership(Membership::Core); }
  VertexSet anticore() const { return with_membership(Membership::Anticore); }
  VertexSet corona() const { return core() | with_membership(Membership::CoronaOnly); }
};

constexpr std::string_view to_string(Removal r) {
  switch (r) {
    case Removal::Plus: return "PLUS";
    case Removal::Zero: return "ZERO";
    case Removal::Minus: return "MINUS";
  }
  return "?";
}

constexpr std::string_view to_string(Membership m) {
  switch (m) {
    case Membership::Core: return "CORE";
    case Membership::CoronaOnly: return "CORONA_ONLY";
    case Membership::Anticore: return "ANTICORE";
  }
  return "?";
}

inline Removal removal_from(int gamma_without, int gamma) {
  if (gamma_without > gamma) return Removal::Plus;
  if (gamma_without < gamma) return Removal::Minus;
  return Removal::Zero;
}

/// γ(G-v) for every v; γ of the empty graph is 0.
inline std::vector<int> gamma_after_removal(const Graph &g) {
  std::vector<int> out(g.order());
  for (Vertex v = 0; v < g.order(); ++v) out[v] = domination_number(delete_vertex(g, v));
  return out;
}

inline Removal removal_class(const Graph &g, Vertex v) {
  g.neighbors(v);
  return removal_from(domination_number(delete_vertex(g, v)), domination_number(g));
}

namespace detail {
inline bool in_anticore_given(const Graph &g, Vertex v, int gamma) {
  return domination_number(add_pendant(g, v)) == gamma + 1;
}

/// Core test with γ(G) and γ(G-v) supplied: v is isolated, or γ(G-v) > γ(G),
/// or γ(G-v) = γ(G) and every neighbor of v is in anticore(G-v).
inline bool in_core_given(const Graph &g, Vertex v, int gamma, int gamma_without) {
  if (g.nbr(v).empty()) return true;
  if (gamma_without > gamma) return true;
  if (gamma_without < gamma) return false;
  const Graph rest = delete_vertex(g, v);
  for (Vertex u : g.nbr(v)) {
    const Vertex shifted = u < v ? u : u - 1;
    if (!in_anticore_given(rest, shifted, gamma_without)) return false;
  }
  return true;
}
}  // namespace detail

/// v is in no minimum dominating set iff attaching a pendant vertex to v
/// raises γ by one.
inline bool in_anticore(const Graph &g, Vertex v) {
  g.neighbors(v);
  return detail::in_anticore_given(g, v, domination_number(g));
}

inline bool in_core(const Graph &g, Vertex v) {
  g.neighbors(v);
  return detail::in_core_given(g, v, domination_number(g), domination_number(delete_vertex(g, v)));
}

inline Membership membership_class(const Graph &g, Vertex v) {
  if (in_core(g, v)) return Membership::Core;
  if (in_anticore(g, v)) return Membership::Anticore;
  return Membership::CoronaOnly;
}

inline ClassSummary summarize(const std::vector<VertexClassification> &per_vertex) {
  ClassSummary s;
  for (const auto &c : per_vertex) {
    switch (c.removal) {
      case Removal::Plus: ++s.plus; break;
      case Removal::Zero: ++s.zero; break;
      case Removal::Minus: ++s.minus; break;
    }
    switch (c.membership) {
      case Membership::Core: ++s.core; break;
      case Membership::CoronaOnly: ++s.corona_only; break;
      case Membership::Anticore: ++s.anticore; break;
    }
  }
  return s;
}

/// Theorem-based classification from γ(G), γ(G-v) and the pendant test,
/// with γ(G-v) already known (lets callers reuse a removal pass).
inline ClassificationReport classify_with(const Graph &g, int gamma, const std::vector<int> &gamma_without) {
  ClassificationReport report;
  report.gamma = gamma;
  report.per_vertex.resize(g.order());
  for (Vertex v = 0; v < g.order(); ++v) {
    auto &c = report.per_vertex[v];
    c.removal = removal_from(gamma_without[v], gamma);
    if (detail::in_core_given(g, v, gamma, gamma_without[v]))
      c.membership = Membership::Core;
    else if (detail::in_anticore_given(g, v, gamma))
      c.membership = Membership::Anticore;
    else
      c.membership = Membership::CoronaOnly;
  }
  report.summary = summarize(report.per_vertex);
  return report;
}

inline ClassificationReport classify_all(const Graph &g) {
  return classify_with(g, domination_number(g), gamma_after_removal(g));
}

/// Definitional oracle: core and corona from the full family of γ-sets,
/// removal classes from exhaustive γ(G-v).
inline ClassificationReport classify_by_enumeration(const Graph &g) {
  if (g.order() > kAllSetsLimit)
    throw CapacityError("classify_by_enumeration supports at most " + std::to_string(kAllSetsLimit) + " vertices");
  const DominationReport all = all_minimum_dominating_sets(g);
  VertexSet core = g.vertices(), corona;
  for (VertexSet s : *all.all_sets) {
    core &= s;
    corona |= s;
  }
  ClassificationReport report;
  report.gamma = all.gamma;
  report.per_vertex.resize(g.order());
  for (Vertex v = 0; v < g.order(); ++v) {
    auto &c = report.per_vertex[v];
    c.removal = removal_from(gamma_bruteforce(delete_vertex(g, v)).gamma, all.gamma);
    c.membership = core.contains(v) ? Membership::Core : corona.contains(v) ? Membership::CoronaOnly : Membership::Anticore;
  }
  report.summary = summarize(report.per_vertex);
  return report;
}

}  // namespace domcore
