#pragma once

// JSON views of the library's reports. Key order is fixed (ordered_json)
// so output is byte-stable:
//
//   classification: {gamma, vertices: [{id, removal, membership}], summary}
//   summary:        {plus, zero, minus, core, corona_only, anticore}
//   classes:        {chordal, bipartite, tree, cograph, claw_free, induced: {<pattern>: bool}}

#include "json.hpp"

#include "domcore/classify.hpp"
#include "domcore/graph6.hpp"
#include "domcore/mds.hpp"
#include "domcore/recognize.hpp"
#include "domcore/search.hpp"
#include "domcore/verify.hpp"

namespace domcore {

using Json = nlohmann::ordered_json;

inline Json to_json(VertexSet s) {
  Json a = Json::array();
  for (Vertex v : s) a.push_back(v);
  return a;
}

inline Json to_json(const ClassSummary &s) {
  Json j;
  j["plus"] = s.plus;
  j["zero"] = s.zero;
  j["minus"] = s.minus;
  j["core"] = s.core;
  j["corona_only"] = s.corona_only;
  j["anticore"] = s.anticore;
  return j;
}

inline Json to_json(const ClassificationReport &r) {
  Json j;
  j["gamma"] = r.gamma;
  Json vs = Json::array();
  for (std::size_t v = 0; v < r.per_vertex.size(); ++v) {
    Json e;
    e["id"] = v;
    e["removal"] = to_string(r.per_vertex[v].removal);
    e["membership"] = to_string(r.per_vertex[v].membership);
    vs.push_back(std::move(e));
  }
  j["vertices"] = std::move(vs);
  j["summary"] = to_json(r.summary);
  return j;
}

inline Json to_json(const DominationReport &r) {
  Json j;
  j["gamma"] = r.gamma;
  j["witness"] = to_json(r.witness);
  if (r.all_sets) {
    Json all = Json::array();
    for (VertexSet s : *r.all_sets) all.push_back(to_json(s));
    j["all_sets"] = std::move(all);
  }
  return j;
}

inline Json to_json(const ClassFlags &f) {
  Json j;
  j["chordal"] = f.chordal;
  j["bipartite"] = f.bipartite;
  j["tree"] = f.tree;
  j["cograph"] = f.cograph;
  j["claw_free"] = f.claw_free;
  Json induced;
  for (std::size_t i = 0; i < kPatterns.size(); ++i) induced[std::string(to_string(kPatterns[i]))] = f.contains[i];
  j["induced"] = std::move(induced);
  return j;
}

inline Json to_json(const TwinCliquePartition &t) {
  Json j;
  j["root"] = t.root;
  Json cliques = Json::array();
  for (VertexSet k : t.cliques) cliques.push_back(to_json(k));
  j["cliques"] = std::move(cliques);
  j["reduced"] = write_graph6(t.reduced);
  return j;
}

inline Json to_json(const SearchResult &r, const PartitionSignature &sig, const std::optional<ClassFilter> &filter) {
  Json j;
  j["signature"] = r.signature;
  j["description"] = sig.description;
  j["n_max"] = r.n_max;
  j["filter"] = filter ? Json(filter->text) : Json(nullptr);
  j["status"] = to_string(r.status);
  const auto smallest = r.smallest_order();
  j["smallest_order"] = smallest ? Json(*smallest) : Json(nullptr);
  Json orders = Json::array();
  for (const auto &o : r.orders) {
    Json e;
    e["n"] = o.n;
    e["checked"] = o.graphs_checked;
    e["in_class"] = o.graphs_in_class;
    e["witness_count"] = o.witnesses.size();
    e["truncated"] = o.truncated;
    Json ws = Json::array();
    for (const auto &w : o.witnesses) {
      Json x;
      x["graph6"] = w.form.bytes;
      x["gamma"] = w.report.gamma;
      x["summary"] = to_json(w.report.summary);
      ws.push_back(std::move(x));
    }
    e["witnesses"] = std::move(ws);
    orders.push_back(std::move(e));
  }
  j["orders"] = std::move(orders);
  return j;
}

inline Json to_json(const VerificationReport &r) {
  Json j;
  j["n_max"] = r.n_max;
  j["graphs_checked"] = r.graphs_checked();
  Json per = Json::array();
  for (int n = 1; n <= r.n_max; ++n) per.push_back(r.graphs_per_order[n]);
  j["graphs_per_order"] = std::move(per);
  j["ok"] = r.ok();
  Json checks = Json::array();
  for (const auto &c : r.checks) {
    Json e;
    e["name"] = c.name;
    e["applicable"] = c.applicable;
    e["violations"] = c.violations;
    e["first_counterexample"] = c.first_counterexample ? Json(*c.first_counterexample) : Json(nullptr);
    checks.push_back(std::move(e));
  }
  j["checks"] = std::move(checks);
  return j;
}

}  // namespace domcore
