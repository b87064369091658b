#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <numeric>
#include <random>

#include "domcore/canonical.hpp"
#include "domcore/classify.hpp"
#include "domcore/search.hpp"
#include "domcore/witness_file.hpp"

using namespace domcore;

namespace {

SearchOptions up_to(int n) {
  SearchOptions o;
  o.n_max = n;
  return o;
}

}  // namespace

TEST(Signatures, Registry) {
  const auto all = signatures::all();
  EXPECT_EQ(all.size(), 6u);
  for (const auto &s : all) EXPECT_EQ(signatures::by_name(s.name).name, s.name);
  EXPECT_THROW(signatures::by_name("nope"), std::invalid_argument);
}

TEST(Signatures, EvaluateMatchesDefinitions) {
  const Graph k33 = build_graph(6, {{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}});
  EXPECT_FALSE(signatures::all_zero_core_nonempty().evaluate(k33, classify_all(k33)));
  const Graph p3 = build_graph(3, {{0, 1}, {1, 2}});
  EXPECT_FALSE(signatures::core_zero().evaluate(p3, classify_all(p3)));
}

TEST(Search, RecordedSmallestOrders) {
  ConnectedGraphs shared;
  const std::vector<std::pair<PartitionSignature, int>> cases{
      {signatures::all_zero_core_nonempty(), 7},
      {signatures::one_plus_rest_zero_core_zero(), 6},
      {signatures::core_zero_or_anticore(), 7},
      {signatures::core_zero(), 6},
  };
  for (const auto &[sig, order] : cases) {
    auto opt = up_to(8);
    opt.stop_at_first_order = true;
    const auto r = search_signature(sig, opt, &shared);
    EXPECT_EQ(r.status, SearchStatus::Found) << sig.name;
    EXPECT_EQ(r.smallest_order(), order) << sig.name;
  }
}

TEST(Search, NoEmptyAnticoreThreeClassGraphBelowNine) {
  const auto r = search_signature(signatures::plus_zero_minus_no_anticore(), up_to(8));
  EXPECT_EQ(r.status, SearchStatus::Exhausted);
  EXPECT_FALSE(r.smallest_order());
  EXPECT_EQ(r.orders.back().graphs_checked, 11117u);
}

TEST(Search, WitnessesSatisfySignatureAndAreLabelIndependent) {
  const auto sig = signatures::all_zero_core_nonempty();
  const auto r = search_signature(sig, up_to(7));
  ASSERT_EQ(r.orders.size(), 7u);
  std::mt19937_64 rng(1);
  for (const auto &w : r.orders.back().witnesses) {
    EXPECT_TRUE(sig.evaluate(w.graph, classify_by_enumeration(w.graph)));
    std::vector<int> p(w.graph.order());
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng);
    const Graph h = relabel(w.graph, p);
    EXPECT_TRUE(match_signature(h, sig).has_value());
    EXPECT_EQ(canonical_form(h), w.form);
  }
}

TEST(Search, JobsDoNotChangeResults) {
  const auto sig = signatures::core_zero_or_anticore();
  auto a = up_to(8), b = up_to(8);
  b.jobs = 3;
  const auto ra = search_signature(sig, a), rb = search_signature(sig, b);
  ASSERT_EQ(ra.orders.size(), rb.orders.size());
  for (std::size_t i = 0; i < ra.orders.size(); ++i) {
    ASSERT_EQ(ra.orders[i].witnesses.size(), rb.orders[i].witnesses.size());
    for (std::size_t k = 0; k < ra.orders[i].witnesses.size(); ++k)
      EXPECT_EQ(ra.orders[i].witnesses[k].form, rb.orders[i].witnesses[k].form);
  }
}

TEST(Search, FirstKTruncates) {
  auto opt = up_to(8);
  opt.n_min = 8;
  opt.first_k = 3;
  const auto r = search_signature(signatures::all_zero_core_nonempty(), opt);
  ASSERT_EQ(r.orders.size(), 1u);
  EXPECT_EQ(r.orders[0].witnesses.size(), 3u);
  EXPECT_TRUE(r.orders[0].truncated);
}

TEST(Search, Budget) {
  auto opt = up_to(8);
  opt.max_graphs = 100;
  const auto r = search_signature(signatures::core_zero(), opt);
  EXPECT_EQ(r.status, SearchStatus::BudgetExceeded);
  std::uint64_t checked = 0;
  for (const auto &o : r.orders) checked += o.graphs_checked;
  EXPECT_EQ(checked, 100u);
}

TEST(Search, ClassFilter) {
  auto opt = up_to(7);
  opt.filter = ClassFilter::parse("chordal");
  const auto r = search_signature(signatures::core_zero(), opt);
  EXPECT_EQ(r.status, SearchStatus::Exhausted);
  for (const auto &o : r.orders) EXPECT_LE(o.graphs_in_class, o.graphs_checked);
  EXPECT_THROW(ClassFilter::parse("planar"), std::invalid_argument);
  EXPECT_THROW(ClassFilter::parse("hexagon-free"), std::invalid_argument);
  const auto f = ClassFilter::parse("claw-free,P6-free");
  EXPECT_TRUE(f(build_graph(3, {{0, 1}, {1, 2}})));
  EXPECT_FALSE(f(build_graph(4, {{0, 1}, {0, 2}, {0, 3}})));
}

TEST(Search, CapacityLimit) {
  EXPECT_THROW(search_signature(signatures::core_zero(), up_to(kEnumerationLimit + 1)), CapacityError);
}

TEST(WitnessFile, RoundTrip) {
  const auto sig = signatures::core_zero_or_anticore();
  const auto r = search_signature(sig, up_to(7));
  const auto dir = std::filesystem::temp_directory_path() / "domcore_witness_test";
  const auto path = save_witnesses(dir, sig, r);
  const auto back = read_witness_file(path);
  ASSERT_EQ(back.size(), r.orders.back().witnesses.size());
  for (std::size_t i = 0; i < back.size(); ++i) EXPECT_EQ(canonical_form(back[i]), r.orders.back().witnesses[i].form);
  std::filesystem::remove_all(dir);
}

class WitnessRegression : public ::testing::TestWithParam<std::string> {};

TEST_P(WitnessRegression, StoredGraphsStillMatch) {
  const auto sig = signatures::by_name(GetParam());
  const auto graphs = read_witness_file(std::filesystem::path(DOMCORE_TEST_DATA) / "witnesses" / (GetParam() + ".g6"));
  ASSERT_FALSE(graphs.empty());
  for (const Graph &g : graphs) EXPECT_TRUE(sig.evaluate(g, classify_by_enumeration(g))) << write_graph6(g);
}

INSTANTIATE_TEST_SUITE_P(Stored, WitnessRegression,
                         ::testing::Values("min-plus-zero-minus-empty-anticore", "all-zero-core-nonempty",
                                           "one-plus-rest-zero-core-zero", "cut-vertex-core-zero",
                                           "core-zero-or-anticore", "core-zero"),
                         [](const auto &info) {
                           std::string s = info.param;
                           std::replace(s.begin(), s.end(), '-', '_');
                           return s;
                         });
