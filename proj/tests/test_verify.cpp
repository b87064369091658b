#include <gtest/gtest.h>

#include "domcore/error.hpp"
#include "domcore/verify.hpp"

using namespace domcore;

TEST(Verify, SmallCorpusCountsAndPasses) {
  const auto r = verify_corpus(5);
  EXPECT_EQ(r.graphs_per_order, (std::vector<std::uint64_t>{0, 1, 1, 2, 6, 21}));
  EXPECT_EQ(r.graphs_checked(), 31u);
  EXPECT_TRUE(r.ok());
}

TEST(Verify, SevenPassesAndChecksApply) {
  const auto r = verify_corpus(7);
  EXPECT_EQ(r.graphs_checked(), 996u);
  for (const auto &c : r.checks) {
    EXPECT_EQ(c.violations, 0u) << c.name << ' ' << c.first_counterexample.value_or("");
    EXPECT_GT(c.applicable, 0u) << c.name;
  }
  ASSERT_NE(r.find("chordal-core-equals-v-plus"), nullptr);
  EXPECT_EQ(r.find("missing"), nullptr);
  EXPECT_EQ(r.find("bipartite-claw-free-is-path-or-even-cycle")->applicable, 8u);
}

TEST(Verify, WorkerCountDoesNotChangeReport) {
  const auto a = verify_corpus(6, 1), b = verify_corpus(6, 3);
  ASSERT_EQ(a.checks.size(), b.checks.size());
  for (std::size_t i = 0; i < a.checks.size(); ++i) {
    EXPECT_EQ(a.checks[i].applicable, b.checks[i].applicable);
    EXPECT_EQ(a.checks[i].violations, b.checks[i].violations);
  }
}

TEST(Verify, Limits) {
  EXPECT_THROW(verify_corpus(0), CapacityError);
  EXPECT_THROW(verify_corpus(kVerifyLimit + 1), CapacityError);
}

TEST(Verify, FoldRecordsFirstCounterexample) {
  VerificationReport r;
  r.n_max = 2;
  r.checks.resize(2);
  std::vector<std::pair<int, std::uint64_t>> first(2);
  const Graph k1 = build_graph(1, {}), k2 = build_graph(2, {{0, 1}});
  detail::fold(r, first, k2, 0, {Outcome::Fail, Outcome::Pass});
  detail::fold(r, first, k1, 0, {Outcome::Fail, Outcome::Skip});
  EXPECT_EQ(r.checks[0].violations, 2u);
  EXPECT_EQ(r.checks[0].applicable, 2u);
  EXPECT_EQ(r.checks[0].first_counterexample, "@");
  EXPECT_EQ(r.checks[1].applicable, 1u);
  EXPECT_FALSE(r.ok());
}
