#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "domcore/canonical.hpp"
#include "domcore/enumerate.hpp"
#include "domcore/error.hpp"
#include "graphs.hpp"
#include "oracles.hpp"

using namespace domcore;

namespace {

std::vector<int> shuffled(int n, std::mt19937_64 &rng) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

}  // namespace

TEST(CanonicalForm, Examples) {
  EXPECT_EQ(canonical_form(build_graph(4, {{0, 1}, {1, 2}, {2, 3}})),
            canonical_form(build_graph(4, {{2, 0}, {0, 3}, {3, 1}})));
  EXPECT_NE(canonical_form(fixture::path(4)), canonical_form(fixture::star(3)));
  EXPECT_NE(canonical_form(fixture::path(4)), canonical_form(add_vertex(fixture::path(4), {})));
  EXPECT_EQ(canonical_form(Graph{}).bytes, "?");
}

TEST(CanonicalForm, SeparatesExactlyLikeExhaustiveMinimum) {
  std::mt19937_64 rng(21);
  std::vector<Graph> pool;
  for (int n = 1; n <= 6; ++n)
    for (const Graph &g : enumerate_connected(n)) pool.push_back(relabel(g, shuffled(n, rng)));
  for (int t = 0; t < 300; ++t) pool.push_back(oracle::random_graph(rng, 7, 0.4));
  std::map<std::string, std::string> mine_to_ref, ref_to_mine;
  for (const Graph &g : pool) {
    const std::string mine = canonical_form(g).bytes, ref = oracle::min_graph6(g);
    auto [a, fresh_a] = mine_to_ref.emplace(mine, ref);
    auto [b, fresh_b] = ref_to_mine.emplace(ref, mine);
    EXPECT_EQ(a->second, ref) << write_graph6(g);
    EXPECT_EQ(b->second, mine) << write_graph6(g);
  }
}

TEST(CanonicalForm, RelabelInvariantOnLargerGraphs) {
  std::mt19937_64 rng(77);
  for (int t = 0; t < 300; ++t) {
    const int n = 8 + static_cast<int>(rng() % (kCanonicalLimit - 7));
    const Graph g = oracle::random_graph(rng, n, 0.1 + 0.1 * (rng() % 8));
    const Graph h = relabel(g, shuffled(n, rng));
    EXPECT_EQ(canonical_form(g), canonical_form(h)) << write_graph6(g);
    const Graph c = canonical_graph(g);
    EXPECT_EQ(c, canonical_graph(h));
    EXPECT_EQ(canonical_form(c), canonical_form(g));
  }
}

TEST(CanonicalForm, HighlySymmetricGraphs) {
  std::mt19937_64 rng(5);
  for (const Graph &g : {fixture::petersen(), fixture::cycle(16), fixture::complete(16), fixture::empty(16),
                         fixture::complete_bipartite(8, 8), complement(fixture::petersen())}) {
    EXPECT_EQ(canonical_form(g), canonical_form(relabel(g, shuffled(g.order(), rng))));
  }
  EXPECT_NE(canonical_form(fixture::petersen()), canonical_form(complement(fixture::petersen())));
}

TEST(CanonicalLabeling, OrbitsMatchExhaustiveAutomorphisms) {
  std::mt19937_64 rng(13);
  for (int n = 1; n <= 7; ++n) {
    for (const Graph &base : enumerate_connected(n)) {
      const Graph g = relabel(base, shuffled(n, rng));
      const auto lab = canonical_labeling(g);
      EXPECT_EQ(lab.orbit, oracle::orbits(g)) << write_graph6(g);
      for (const auto &perm : lab.generators) EXPECT_EQ(relabel(g, perm), g);
    }
  }
}

TEST(CanonicalLabeling, PositionsFormAPermutation) {
  const auto lab = canonical_labeling(fixture::petersen());
  std::vector<int> sorted = lab.position;
  std::sort(sorted.begin(), sorted.end());
  std::vector<int> expect(10);
  std::iota(expect.begin(), expect.end(), 0);
  EXPECT_EQ(sorted, expect);
  EXPECT_FALSE(lab.trivial_group());
  EXPECT_EQ(lab.orbit, std::vector<int>(10, 0));
}

TEST(CanonicalLabeling, OrderLimit) { EXPECT_THROW(canonical_form(fixture::empty(kCanonicalLimit + 1)), CapacityError); }
