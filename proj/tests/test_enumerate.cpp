#include <gtest/gtest.h>

#include <random>
#include <set>

#include "lcchord/enumerate.hpp"
#include "lcchord/graph6.hpp"
#include "oracles.hpp"

using namespace lcchord;

TEST(Enumerate, Examples) {
  const auto a = enumerate_graphs(4, 3, 1);
  ASSERT_EQ(a.size(), 1u);
  EXPECT_EQ(a[0].size(), 6);
  EXPECT_EQ(enumerate_graphs(5, 3, 1).size(), 3u);
  EXPECT_EQ(enumerate_graphs(6, 3, 3).size(), 17u);
}

// Graphs on n vertices up to isomorphism: 4, 11, 34, 156, 1044 for n = 3..7.
TEST(Enumerate, AllGraphCounts) {
  const std::size_t expect[] = {4, 11, 34, 156, 1044};
  for (int n = 3; n <= 7; ++n) EXPECT_EQ(enumerate_graphs(n, 0, 0).size(), expect[n - 3]) << n;
}

// Connected graphs: 2, 6, 21, 112, 853.
TEST(Enumerate, ConnectedCounts) {
  const std::size_t expect[] = {2, 6, 21, 112, 853};
  for (int n = 3; n <= 7; ++n) EXPECT_EQ(enumerate_graphs(n, 0, 1).size(), expect[n - 3]) << n;
}

TEST(Enumerate, BruteForceClassesForSmallN) {
  for (int n = 3; n <= 6; ++n) {
    for (int d = 0; d <= 3; ++d) {
      std::set<std::uint64_t> classes;
      const int pairs = n * (n - 1) / 2;
      for (std::uint64_t code = 0; code < (std::uint64_t{1} << pairs); ++code) {
        const Graph g = graph_from_code(n, code);
        if (g.min_degree() < d) continue;
        classes.insert(oracle::brute_canonical_code(g));
      }
      const auto got = enumerate_graphs(n, d, 0);
      EXPECT_EQ(got.size(), classes.size()) << n << " " << d;
      std::set<std::uint64_t> seen;
      for (const Graph& g : got) seen.insert(oracle::brute_canonical_code(g));
      EXPECT_EQ(seen, classes);
    }
  }
}

TEST(Canonical, MatchesBruteForceAndIsIdempotent) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + trial % 7;
    const Graph g = oracle::random_graph(rng, n, 0.5);
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<Edge> es;
    for (const Edge& e : g.edges()) es.emplace_back(perm[e.u], perm[e.v]);
    const Graph h = Graph::from_edges(n, es);
    EXPECT_EQ(canonical_code(g), canonical_code(h));
    EXPECT_TRUE(isomorphic(g, h));
    EXPECT_EQ(canonical_form(canonical_form(g)), canonical_form(g));
  }
}

// Leaf codes are not the maximum over all labellings, but equality of codes
// must coincide with equality of the brute-force maxima.
TEST(Canonical, SeparatesExactlyTheBruteForceClasses) {
  std::mt19937_64 rng(81);
  for (int trial = 0; trial < 3000; ++trial) {
    const int n = 1 + trial % 7;
    const double p = 0.2 + 0.1 * (trial % 7);
    const Graph a = oracle::random_graph(rng, n, p);
    const Graph b = oracle::random_graph(rng, n, p);
    if (a.size() != b.size()) continue;
    EXPECT_EQ(canonical_code(a) == canonical_code(b),
              oracle::brute_canonical_code(a) == oracle::brute_canonical_code(b))
        << emit_graph6(a) << " " << emit_graph6(b);
  }
}

TEST(Enumerate, Errors) {
  try {
    enumerate_graphs(9, 3, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::too_large);
    EXPECT_NE(std::string(e.what()).find("graph6"), std::string::npos);
  }
  EXPECT_THROW(enumerate_graphs(2, 0, 0), Error);
  EXPECT_THROW(canonical_code(Graph::from_edges(12, {})), Error);
}
