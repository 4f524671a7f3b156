#include <gtest/gtest.h>

#include <random>

#include "lcchord/families.hpp"
#include "lcchord/graph.hpp"
#include "oracles.hpp"

using namespace lcchord;

namespace {

Graph k4() { return Graph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}); }
Graph c5() { return Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}}); }

}  // namespace

TEST(BuildGraph, CompleteGraph) {
  const Graph g = k4();
  EXPECT_EQ(g.order(), 4);
  EXPECT_EQ(g.size(), 6);
  EXPECT_EQ(g.min_degree(), 3);
}

TEST(BuildGraph, Cycle) {
  const Graph g = c5();
  EXPECT_EQ(g.size(), 5);
  EXPECT_EQ(g.min_degree(), 2);
}

TEST(BuildGraph, DuplicatesCollapse) {
  const Graph g = Graph::from_edges(3, {{0, 1}, {0, 1}, {1, 2}, {1, 0}});
  EXPECT_EQ(g.size(), 2);
}

TEST(BuildGraph, Errors) {
  try {
    Graph::from_edges(3, {{0, 3}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::vertex_out_of_range);
  }
  try {
    Graph::from_edges(3, {{1, 1}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::self_loop);
  }
  EXPECT_THROW(Graph::from_edges(3, {{-1, 0}}), Error);
}

TEST(BuildGraph, SymmetryAndHandshake) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const Graph g = oracle::random_graph(rng, 1 + trial % 12, 0.4);
    int sum = 0;
    for (Vertex v = 0; v < g.order(); ++v) {
      sum += g.degree(v);
      for (Vertex w : g.neighbors(v)) EXPECT_TRUE(g.adjacent(w, v));
    }
    EXPECT_EQ(sum, 2 * g.size());
  }
}

TEST(Analyze, K4) {
  EXPECT_EQ(analyze(k4()), (StatsRecord{4, 6, 3, 3, true, true, true, 1}));
}

TEST(Analyze, Petersen) {
  EXPECT_EQ(analyze(gen_family(FamilyId::petersen).graph), (StatsRecord{10, 15, 3, 3, true, true, true, 1}));
}

TEST(Analyze, TwoDisjointK4) {
  std::vector<Edge> es;
  for (int base : {0, 4})
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) es.emplace_back(base + i, base + j);
  const auto s = analyze(Graph::from_edges(8, es));
  EXPECT_FALSE(s.connected);
  EXPECT_FALSE(s.biconnected);
  EXPECT_EQ(s.components, 2);
}

TEST(Analyze, EmptyGraphRejected) {
  try {
    analyze(Graph::from_edges(0, {}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::empty_graph);
  }
}

TEST(Connectivity, MatchesBruteForce) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 2 + trial % 8;
    const Graph g = oracle::random_graph(rng, n, 0.35 + 0.05 * (trial % 10));
    const int kappa = oracle::vertex_connectivity(g);
    for (int k = 1; k <= 4; ++k) EXPECT_EQ(is_k_connected(g, k), kappa >= k && n >= k + 1) << k;
  }
}

TEST(CycleType, CanonicalEquality) {
  const Cycle a({3, 1, 0, 2});
  const Cycle b({0, 1, 3, 2});
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.canonical().verts(), (std::vector<Vertex>{0, 1, 3, 2}));
  EXPECT_EQ(a.reversed(), a);
  EXPECT_EQ(a.length(), 4);
  EXPECT_TRUE(a.has_edge(1, 3));
  EXPECT_FALSE(a.has_edge(0, 3));
  EXPECT_EQ(a.at(-1), 2);
}

TEST(CycleType, Validation) {
  EXPECT_THROW(Cycle({0, 1}), Error);
  EXPECT_THROW(Cycle({0, 1, 0}), Error);
  const Cycle c({0, 1, 2});
  EXPECT_FALSE(c.is_valid_in(c5()));
  EXPECT_THROW(c.validate(c5()), Error);
  EXPECT_NO_THROW(Cycle({0, 1, 2, 3, 4}).validate(c5()));
}

TEST(LinearForestType, Basics) {
  const LinearForest f({{0, 1, 2}, {4}});
  EXPECT_EQ(f.edge_count(), 2);
  EXPECT_EQ(f.isolated_count(), 1);
  EXPECT_EQ(f.vertices(), (std::vector<Vertex>{0, 1, 2, 4}));
  EXPECT_EQ(to_string(f), "0-1-2;4");
  EXPECT_TRUE(f.contained_in(Cycle({0, 1, 2, 3, 4})));
  EXPECT_FALSE(f.contained_in(Cycle({0, 2, 1, 3, 4})));
  EXPECT_THROW(LinearForest({{0, 1}, {1, 2}}), Error);
  EXPECT_THROW(LinearForest({{0, 2}}).validate(c5()), Error);
}
