#include <gtest/gtest.h>

#include <random>

#include "lcchord/cographic.hpp"
#include "lcchord/families.hpp"
#include "oracles.hpp"

using namespace lcchord;

namespace {

Graph k4() { return Graph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}); }

std::vector<Vertex> side_of(std::uint32_t mask, int n) {
  std::vector<Vertex> out;
  for (int v = 0; v < n; ++v)
    if (mask >> v & 1u) out.push_back(v);
  return out;
}

}  // namespace

TEST(CographicRank, K4) {
  const Graph g = k4();
  EXPECT_EQ(cographic_rank(g, std::vector<Edge>{}), 0);
  EXPECT_EQ(cographic_rank(g, std::vector<Edge>{{0, 1}, {0, 2}, {0, 3}}), 2);
  EXPECT_EQ(cographic_rank(g, g.edges()), 3);
  EXPECT_THROW(cographic_rank(g, std::vector<Edge>{{0, 0 + 4}}), Error);
}

TEST(BondFromPartition, Examples) {
  const auto tcb = gen_family(FamilyId::two_cycle_bipartite, 3);
  EXPECT_EQ(bond_from_partition(tcb.graph, std::vector<Vertex>{0, 1, 2}).size(), 9);
  EXPECT_EQ(bond_from_partition(k4(), std::vector<Vertex>{2}).size(), 3);
  const Graph path = Graph::from_edges(3, {{0, 1}, {1, 2}});
  try {
    bond_from_partition(path, std::vector<Vertex>{0, 2});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::not_a_bond);
  }
  EXPECT_THROW(bond_from_partition(Graph::from_edges(3, {{0, 1}}), std::vector<Vertex>{0}), Error);
}

TEST(ChordsOfBond, TwoCycleBipartiteHasNone) {
  for (int n = 3; n <= 5; ++n) {
    const auto fg = gen_family(FamilyId::two_cycle_bipartite, n);
    const Bond b = bond_from_partition(fg.graph, *fg.meta.bond_side);
    EXPECT_EQ(b.size(), n * n);
    EXPECT_TRUE(chords_of_bond(fg.graph, b).empty());
    // Adding a cycle edge raises the rank, so it is not a chord.
    auto plus = b.edges;
    plus.emplace_back(0, 1);
    EXPECT_EQ(cographic_rank(fg.graph, plus), cographic_rank(fg.graph, b.edges) + 1);
  }
}

TEST(ChordsOfBond, K4StarIsChordlessAndFlagged) {
  const Bond b = bond_from_partition(k4(), std::vector<Vertex>{0});
  const auto a = analyze_bond(k4(), b);
  EXPECT_TRUE(a.chords.empty());
  EXPECT_TRUE(a.side_x_tree);
  EXPECT_TRUE(a.edgeless_tree_side);
}

TEST(ChordsOfBond, MatchesOracleOnRandomGraphs) {
  std::mt19937_64 rng(17);
  int checked = 0;
  for (int trial = 0; trial < 150; ++trial) {
    const int n = 3 + trial % 6;
    const Graph g = oracle::random_graph(rng, n, 0.5);
    if (!is_connected(g)) continue;
    for (std::uint32_t side : oracle::bond_sides(g)) {
      const Bond b = bond_from_partition(g, side_of(side, n));
      EXPECT_EQ(chords_of_bond(g, b), oracle::bond_chords(g, side));
      ++checked;
    }
  }
  EXPECT_GT(checked, 100);
}

TEST(ChordsOfBond, RejectsMismatchedEdges) {
  Bond b = bond_from_partition(k4(), std::vector<Vertex>{0});
  b.edges.pop_back();
  EXPECT_THROW(chords_of_bond(k4(), b), Error);
}

TEST(MaxBond, Examples) {
  const auto a = max_bond(k4());
  EXPECT_EQ(a.size, 4);
  EXPECT_EQ(a.witness.side_x.size(), 2u);
  const Graph c5 = Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
  EXPECT_EQ(max_bond(c5).size, 2);
  const auto tcb = max_bond(gen_family(FamilyId::two_cycle_bipartite, 3).graph);
  EXPECT_GE(tcb.size, 9);
  EXPECT_LE(tcb.size, 11);
  EXPECT_EQ(tcb.size, 9);
}

TEST(MaxBond, Errors) {
  EXPECT_THROW(max_bond(Graph::from_edges(3, {{0, 1}})), Error);
  EXPECT_THROW(max_bond(Graph::from_edges(1, {})), Error);
}
