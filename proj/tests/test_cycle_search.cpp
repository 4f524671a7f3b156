#include <gtest/gtest.h>

#include <random>

#include "lcchord/cycle_search.hpp"
#include "lcchord/families.hpp"
#include "lcchord/graph6.hpp"
#include "oracles.hpp"

using namespace lcchord;

namespace {

Graph k4() { return Graph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}); }
Graph c5() { return Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}}); }

Graph k33() {
  std::vector<Edge> es;
  for (int a = 0; a < 3; ++a)
    for (int b = 3; b < 6; ++b) es.emplace_back(a, b);
  return Graph::from_edges(6, es);
}

std::vector<std::vector<Vertex>> as_lists(const std::vector<Cycle>& cs) {
  std::vector<std::vector<Vertex>> out;
  for (const auto& c : cs) out.push_back(c.canonical().verts());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST(Circumference, SmallGraphs) {
  const auto r = circumference(k4());
  EXPECT_EQ(r.length, 4);
  ASSERT_TRUE(r.witness);
  EXPECT_TRUE(r.witness->is_valid_in(k4()));
  EXPECT_EQ(circumference(gen_family(FamilyId::petersen).graph).length, 9);
  EXPECT_EQ(circumference(k33()).length, 6);
}

TEST(Circumference, Acyclic) {
  const auto r = circumference(Graph::from_edges(4, {{0, 1}, {1, 2}, {1, 3}}));
  EXPECT_TRUE(r.acyclic());
  EXPECT_FALSE(r.witness);
  EXPECT_TRUE(circumference(Graph::from_edges(0, {})).acyclic());
}

// The construction's 5-cycle is chordless but not longest for k = 1: the hub
// y together with the path x1..x5 gives a 6-cycle.
TEST(Circumference, Figure1SingleGadget) {
  const auto fg = gen_family(FamilyId::figure1, 1);
  const auto all = longest_cycles_all(fg.graph);
  EXPECT_EQ(all.length, 6);
  ASSERT_EQ(all.cycles.size(), 1u);
  EXPECT_EQ(chords_of_cycle(fg.graph, all.cycles[0]).size(), 2u);
  EXPECT_EQ(oracle::circumference(fg.graph), 6);
}

TEST(LongestCyclesAll, Examples) {
  const auto a = longest_cycles_all(k4());
  EXPECT_EQ(a.length, 4);
  EXPECT_EQ(a.cycles.size(), 3u);
  const auto b = longest_cycles_all(c5(), LinearForest::single_edge(0, 1));
  EXPECT_EQ(b.length, 5);
  EXPECT_EQ(b.cycles.size(), 1u);
  const Graph p = gen_family(FamilyId::petersen).graph;
  const auto c = longest_cycles_all(p);
  EXPECT_EQ(c.length, 9);
  EXPECT_EQ(c.cycles.size(), 20u);
  for (const auto& cyc : c.cycles) EXPECT_GE(chords_of_cycle(p, cyc).size(), 1u);
  EXPECT_EQ(longest_cycles_all(k33()).cycles.size(), 6u);
}

TEST(LongestCyclesAll, ForestWithNoCycle) {
  const Graph g = Graph::from_edges(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}});
  const auto r = longest_cycles_all(g, LinearForest({{0}, {3}}));
  EXPECT_TRUE(r.complete());
  EXPECT_EQ(r.length, 0);
  EXPECT_TRUE(r.cycles.empty());
  EXPECT_THROW(longest_cycles_all(g, LinearForest::single_edge(0, 3)), Error);
}

TEST(LongestCyclesAll, MatchesOracleOnRandomGraphs) {
  std::mt19937_64 rng(1234);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 3 + trial % 7;
    const Graph g = oracle::random_graph(rng, n, 0.3 + 0.06 * (trial % 10));
    const auto expect = oracle::longest_cycles(g);
    const auto got = longest_cycles_all(g);
    ASSERT_TRUE(got.complete());
    EXPECT_EQ(got.length, expect.empty() ? 0 : static_cast<int>(expect[0].size()));
    EXPECT_EQ(as_lists(got.cycles), expect);
  }
}

TEST(LongestCyclesAll, ForcedForestMatchesOracle) {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 4 + trial % 6;
    const Graph g = oracle::random_graph(rng, n, 0.5);
    const auto es = g.edges();
    std::vector<std::vector<Vertex>> paths;
    std::vector<Vertex> must_v;
    std::vector<Edge> must_e;
    std::vector<char> used(static_cast<std::size_t>(n), 0);
    if (!es.empty() && rng() % 2) {
      const Edge e = es[rng() % es.size()];
      paths.push_back({e.u, e.v});
      used[e.u] = used[e.v] = 1;
      must_v.insert(must_v.end(), {e.u, e.v});
      must_e.push_back(e);
    }
    for (Vertex v = 0; v < n; ++v)
      if (!used[v] && rng() % 4 == 0) {
        paths.push_back({v});
        must_v.push_back(v);
      }
    const LinearForest f(paths);
    const auto expect = oracle::longest_cycles(g, must_v, must_e);
    const auto got = longest_cycles_all(g, f);
    EXPECT_EQ(as_lists(got.cycles), expect) << emit_graph6(g) << " F=" << to_string(f);
    const auto one = CycleEngine(g).longest(f);
    EXPECT_EQ(one.length, got.length);
    if (one.witness) {
      EXPECT_TRUE(f.contained_in(*one.witness));
    }
  }
}

TEST(LongestCyclesAll, LongerPathForest) {
  const Graph g = gen_family(FamilyId::petersen).graph;
  const LinearForest f({{0, 1, 2}});
  const auto got = longest_cycles_all(g, f);
  const auto expect = oracle::longest_cycles(g, {0, 1, 2}, {{0, 1}, {1, 2}});
  EXPECT_EQ(as_lists(got.cycles), expect);
}

TEST(CycleEngine, NodeBudgetReportsExceeded) {
  SearchOptions opt;
  opt.node_budget = 5;
  const auto r = CycleEngine(gen_family(FamilyId::petersen).graph, opt).longest_all();
  EXPECT_FALSE(r.complete());
}

TEST(CycleEngine, CyclesOfShorterLength) {
  const auto r = CycleEngine(k4()).cycles_of_length(3);
  EXPECT_EQ(r.cycles.size(), 4u);
}

TEST(Chords, Examples) {
  EXPECT_EQ(chords_of_cycle(k4(), Cycle({0, 1, 2, 3})), (std::vector<Edge>{{0, 2}, {1, 3}}));
  const auto fg = gen_family(FamilyId::figure1, 1);
  EXPECT_TRUE(is_chordless(fg.graph, *fg.meta.designated_cycle));
  EXPECT_EQ(chords_of_cycle(k33(), Cycle({0, 3, 1, 4, 2, 5})).size(), 3u);
  EXPECT_THROW(chords_of_cycle(c5(), Cycle({0, 1, 3})), Error);
}

TEST(Blocks, CoverEveryEdgeOnce) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const Graph g = oracle::random_graph(rng, 2 + trial % 12, 0.25);
    const auto blocks = detail::biconnected_blocks(g);
    int covered = 0;
    for (const auto& b : blocks) covered += g.induced(b).size();
    // Two blocks share at most one vertex, so induced edge sets are disjoint.
    EXPECT_EQ(covered, g.size());
  }
}
