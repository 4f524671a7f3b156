#include <gtest/gtest.h>

#include "lcchord/enumerate.hpp"
#include "lcchord/families.hpp"
#include "lcchord/report.hpp"
#include "lcchord/verify.hpp"
#include "oracles.hpp"

using namespace lcchord;

namespace {

Graph k4() { return Graph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}); }
Graph c5() { return Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}}); }

}  // namespace

TEST(Verify, Figure1IsVacuousForMain1) {
  const auto r = verify(TheoremId::main1, gen_family(FamilyId::figure1, 1).graph);
  EXPECT_TRUE(r.vacuous);
  EXPECT_FALSE(r.hypothesis_met);
  EXPECT_EQ(r.verdict, Verdict::holds);
  EXPECT_EQ(r.longest_length, 6);
}

TEST(Verify, K4Main1Holds) {
  const auto r = verify(TheoremId::main1, k4());
  EXPECT_TRUE(r.hypothesis_met);
  EXPECT_EQ(r.verdict, Verdict::holds);
  EXPECT_EQ(r.longest_count, 3);
  EXPECT_EQ(r.min_chords, 2);
}

TEST(Verify, PetersenThomassenHolds) {
  const auto r = verify(TheoremId::thomassen, gen_family(FamilyId::petersen).graph);
  EXPECT_TRUE(r.hypothesis_met);
  EXPECT_EQ(r.verdict, Verdict::holds);
  EXPECT_EQ(r.longest_length, 9);
  EXPECT_EQ(r.longest_count, 20);
}

TEST(Verify, HarveyNeedsTwoConnectivity) {
  // Each pendant K4 hangs off a cut vertex.
  const auto r = verify(TheoremId::harvey, gen_family(FamilyId::wheel_k4, 3).graph);
  EXPECT_TRUE(r.vacuous);
}

TEST(Verify, Main2FarEdgeIsVacuous) {
  const auto fg = gen_family(FamilyId::figure1, 2);
  const auto r = verify(TheoremId::main2, fg.graph, Edge(0, 1));
  EXPECT_TRUE(r.vacuous);
  EXPECT_EQ(r.longest_length, 10);
}

// delta^2 >= n holds for C4 (4 >= 4), and its only cycle is chordless.
TEST(Verify, HarveyDeltaCounterexampleOnC4) {
  const Graph c4 = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  const auto r = verify(TheoremId::harvey_delta, c4);
  EXPECT_TRUE(r.hypothesis_met);
  EXPECT_EQ(r.verdict, Verdict::counterexample);
  ASSERT_TRUE(r.chordless_cycle);
  r.chordless_cycle->validate(c4);
  EXPECT_TRUE(is_chordless(c4, *r.chordless_cycle));
  EXPECT_EQ(r.chordless_cycle->length(), oracle::circumference(c4));
  EXPECT_EQ(r.min_chords, 0);
}

TEST(Verify, ExtraArgumentErrors) {
  EXPECT_THROW(verify(TheoremId::main2, k4()), Error);
  EXPECT_THROW(verify(TheoremId::main2, c5(), Edge(0, 2)), Error);
  EXPECT_THROW(verify(TheoremId::main1, k4(), Edge(0, 1)), Error);
  EXPECT_THROW(verify(TheoremId::main3, k4(), std::nullopt, LinearForest({{0, 1, 2}})), Error);
  EXPECT_THROW(verify(TheoremId::main3, k4()), Error);
  EXPECT_NO_THROW(verify(TheoremId::main3, k4(), std::nullopt, LinearForest()));
}

TEST(Verify, LowDegreeIsVacuous) {
  const auto r = verify(TheoremId::main1, c5());
  EXPECT_TRUE(r.vacuous);
  EXPECT_EQ(r.verdict, Verdict::holds);
}

TEST(Verify, BudgetGivesInconclusive) {
  VerifyOptions o;
  o.search.node_budget = 3;
  const auto r = verify(TheoremId::thomassen, gen_family(FamilyId::petersen).graph, std::nullopt, std::nullopt, o);
  EXPECT_EQ(r.verdict, Verdict::inconclusive_budget);
}

TEST(Verify, HarveyDeltaHoldsOnK33) {
  // K_{3,3}: delta^2 = 9 >= 6 and every hamiltonian cycle has 3 chords.
  std::vector<Edge> es;
  for (int a = 0; a < 3; ++a)
    for (int b = 3; b < 6; ++b) es.emplace_back(a, b);
  const auto r = verify(TheoremId::harvey_delta, Graph::from_edges(6, es));
  EXPECT_TRUE(r.hypothesis_met);
  EXPECT_EQ(r.verdict, Verdict::holds);
  EXPECT_EQ(r.min_chords, 3);
}

TEST(Verify, Main3ForestSweepCoversEmptyForest) {
  const auto reports = verify_forest_sweep(k4());
  // 2^4 isolated subsets plus 6 edges times 2^2 subsets of the other two.
  EXPECT_EQ(reports.size(), 16u + 6u * 4u);
  for (const auto& r : reports) EXPECT_NE(r.verdict, Verdict::counterexample);
}

TEST(Verify, DisconnectedInputIsNoted) {
  std::vector<Edge> es;
  for (int base : {0, 4})
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) es.emplace_back(base + i, base + j);
  const auto r = verify(TheoremId::main1, Graph::from_edges(8, es));
  EXPECT_FALSE(r.notes.empty());
  // Longest cycles are the 4-cycles of either K4; threshold at n = 8 needs L >= 5.
  EXPECT_TRUE(r.vacuous);
}

TEST(Verify, CorpusIsDeterministicAcrossJobCounts) {
  const auto corpus = enumerate_graphs(6, 3, 1);
  const auto a = verify_corpus(TheoremId::main2, corpus, std::nullopt, std::nullopt, SweepMode::edges, {}, 1);
  const auto b = verify_corpus(TheoremId::main2, corpus, std::nullopt, std::nullopt, SweepMode::edges, {}, 4);
  EXPECT_EQ(verification_document(a).dump(), verification_document(b).dump());
  EXPECT_EQ(count_verdicts(a).counterexample, 0);
}

TEST(Probe1, Examples) {
  const std::vector<Graph> only_k4{k4()};
  EXPECT_FALSE(probe_question1(only_k4).best_ratio);
  // The single-gadget construction has no chordless longest cycle (see the
  // circumference tests), so it does not qualify either.
  const std::vector<Graph> fig1{gen_family(FamilyId::figure1, 1).graph};
  EXPECT_FALSE(probe_question1(fig1).best_ratio);
  const std::vector<Graph> two{gen_family(FamilyId::figure1, 1).graph, gen_family(FamilyId::wheel_k4, 3).graph};
  const auto r = probe_question1(two);
  ASSERT_TRUE(r.best_ratio);
  EXPECT_EQ(*r.best_ratio, Ratio::of(6, 16));
  const std::vector<Graph> fig2{gen_family(FamilyId::figure1, 2).graph};
  EXPECT_EQ(*probe_question1(fig2).best_ratio, Ratio::of(5, 12));
}

TEST(Probe1, SkipsLowDegree) {
  const std::vector<Graph> corpus{c5()};
  const auto r = probe_question1(corpus);
  EXPECT_FALSE(r.best_ratio);
  ASSERT_EQ(r.table.size(), 1u);
  EXPECT_FALSE(r.table[0].skipped.empty());
}

TEST(Probe2, Examples) {
  const auto six = enumerate_graphs(6, 3, 2);
  const auto r = probe_question2(six);
  EXPECT_EQ(r.chordless_hits, 0);
  EXPECT_GT(r.considered, 0);
  const std::vector<Graph> fig1{gen_family(FamilyId::figure1, 1).graph};
  EXPECT_EQ(probe_question2(fig1).considered, 0);
  const std::vector<Graph> cyc{c5()};
  const auto s = probe_question2(cyc);
  EXPECT_EQ(s.table[0].skipped, "minimum degree below 3");
}

TEST(Report, EnvelopeShape) {
  const std::vector<VerificationReport> reports{verify(TheoremId::main1, k4())};
  const auto doc = verification_document(reports);
  EXPECT_EQ(doc["tool_version"], kToolVersion);
  EXPECT_EQ(doc["command"], "verify");
  EXPECT_EQ(doc["items"].size(), 1u);
  EXPECT_EQ(doc["items"][0]["verdict"], "holds");
  EXPECT_EQ(doc["summary"]["holds"], 1);
  EXPECT_FALSE(doc["items"][0].contains("timings"));
  EXPECT_TRUE(verification_document(reports, true)["items"][0].contains("timings"));
}
