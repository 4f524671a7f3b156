// Command-line front end: JSON reports on stdout (or --out FILE).

#include <charconv>
#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "lcchord/cographic.hpp"
#include "lcchord/cycle_search.hpp"
#include "lcchord/dot.hpp"
#include "lcchord/enumerate.hpp"
#include "lcchord/families.hpp"
#include "lcchord/graph6.hpp"
#include "lcchord/io.hpp"
#include "lcchord/report.hpp"
#include "lcchord/verify.hpp"

namespace {

using namespace lcchord;

std::vector<int> parse_ints(const std::string& text) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    int value = 0;
    const char* first = text.data() + pos;
    const char* last = text.data() + comma;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last || first == last)
      throw Error(Errc::bad_argument, "expected comma-separated integers, got '" + text + "'");
    out.push_back(value);
    pos = comma + 1;
  }
  return out;
}

Edge parse_edge(const std::string& text) {
  const auto v = parse_ints(text);
  if (v.size() != 2) throw Error(Errc::bad_argument, "expected U,V, got '" + text + "'");
  return Edge(v[0], v[1]);
}

/// "0-1;3;5" -> paths {0,1}, {3}, {5}.
LinearForest parse_forest(const std::string& text) {
  std::vector<std::vector<Vertex>> paths;
  std::size_t pos = 0;
  while (pos <= text.size() && !text.empty()) {
    const std::size_t semi = std::min(text.find(';', pos), text.size());
    std::string part = text.substr(pos, semi - pos);
    std::replace(part.begin(), part.end(), '-', ',');
    paths.push_back(parse_ints(part));
    pos = semi + 1;
  }
  return LinearForest(std::move(paths));
}

struct Common {
  std::string out;
  unsigned jobs = 0;
  long long budget_ms = 0;
  bool timings = false;

  SearchOptions search() const {
    SearchOptions s;
    s.time_budget = std::chrono::milliseconds(budget_ms);
    return s;
  }
};

void emit(const Json& doc, const Common& c) {
  const std::string text = doc.dump(2) + "\n";
  if (c.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(c.out);
  if (!f) throw Error(Errc::bad_argument, "cannot write " + c.out);
  f << text;
}

Json cycle_result_json(const Graph& g, const LinearForest& forest, bool all, const SearchOptions& opts) {
  Json j{{"graph_id", emit_graph6(g)}, {"n", g.order()}, {"m", g.size()}};
  if (!forest.empty()) j["forest"] = to_json(forest);
  const CycleEngine engine(g, opts);
  if (all) {
    const auto r = engine.longest_all(forest);
    j["status"] = r.complete() ? "complete" : "budget-exceeded";
    j["length"] = r.length;
    j["count"] = r.cycles.size();
    Json cycles = Json::array();
    for (const auto& c : r.cycles)
      cycles.push_back(Json{{"cycle", to_json(c)}, {"chords", to_json(chords_of_cycle(g, c))}});
    j["cycles"] = std::move(cycles);
    return j;
  }
  const auto r = engine.longest(forest);
  j["status"] = r.complete() ? "complete" : "budget-exceeded";
  j["length"] = r.length;
  if (r.witness) {
    j["witness"] = to_json(*r.witness);
    j["chords"] = to_json(chords_of_cycle(g, *r.witness));
  }
  return j;
}

Json bond_json(const Graph& g, const Bond& b, bool with_chords) {
  Json j{{"side_x", b.side_x}, {"side_y", other_side(g, b)}, {"size", b.size()}, {"edges", to_json(b.edges)}};
  j["p"] = max_bond_bound(g);
  if (with_chords) {
    const auto a = analyze_bond(g, b);
    j["chords"] = to_json(a.chords);
    j["side_x_tree"] = a.side_x_tree;
    j["side_y_tree"] = a.side_y_tree;
    j["edgeless_tree_side"] = a.edgeless_tree_side;
  }
  return j;
}

int run(int argc, char** argv) {
  CLI::App app{"Longest cycles, chords and bonds in small graphs"};
  app.require_subcommand(1);
  Common common;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--out", common.out, "Write the JSON report to FILE instead of stdout");
    sub->add_option("--jobs", common.jobs, "Worker threads (0 = hardware concurrency)");
    sub->add_option("--budget-ms", common.budget_ms, "Search budget per engine call in ms (0 = unlimited)");
    sub->add_flag("--timings", common.timings, "Include wall-clock timings in the report");
  };

  std::string in;

  auto* analyze = app.add_subcommand("analyze", "Basic statistics");
  analyze->add_option("--in", in, "Graph file (.g6 or .edges)")->required();
  add_common(analyze);

  std::string force_edge, force_path;
  bool all = false;
  auto* longest = app.add_subcommand("longest-cycle", "Exact longest cycle");
  longest->add_option("--in", in)->required();
  longest->add_option("--force-edge", force_edge, "U,V");
  longest->add_option("--force-path", force_path, "A,B,C,...");
  longest->add_flag("--all", all, "List every longest cycle");
  add_common(longest);

  std::string cycle_text;
  auto* chords = app.add_subcommand("check-chords", "Validate a cycle and list its chords");
  chords->add_option("--in", in)->required();
  chords->add_option("--cycle", cycle_text, "V0,V1,...")->required();
  add_common(chords);

  std::string theorem, edge_text, forest_text;
  bool sweep_edges = false, sweep_forests = false;
  auto* verify_cmd = app.add_subcommand("verify", "Run a theorem or conjecture check over a corpus");
  verify_cmd->add_option("--theorem", theorem, "main1|main2|main3|harvey|thomassen|harvey-delta")->required();
  verify_cmd->add_option("--in", in)->required();
  verify_cmd->add_option("--edge", edge_text, "U,V (main2, main3)");
  verify_cmd->add_option("--forest", forest_text, "Linear forest for main3, e.g. 0-1;3;5");
  verify_cmd->add_flag("--sweep-edges", sweep_edges, "main2 over every edge of each graph");
  verify_cmd->add_flag("--sweep-forests", sweep_forests, "main3 over every forest with at most one edge");
  add_common(verify_cmd);

  std::string family, dot_file;
  int param = 0;
  auto* gen = app.add_subcommand("gen", "Generate a named family member");
  gen->add_option("--family", family, "figure1|wheel-k4|two-cycle-bipartite|wheel|petersen")->required();
  gen->add_option("--param", param, "Family parameter");
  gen->add_option("--dot", dot_file, "Also write DOT with the designated cycle highlighted");
  add_common(gen);

  std::string partition;
  bool max = false, with_chords = false;
  auto* bond = app.add_subcommand("bond", "Bonds and their cographic chords");
  bond->add_option("--in", in)->required();
  auto* part_opt = bond->add_option("--partition", partition, "Side X as V1,V2,...");
  auto* max_opt = bond->add_flag("--max", max, "Exhaustive maximum bond");
  part_opt->excludes(max_opt);
  bond->add_flag("--chords", with_chords, "Report chords of the bond");
  add_common(bond);

  int question = 1;
  auto* probe = app.add_subcommand("probe", "Open-question probes over a corpus");
  probe->add_option("--question", question)->required()->check(CLI::IsMember({1, 2}));
  probe->add_option("--in", in)->required();
  add_common(probe);

  int n = 0, min_degree = 0, connectivity = 0;
  std::string g6_out;
  auto* enumerate = app.add_subcommand("enumerate", "All graphs up to isomorphism, n <= 8");
  enumerate->add_option("--n", n)->required();
  enumerate->add_option("--min-degree", min_degree)->required();
  enumerate->add_option("--connectivity", connectivity)->required();
  enumerate->add_option("--out", g6_out, "graph6 output file")->required();
  enumerate->add_option("--jobs", common.jobs);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  if (*analyze) {
    Json items = Json::array();
    for (const Graph& g : read_graph_file(in))
      items.push_back(Json{{"graph_id", emit_graph6(g)}, {"stats", to_json(lcchord::analyze(g))}});
    const auto count = items.size();
    emit(envelope("analyze", std::move(items), Json{{"graphs", count}}), common);
  } else if (*longest) {
    if (!force_edge.empty() && !force_path.empty())
      throw Error(Errc::bad_argument, "--force-edge and --force-path are mutually exclusive");
    LinearForest forest;
    if (!force_edge.empty()) {
      const Edge e = parse_edge(force_edge);
      forest = LinearForest::single_edge(e.u, e.v);
    } else if (!force_path.empty()) {
      forest = LinearForest({parse_ints(force_path)});
    }
    const auto graphs = read_graph_file(in);
    for (const Graph& g : graphs) forest.validate(g);
    const auto results = parallel_map(
        std::span<const Graph>(graphs),
        [&](const Graph& g) { return cycle_result_json(g, forest, all, common.search()); }, common.jobs);
    Json items(results);
    const auto count = items.size();
    emit(envelope("longest-cycle", std::move(items), Json{{"graphs", count}}), common);
  } else if (*chords) {
    const Cycle c(parse_ints(cycle_text));
    Json items = Json::array();
    for (const Graph& g : read_graph_file(in)) {
      c.validate(g);
      const auto cs = chords_of_cycle(g, c);
      items.push_back(Json{{"graph_id", emit_graph6(g)},
                           {"cycle", to_json(c)},
                           {"length", c.length()},
                           {"chords", to_json(cs)},
                           {"chordless", cs.empty()}});
    }
    const auto count = items.size();
    emit(envelope("check-chords", std::move(items), Json{{"graphs", count}}), common);
  } else if (*verify_cmd) {
    const auto id = parse_theorem(theorem);
    if (!id) throw Error(Errc::bad_argument, "unknown theorem '" + theorem + "'");
    if (sweep_edges && *id != TheoremId::main2) throw Error(Errc::bad_argument, "--sweep-edges applies to main2");
    if (sweep_forests && *id != TheoremId::main3)
      throw Error(Errc::bad_argument, "--sweep-forests applies to main3");
    if (sweep_edges && !edge_text.empty()) throw Error(Errc::bad_argument, "--sweep-edges conflicts with --edge");
    std::optional<Edge> edge;
    std::optional<LinearForest> forest;
    if (!edge_text.empty()) edge = parse_edge(edge_text);
    if (!forest_text.empty()) forest = parse_forest(forest_text);
    const auto sweep = sweep_edges ? SweepMode::edges : sweep_forests ? SweepMode::forests : SweepMode::none;
    const auto corpus = read_graph_file(in);
    VerifyOptions options;
    options.search = common.search();
    const auto reports = verify_corpus(*id, corpus, edge, forest, sweep, options, common.jobs);
    emit(verification_document(reports, common.timings), common);
  } else if (*gen) {
    const auto id = parse_family(family);
    if (!id) throw Error(Errc::bad_argument, "unknown family '" + family + "'");
    const auto fg = gen_family(*id, param);
    Json item{{"family", family_name(*id)},
              {"param", fg.meta.param},
              {"graph_id", emit_graph6(fg.graph)},
              {"n", fg.graph.order()},
              {"m", fg.graph.size()},
              {"edges", to_json(fg.graph.edges())}};
    std::vector<Edge> cycle_chords;
    if (fg.meta.designated_cycle) {
      cycle_chords = chords_of_cycle(fg.graph, *fg.meta.designated_cycle);
      item["designated_cycle"] = to_json(*fg.meta.designated_cycle);
      item["designated_cycle_chords"] = to_json(cycle_chords);
    }
    if (fg.meta.bond_side) item["bond_side"] = *fg.meta.bond_side;
    item["verified"] = fg.meta.verified;
    if (fg.meta.measured_circumference) item["measured_circumference"] = *fg.meta.measured_circumference;
    if (!dot_file.empty()) {
      std::ofstream f(dot_file);
      if (!f) throw Error(Errc::bad_argument, "cannot write " + dot_file);
      f << export_dot(fg.graph, fg.meta.designated_cycle, cycle_chords);
    }
    emit(envelope("gen", Json::array({item}), Json{{"graphs", 1}}), common);
  } else if (*bond) {
    if (partition.empty() && !max) throw Error(Errc::bad_argument, "bond needs --partition or --max");
    Json items = Json::array();
    for (const Graph& g : read_graph_file(in)) {
      Json j{{"graph_id", emit_graph6(g)}};
      if (max) {
        const auto r = max_bond(g);
        j["max_bond"] = bond_json(g, r.witness, with_chords);
      } else {
        j["bond"] = bond_json(g, bond_from_partition(g, parse_ints(partition)), with_chords);
      }
      items.push_back(std::move(j));
    }
    const auto count = items.size();
    emit(envelope("bond", std::move(items), Json{{"graphs", count}}), common);
  } else if (*probe) {
    const auto corpus = read_graph_file(in);
    VerifyOptions options;
    options.search = common.search();
    const auto r = question == 1 ? probe_question1(corpus, options, common.jobs)
                                 : probe_question2(corpus, options, common.jobs);
    emit(probe_document(question, r), common);
  } else if (*enumerate) {
    const auto graphs = enumerate_graphs(n, min_degree, connectivity);
    write_graph6_file(g6_out, graphs);
    std::cout << envelope("enumerate", Json::array(),
                          Json{{"n", n},
                               {"min_degree", min_degree},
                               {"connectivity", connectivity},
                               {"count", graphs.size()},
                               {"out", g6_out}})
                     .dump(2)
              << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const lcchord::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
