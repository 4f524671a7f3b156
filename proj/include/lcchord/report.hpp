#pragma once

// JSON serialization of reports. Needs nlohmann/json (vendor/json.hpp).
//
// Output is deterministic: no timings unless asked for, items in the order
// the drivers produced them (already sorted by graph6).

#include <span>
#include <string>
#include <vector>

#include "json.hpp"
#include "lcchord/cographic.hpp"
#include "lcchord/cycle_search.hpp"
#include "lcchord/graph.hpp"
#include "lcchord/verify.hpp"
#include "lcchord/version.hpp"

namespace lcchord {

using Json = nlohmann::ordered_json;

inline Json to_json(const Edge& e) { return Json::array({e.u, e.v}); }

inline Json to_json(std::span<const Edge> es) {
  Json a = Json::array();
  for (const Edge& e : es) a.push_back(to_json(e));
  return a;
}

inline Json to_json(const Cycle& c) { return Json(c.verts()); }

inline Json to_json(const LinearForest& f) { return Json(f.paths()); }

inline Json to_json(const StatsRecord& s) {
  return Json{{"n", s.n},
              {"m", s.m},
              {"min_degree", s.min_degree},
              {"max_degree", s.max_degree},
              {"connected", s.connected},
              {"biconnected", s.biconnected},
              {"triconnected", s.triconnected},
              {"components", s.components}};
}

inline Json to_json(const VerificationReport& r, bool timings = false) {
  Json j{{"graph_id", r.graph_id}, {"theorem", theorem_name(r.theorem)}};
  if (r.edge) j["edge"] = to_json(*r.edge);
  if (r.forest) j["forest"] = to_json(*r.forest);
  j["n"] = r.n;
  j["m"] = r.m;
  j["min_degree"] = r.min_degree;
  j["hypothesis_met"] = r.hypothesis_met;
  j["vacuous"] = r.vacuous;
  j["verdict"] = verdict_name(r.verdict);
  Json w{{"longest_length", r.longest_length}, {"longest_count", r.longest_count}};
  if (r.min_chords >= 0) w["min_chords"] = r.min_chords;
  if (r.chordless_cycle) w["chordless_cycle"] = to_json(*r.chordless_cycle);
  if (r.sample_cycle) {
    w["sample_cycle"] = to_json(*r.sample_cycle);
    w["sample_chords"] = to_json(r.sample_chords);
  }
  j["witnesses"] = std::move(w);
  if (!r.notes.empty()) j["notes"] = r.notes;
  if (timings) j["timings"] = Json{{"elapsed_ms", r.elapsed_ms}};
  return j;
}

inline Json summary_counts(std::span<const VerificationReport> reports) {
  const auto c = count_verdicts(reports);
  return Json{{"holds", c.holds},
              {"counterexample", c.counterexample},
              {"inconclusive-budget", c.inconclusive_budget},
              {"vacuous", c.vacuous},
              {"hypothesis_met", c.hypothesis_met}};
}

inline Json envelope(std::string_view command, Json items, Json summary) {
  return Json{{"tool_version", kToolVersion},
              {"command", command},
              {"items", std::move(items)},
              {"summary", std::move(summary)}};
}

inline Json verification_document(std::span<const VerificationReport> reports, bool timings = false) {
  Json items = Json::array();
  for (const auto& r : reports) items.push_back(to_json(r, timings));
  return envelope("verify", std::move(items), summary_counts(reports));
}

inline Json to_json(const ProbeEntry& e) {
  Json j{{"graph_id", e.graph_id}, {"n", e.n}};
  if (!e.skipped.empty()) {
    j["skipped"] = e.skipped;
    return j;
  }
  if (e.inconclusive) {
    j["verdict"] = "inconclusive-budget";
    return j;
  }
  j["circumference"] = e.circumference;
  j["longest_count"] = e.longest_count;
  j["chordless_count"] = e.chordless_count;
  if (e.chordless_witness) j["chordless_cycle"] = to_json(*e.chordless_witness);
  return j;
}

inline Json probe_document(int question, const ProbeResult& r) {
  Json items = Json::array();
  for (const auto& e : r.table) items.push_back(to_json(e));
  Json summary{{"question", question}, {"considered", r.considered}, {"inconclusive-budget", r.inconclusive}};
  if (question == 1) {
    if (r.best_ratio) {
      summary["max_ratio"] = to_string(*r.best_ratio);
      summary["best_graph"] = r.best_graph;
      if (r.best_witness) summary["best_witness"] = to_json(*r.best_witness);
    } else {
      summary["max_ratio"] = nullptr;
      summary["note"] = "no qualifying graph";
    }
  } else {
    summary["chordless_hits"] = r.chordless_hits;
  }
  return envelope("probe", std::move(items), std::move(summary));
}

}  // namespace lcchord
