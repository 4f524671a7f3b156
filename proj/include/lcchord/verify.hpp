#pragma once

// Theorem and conjecture verifiers, the two probes, and corpus drivers.
//
// A verifier first checks the structural hypothesis (minimum degree,
// connectivity), then the length threshold on the relevant longest cycle
// (plain, through an edge, or through a linear forest), and only then
// enumerates every longest cycle and looks for one without a chord.
// A search that runs out of budget yields inconclusive-budget, never a
// verdict. Disconnected inputs need no special casing: longest cycles sit
// inside components and chords are local, which is the same reduction the
// disconnected cases of the theorems use.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lcchord/bounds.hpp"
#include "lcchord/cycle_search.hpp"
#include "lcchord/error.hpp"
#include "lcchord/graph.hpp"
#include "lcchord/graph6.hpp"
#include "lcchord/parallel.hpp"

namespace lcchord {

enum class TheoremId { main1, main2, main3, harvey, thomassen, harvey_delta };

inline std::string_view theorem_name(TheoremId id) {
  switch (id) {
    case TheoremId::main1: return "main1";
    case TheoremId::main2: return "main2";
    case TheoremId::main3: return "main3";
    case TheoremId::harvey: return "harvey";
    case TheoremId::thomassen: return "thomassen";
    case TheoremId::harvey_delta: return "harvey-delta";
  }
  return "?";
}

inline std::optional<TheoremId> parse_theorem(std::string_view s) {
  for (auto id : {TheoremId::main1, TheoremId::main2, TheoremId::main3, TheoremId::harvey, TheoremId::thomassen,
                  TheoremId::harvey_delta})
    if (theorem_name(id) == s) return id;
  return std::nullopt;
}

enum class Verdict { holds, counterexample, inconclusive_budget };

inline std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::holds: return "holds";
    case Verdict::counterexample: return "counterexample";
    case Verdict::inconclusive_budget: return "inconclusive-budget";
  }
  return "?";
}

struct VerificationReport {
  std::string graph_id;  // graph6
  TheoremId theorem = TheoremId::main1;
  std::optional<Edge> edge;
  std::optional<LinearForest> forest;

  bool hypothesis_met = false;
  bool vacuous = false;
  /// `holds` for vacuous reports.
  Verdict verdict = Verdict::holds;

  int n = 0;
  int m = 0;
  int min_degree = 0;
  /// Length of the longest cycle the theorem talks about (0: none exists).
  int longest_length = 0;
  /// Longest cycles examined; 0 unless the hypothesis was met.
  int longest_count = 0;
  /// Fewest chords over the examined cycles; -1 when none were examined.
  int min_chords = -1;
  std::optional<Cycle> chordless_cycle;
  std::optional<Cycle> sample_cycle;
  std::vector<Edge> sample_chords;
  std::vector<std::string> notes;
  double elapsed_ms = 0.0;
};

struct VerifyOptions {
  SearchOptions search;
};

namespace detail {

inline std::optional<std::string> structural_gap(TheoremId id, const Graph& g) {
  const int n = g.order();
  const int delta = g.min_degree();
  switch (id) {
    case TheoremId::main1:
    case TheoremId::main2:
    case TheoremId::main3:
      if (delta < 3) return "minimum degree " + std::to_string(delta) + " < 3";
      return std::nullopt;
    case TheoremId::harvey:
      if (delta < 3) return "minimum degree " + std::to_string(delta) + " < 3";
      if (!is_k_connected(g, 2)) return "not 2-connected";
      return std::nullopt;
    case TheoremId::thomassen:
      if (!is_k_connected(g, 3)) return "not 3-connected";
      return std::nullopt;
    case TheoremId::harvey_delta:
      if (!meets_threshold(ThresholdId::harvey_delta, n, delta))
        return "minimum degree " + std::to_string(delta) + " below sqrt(n)";
      return std::nullopt;
  }
  return std::nullopt;
}

inline std::optional<ThresholdId> length_threshold(TheoremId id) {
  switch (id) {
    case TheoremId::main1: return ThresholdId::main1;
    case TheoremId::main2: return ThresholdId::main2;
    case TheoremId::main3: return ThresholdId::main3;
    default: return std::nullopt;
  }
}

inline LinearForest forest_for(TheoremId id, const Graph& g, const std::optional<Edge>& edge,
                               const std::optional<LinearForest>& forest) {
  switch (id) {
    case TheoremId::main2:
      if (!edge || forest) throw Error(Errc::bad_argument, "main2 takes exactly one edge");
      if (!g.adjacent(edge->u, edge->v))
        throw Error(Errc::bad_argument, "edge " + to_string(*edge) + " is not an edge of the graph");
      return LinearForest::single_edge(edge->u, edge->v);
    case TheoremId::main3: {
      if (edge && forest) throw Error(Errc::bad_argument, "main3 takes an edge or a forest, not both");
      if (!edge && !forest) throw Error(Errc::bad_argument, "main3 needs a linear forest");
      LinearForest f = edge ? LinearForest::single_edge(edge->u, edge->v) : *forest;
      if (f.edge_count() > 1) throw Error(Errc::bad_argument, "main3 forests have at most one edge");
      f.validate(g);
      return f;
    }
    default:
      if (edge || forest)
        throw Error(Errc::bad_argument, std::string(theorem_name(id)) + " takes no edge or forest");
      return {};
  }
}

}  // namespace detail

inline VerificationReport verify(TheoremId id, const Graph& g, const std::optional<Edge>& edge = std::nullopt,
                                 const std::optional<LinearForest>& forest = std::nullopt,
                                 const VerifyOptions& options = {}) {
  const auto started = std::chrono::steady_clock::now();
  VerificationReport r;
  r.theorem = id;
  r.edge = edge;
  r.forest = forest;
  const LinearForest f = detail::forest_for(id, g, edge, forest);
  r.graph_id = emit_graph6(g);
  r.n = g.order();
  r.m = g.size();
  r.min_degree = g.min_degree();

  auto finish = [&]() -> VerificationReport& {
    r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started).count();
    return r;
  };
  auto vacuous = [&](std::string why) -> VerificationReport& {
    r.vacuous = true;
    r.hypothesis_met = false;
    r.verdict = Verdict::holds;
    r.notes.push_back(std::move(why));
    return finish();
  };

  if (g.order() == 0) return vacuous("empty graph");
  if (component_count(g) > 1) r.notes.push_back("disconnected input: longest cycles are checked inside their components");
  if (auto gap = detail::structural_gap(id, g)) return vacuous(*gap);

  const CycleEngine engine(g, options.search);
  const auto max = engine.longest(f);
  r.longest_length = max.length;
  if (!max.complete()) {
    r.verdict = Verdict::inconclusive_budget;
    r.notes.push_back("search budget exceeded while computing the longest cycle");
    return finish();
  }
  if (max.length == 0) return vacuous(f.empty() ? "graph is acyclic" : "no cycle contains the forced forest");
  if (auto th = detail::length_threshold(id); th && !meets_threshold(*th, r.n, max.length))
    return vacuous("length " + std::to_string(max.length) + " below the " + std::string(threshold_name(*th)) +
                   " threshold");

  r.hypothesis_met = true;
  const auto all = engine.cycles_of_length(max.length, f);
  if (!all.complete()) {
    r.verdict = Verdict::inconclusive_budget;
    r.notes.push_back("search budget exceeded while enumerating longest cycles");
    return finish();
  }
  r.longest_count = static_cast<int>(all.cycles.size());
  for (const Cycle& c : all.cycles) {
    const auto chords = chords_of_cycle(g, c);
    const int count = static_cast<int>(chords.size());
    if (r.min_chords < 0 || count < r.min_chords) r.min_chords = count;
    if (!r.sample_cycle) {
      r.sample_cycle = c;
      r.sample_chords = chords;
    }
    if (count == 0 && !r.chordless_cycle) r.chordless_cycle = c;
  }
  r.verdict = r.chordless_cycle ? Verdict::counterexample : Verdict::holds;
  return finish();
}

/// Runs `main2` once per edge of g.
inline std::vector<VerificationReport> verify_edge_sweep(const Graph& g, const VerifyOptions& options = {}) {
  std::vector<VerificationReport> out;
  for (const Edge& e : g.edges()) out.push_back(verify(TheoremId::main2, g, e, std::nullopt, options));
  return out;
}

/// Every linear forest with at most one edge: an optional edge plus any set
/// of further vertices as trivial paths (the empty forest included).
inline std::vector<LinearForest> forests_with_at_most_one_edge(const Graph& g) {
  const int n = g.order();
  if (n > 20) throw Error(Errc::too_large, "forest sweep is exponential; capped at 20 vertices");
  std::vector<LinearForest> out;
  auto add_subsets = [&](std::optional<Edge> e) {
    std::vector<Vertex> free;
    for (Vertex v = 0; v < n; ++v)
      if (!e || (v != e->u && v != e->v)) free.push_back(v);
    for (std::uint32_t s = 0; s < (1u << free.size()); ++s) {
      std::vector<std::vector<Vertex>> paths;
      if (e) paths.push_back({e->u, e->v});
      for (std::size_t i = 0; i < free.size(); ++i)
        if (s >> i & 1u) paths.push_back({free[i]});
      out.emplace_back(std::move(paths));
    }
  };
  add_subsets(std::nullopt);
  for (const Edge& e : g.edges()) add_subsets(e);
  return out;
}

inline std::vector<VerificationReport> verify_forest_sweep(const Graph& g, const VerifyOptions& options = {}) {
  std::vector<VerificationReport> out;
  for (const auto& f : forests_with_at_most_one_edge(g))
    out.push_back(verify(TheoremId::main3, g, std::nullopt, f, options));
  return out;
}

enum class SweepMode { none, edges, forests };

inline std::string extra_key(const VerificationReport& r) {
  if (r.edge) return to_string(*r.edge);
  if (r.forest) return to_string(*r.forest);
  return {};
}

/// Verifies every graph of a corpus in parallel. Reports are sorted by
/// (graph6, extra) so the output is independent of the worker count.
inline std::vector<VerificationReport> verify_corpus(TheoremId id, std::span<const Graph> corpus,
                                                     const std::optional<Edge>& edge = std::nullopt,
                                                     const std::optional<LinearForest>& forest = std::nullopt,
                                                     SweepMode sweep = SweepMode::none,
                                                     const VerifyOptions& options = {}, unsigned jobs = 0) {
  auto per_graph = parallel_map(
      corpus,
      [&](const Graph& g) -> std::vector<VerificationReport> {
        switch (sweep) {
          case SweepMode::edges: return verify_edge_sweep(g, options);
          case SweepMode::forests: return verify_forest_sweep(g, options);
          case SweepMode::none: break;
        }
        return {verify(id, g, edge, forest, options)};
      },
      jobs);
  std::vector<VerificationReport> out;
  for (auto& v : per_graph)
    for (auto& r : v) out.push_back(std::move(r));
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.graph_id != b.graph_id) return a.graph_id < b.graph_id;
    return extra_key(a) < extra_key(b);
  });
  return out;
}

struct VerdictCounts {
  int holds = 0;
  int counterexample = 0;
  int inconclusive_budget = 0;
  int vacuous = 0;
  int hypothesis_met = 0;
};

inline VerdictCounts count_verdicts(std::span<const VerificationReport> reports) {
  VerdictCounts c;
  for (const auto& r : reports) {
    switch (r.verdict) {
      case Verdict::holds: ++c.holds; break;
      case Verdict::counterexample: ++c.counterexample; break;
      case Verdict::inconclusive_budget: ++c.inconclusive_budget; break;
    }
    c.vacuous += r.vacuous;
    c.hypothesis_met += r.hypothesis_met;
  }
  return c;
}

// ---------------------------------------------------------------------------
// Probes

/// Nonnegative fraction in lowest terms.
struct Ratio {
  std::int64_t num = 0;
  std::int64_t den = 1;

  static Ratio of(std::int64_t a, std::int64_t b) {
    const auto g = std::gcd(a, b);
    return {a / g, b / g};
  }
  friend bool operator==(const Ratio&, const Ratio&) = default;
  friend bool operator<(const Ratio& a, const Ratio& b) { return a.num * b.den < b.num * a.den; }
};

inline std::string to_string(const Ratio& r) { return std::to_string(r.num) + "/" + std::to_string(r.den); }

struct ProbeEntry {
  std::string graph_id;
  int n = 0;
  int circumference = 0;
  int longest_count = 0;
  int chordless_count = 0;
  /// Empty when the graph was considered; otherwise why it was skipped.
  std::string skipped;
  bool inconclusive = false;
  std::optional<Cycle> chordless_witness;
};

struct ProbeResult {
  std::optional<Ratio> best_ratio;
  std::string best_graph;
  std::optional<Cycle> best_witness;
  std::vector<ProbeEntry> table;
  int considered = 0;
  int inconclusive = 0;
  /// Question 2: graphs inside the restriction with a chordless longest cycle.
  int chordless_hits = 0;
};

namespace detail {

inline ProbeEntry probe_entry(const Graph& g, const VerifyOptions& options) {
  ProbeEntry e;
  e.graph_id = emit_graph6(g);
  e.n = g.order();
  const auto all = longest_cycles_all(g, {}, options.search);
  if (!all.complete()) {
    e.inconclusive = true;
    return e;
  }
  e.circumference = all.length;
  e.longest_count = static_cast<int>(all.cycles.size());
  for (const auto& c : all.cycles)
    if (is_chordless(g, c)) {
      if (!e.chordless_witness) e.chordless_witness = c;
      ++e.chordless_count;
    }
  return e;
}

inline void sort_table(std::vector<ProbeEntry>& table) {
  std::stable_sort(table.begin(), table.end(), [](const auto& a, const auto& b) { return a.graph_id < b.graph_id; });
}

}  // namespace detail

/// Largest c(G)/n over corpus graphs with minimum degree >= 3 that have a
/// chordless longest cycle. Ties go to the smaller graph6 string.
inline ProbeResult probe_question1(std::span<const Graph> corpus, const VerifyOptions& options = {},
                                   unsigned jobs = 0) {
  ProbeResult res;
  res.table = parallel_map(
      corpus,
      [&](const Graph& g) {
        if (g.order() == 0 || g.min_degree() < 3) {
          ProbeEntry e;
          e.graph_id = emit_graph6(g);
          e.n = g.order();
          e.skipped = "minimum degree below 3";
          return e;
        }
        return detail::probe_entry(g, options);
      },
      jobs);
  detail::sort_table(res.table);
  for (const auto& e : res.table) {
    if (!e.skipped.empty()) continue;
    ++res.considered;
    if (e.inconclusive) {
      ++res.inconclusive;
      continue;
    }
    if (e.chordless_count == 0) continue;
    const Ratio r = Ratio::of(e.circumference, e.n);
    if (!res.best_ratio || *res.best_ratio < r) {
      res.best_ratio = r;
      res.best_graph = e.graph_id;
      res.best_witness = e.chordless_witness;
    }
  }
  return res;
}

/// Looks for chordless longest cycles among 2-connected graphs with minimum
/// degree >= 3 and circumference >= 2 sqrt(n). Hits are counted and kept in
/// the table; nothing is filtered out of the report.
inline ProbeResult probe_question2(std::span<const Graph> corpus, const VerifyOptions& options = {},
                                   unsigned jobs = 0) {
  ProbeResult res;
  res.table = parallel_map(
      corpus,
      [&](const Graph& g) {
        ProbeEntry e;
        e.graph_id = emit_graph6(g);
        e.n = g.order();
        if (g.order() == 0 || g.min_degree() < 3) {
          e.skipped = "minimum degree below 3";
          return e;
        }
        if (!is_k_connected(g, 2)) {
          e.skipped = "not 2-connected";
          return e;
        }
        e = detail::probe_entry(g, options);
        if (!e.inconclusive && !meets_threshold(ThresholdId::q2, e.n, e.circumference)) {
          e.skipped = "circumference " + std::to_string(e.circumference) + " below 2 sqrt(n)";
          e.chordless_count = 0;
          e.chordless_witness.reset();
        }
        return e;
      },
      jobs);
  detail::sort_table(res.table);
  for (const auto& e : res.table) {
    if (!e.skipped.empty()) continue;
    ++res.considered;
    if (e.inconclusive) ++res.inconclusive;
    if (e.chordless_count > 0) ++res.chordless_hits;
  }
  return res;
}

}  // namespace lcchord
