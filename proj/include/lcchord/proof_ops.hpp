#pragma once

// Executable forms of the exchange argument and the component contraction.
//
// Exchange. On an oriented cycle C = v_0 v_1 ... v_{L-1}, two off-cycle
// vertices u != v with u ~ v_i, v_j and v ~ v_{i+1}, v_{j+1} (indices mod L,
// the four attachment vertices pairwise distinct) give the longer cycle
//     v_i u v_j v_{j-1} ... v_{i+1} v v_{j+1} ... v_{i-1}
// of length L + 2. It drops exactly the cycle edges v_i v_{i+1} and
// v_j v_{j+1}, so any forced forest on C survives unless one of those two
// edges belongs to it.
//
// Pattern search. Colour the cycle neighbours of u red and their successors
// along C blue; a witness is a second off-cycle vertex v adjacent to the blue
// successors of two red vertices v_i, v_j that are at least two apart. The
// scan is the plain loop in (u, v, i, j) order, so the first hit is the
// lexicographically least witness.

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "lcchord/error.hpp"
#include "lcchord/graph.hpp"

namespace lcchord {

/// Witness for the exchange; i < j are positions on the cycle as stored.
struct AugmentationWitness {
  Vertex u = 0;
  Vertex v = 0;
  int i = 0;
  int j = 0;

  friend auto operator<=>(const AugmentationWitness&, const AugmentationWitness&) = default;
};

namespace detail {

inline bool forest_uses_edge(const LinearForest& f, Vertex a, Vertex b) {
  const auto es = f.edges();
  return std::binary_search(es.begin(), es.end(), Edge(a, b));
}

/// Empty string when the witness is valid; otherwise the violated clause.
inline std::string witness_violation(const Graph& g, const Cycle& c, const LinearForest& f,
                                     const AugmentationWitness& w) {
  const int len = c.length();
  if (w.u == w.v) return "u and v must differ";
  if (!g.contains(w.u) || !g.contains(w.v)) return "u or v not in graph";
  if (c.contains(w.u) || c.contains(w.v)) return "u and v must lie off the cycle";
  if (w.i < 0 || w.j >= len || w.i >= w.j) return "need 0 <= i < j < |C|";
  if (w.j - w.i < 2) return "attachment v_{i+1} coincides with v_j";
  if ((w.j + 1) % len == w.i) return "attachment v_{j+1} coincides with v_i";
  const Vertex vi = c.at(w.i), vi1 = c.at(w.i + 1), vj = c.at(w.j), vj1 = c.at(w.j + 1);
  if (!g.adjacent(w.u, vi)) return "u not adjacent to v_i";
  if (!g.adjacent(w.u, vj)) return "u not adjacent to v_j";
  if (!g.adjacent(w.v, vi1)) return "v not adjacent to v_{i+1}";
  if (!g.adjacent(w.v, vj1)) return "v not adjacent to v_{j+1}";
  if (forest_uses_edge(f, vi, vi1) || forest_uses_edge(f, vj, vj1)) return "forced edge on exchanged segment";
  return {};
}

inline void require_forest_on_cycle(const Graph& g, const Cycle& c, const LinearForest& f) {
  f.validate(g);
  if (!f.contained_in(c)) throw Error(Errc::invalid_forest, "forced forest is not contained in the cycle");
}

}  // namespace detail

inline Cycle augment_lemma1(const Graph& g, const Cycle& c, const LinearForest& f, const AugmentationWitness& w) {
  c.validate(g);
  detail::require_forest_on_cycle(g, c, f);
  if (auto why = detail::witness_violation(g, c, f, w); !why.empty()) throw Error(Errc::bad_witness, why);

  std::vector<Vertex> out;
  out.reserve(c.size() + 2);
  out.push_back(c.at(w.i));
  out.push_back(w.u);
  for (int p = w.j; p > w.i; --p) out.push_back(c.at(p));
  out.push_back(w.v);
  const int len = c.length();
  for (int p = w.j + 1; p < w.i + len; ++p) out.push_back(c.at(p));
  return Cycle(std::move(out));
}

inline std::optional<AugmentationWitness> find_lemma1_pattern(const Graph& g, const Cycle& c,
                                                              const LinearForest& f = {}) {
  c.validate(g);
  detail::require_forest_on_cycle(g, c, f);
  const int len = c.length();
  std::vector<Vertex> off;
  for (Vertex x = 0; x < g.order(); ++x)
    if (!c.contains(x)) off.push_back(x);

  // Positions adjacent to each off-cycle vertex.
  std::vector<std::vector<char>> touches(static_cast<std::size_t>(g.order()));
  for (Vertex x : off) {
    auto& t = touches[x];
    t.assign(static_cast<std::size_t>(len), 0);
    int count = 0;
    for (int p = 0; p < len; ++p) count += (t[p] = g.adjacent(x, c.at(p)) ? 1 : 0);
    if (count < 2) t.clear();
  }
  const auto blocked = [&](int p) { return detail::forest_uses_edge(f, c.at(p), c.at(p + 1)); };

  for (Vertex u : off) {
    if (touches[u].empty()) continue;
    for (Vertex v : off) {
      if (v == u || touches[v].empty()) continue;
      for (int i = 0; i < len; ++i) {
        if (!touches[u][i] || !touches[v][(i + 1) % len] || blocked(i)) continue;
        for (int j = i + 2; j < len; ++j) {
          if ((j + 1) % len == i) continue;
          if (touches[u][j] && touches[v][(j + 1) % len] && !blocked(j)) return AugmentationWitness{u, v, i, j};
        }
      }
    }
  }
  return std::nullopt;
}

struct Contraction {
  Graph g1;
  /// G vertex -> G1 vertex.
  std::vector<Vertex> component_map;
  /// Number of components of G - V(C).
  int t = 0;
  /// The cycle in G1 ids.
  Cycle cycle;
};

/// Collapses each component of G - V(C) to one vertex, dropping multi-edges.
/// G1 keeps V(C) and the least vertex of every component, relabelled in
/// increasing order of their G ids, so a contraction with nothing to merge
/// returns G itself.
inline Contraction contract_off_cycle(const Graph& g, const Cycle& c) {
  c.validate(g);
  const int n = g.order();
  std::vector<char> on_cycle(static_cast<std::size_t>(n), 0);
  for (Vertex x : c.verts()) on_cycle[x] = 1;

  std::vector<int> comp;
  const int t = label_components(g, comp, &on_cycle);

  // Representative: cycle vertices represent themselves; a component is
  // represented by its least vertex.
  std::vector<Vertex> rep(static_cast<std::size_t>(n), -1);
  std::vector<Vertex> comp_rep(static_cast<std::size_t>(t), -1);
  for (Vertex x = 0; x < n; ++x) {
    if (on_cycle[x]) rep[x] = x;
    else {
      if (comp_rep[comp[x]] == -1) comp_rep[comp[x]] = x;
      rep[x] = comp_rep[comp[x]];
    }
  }
  std::vector<Vertex> kept;
  for (Vertex x = 0; x < n; ++x)
    if (rep[x] == x) kept.push_back(x);
  std::vector<Vertex> index(static_cast<std::size_t>(n), -1);
  for (std::size_t i = 0; i < kept.size(); ++i) index[kept[i]] = static_cast<Vertex>(i);

  std::vector<Edge> es;
  for (const Edge& e : g.edges()) {
    const Vertex a = index[rep[e.u]];
    const Vertex b = index[rep[e.v]];
    if (a != b) es.emplace_back(a, b);
  }
  std::vector<Vertex> map(static_cast<std::size_t>(n));
  for (Vertex x = 0; x < n; ++x) map[x] = index[rep[x]];
  std::vector<Vertex> cyc;
  for (Vertex x : c.verts()) cyc.push_back(map[x]);

  return Contraction{Graph::from_edges(static_cast<int>(kept.size()), es), std::move(map), t, Cycle(std::move(cyc))};
}

}  // namespace lcchord
