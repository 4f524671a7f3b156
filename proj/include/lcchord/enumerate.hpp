#pragma once

// One representative per isomorphism class of small graphs.
//
// Canonical form: colour refinement from the trivial colouring, then
// individualise each vertex of the first non-singleton cell in turn and
// recurse until the colouring is discrete. Every leaf is a labelling; the
// canonical code is the largest adjacency code over all leaves. The search
// tree depends only on the isomorphism class, so equal codes <=> isomorphic.
//
// Enumeration grows classes one vertex at a time. If G has minimum degree
// d, deleting any n - j vertices leaves minimum degree >= d - (n - j), so
// level j only keeps graphs meeting that bound.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <set>
#include <vector>

#include "lcchord/error.hpp"
#include "lcchord/graph.hpp"

namespace lcchord {

/// Adjacency bit for pair (i, j), i < j, in graph6 column order.
constexpr int pair_index(int i, int j) { return j * (j - 1) / 2 + i; }

inline constexpr int kCanonMaxOrder = 11;
inline constexpr int kEnumerateMaxOrder = 8;

inline std::uint64_t adjacency_code(const Graph& g, const std::vector<int>& label) {
  std::uint64_t code = 0;
  for (const Edge& e : g.edges()) {
    int a = label[e.u], b = label[e.v];
    if (a > b) std::swap(a, b);
    code |= std::uint64_t{1} << pair_index(a, b);
  }
  return code;
}

inline Graph graph_from_code(int n, std::uint64_t code) {
  std::vector<Edge> es;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i)
      if (code >> pair_index(i, j) & 1u) es.emplace_back(i, j);
  return Graph::from_edges(n, es);
}

namespace detail {

class Canonizer {
 public:
  explicit Canonizer(const Graph& g) : g_(g), n_(g.order()) {}

  std::uint64_t run() {
    std::vector<int> colour(static_cast<std::size_t>(n_), 0);
    search(colour);
    return best_;
  }

 private:
  int refine(std::vector<int>& colour) const {
    int k = count_colours(colour);
    while (true) {
      std::vector<std::vector<int>> sig(static_cast<std::size_t>(n_));
      for (int v = 0; v < n_; ++v) {
        auto& s = sig[v];
        s.assign(static_cast<std::size_t>(k) + 1, 0);
        s[0] = colour[v];
        for (Vertex w : g_.neighbors(v)) ++s[1 + colour[w]];
      }
      std::vector<int> order(static_cast<std::size_t>(n_));
      for (int v = 0; v < n_; ++v) order[v] = v;
      std::sort(order.begin(), order.end(), [&](int a, int b) { return sig[a] < sig[b]; });
      int next = 0;
      for (int i = 0; i < n_; ++i) {
        if (i > 0 && sig[order[i]] != sig[order[i - 1]]) ++next;
        colour[order[i]] = next;
      }
      const int k2 = n_ == 0 ? 0 : next + 1;
      if (k2 == k) return k;
      k = k2;
    }
  }

  static int count_colours(const std::vector<int>& colour) {
    int k = 0;
    for (int c : colour) k = std::max(k, c + 1);
    return k;
  }

  void search(std::vector<int> colour) {
    const int k = refine(colour);
    if (k == n_) {
      const std::uint64_t code = adjacency_code(g_, colour);
      if (!found_ || code > best_) best_ = code;
      found_ = true;
      return;
    }
    std::vector<int> size(static_cast<std::size_t>(k), 0);
    for (int c : colour) ++size[c];
    int cell = 0;
    while (size[cell] < 2) ++cell;
    for (int v = 0; v < n_; ++v) {
      if (colour[v] != cell) continue;
      std::vector<int> next(colour);
      for (int w = 0; w < n_; ++w) {
        if (colour[w] > cell) ++next[w];
        else if (colour[w] == cell && w != v) next[w] = cell + 1;
      }
      search(std::move(next));
    }
  }

  const Graph& g_;
  int n_;
  std::uint64_t best_ = 0;
  bool found_ = false;
};

}  // namespace detail

inline std::uint64_t canonical_code(const Graph& g) {
  if (g.order() > kCanonMaxOrder) throw Error(Errc::too_large, "canonical form is limited to 11 vertices");
  return detail::Canonizer(g).run();
}

inline Graph canonical_form(const Graph& g) { return graph_from_code(g.order(), canonical_code(g)); }

inline bool isomorphic(const Graph& a, const Graph& b) {
  return a.order() == b.order() && a.size() == b.size() && canonical_code(a) == canonical_code(b);
}

namespace detail {

/// Canonical codes of all graphs on n vertices with minimum degree >= d.
inline std::vector<std::uint64_t> grow_classes(int n, int min_degree) {
  std::vector<std::uint64_t> level{0};  // the one-vertex graph
  if (n == 0) return {0};
  for (int j = 2; j <= n; ++j) {
    const int need = std::max(0, min_degree - (n - j));
    std::set<std::uint64_t> next;
    for (std::uint64_t parent : level) {
      const Graph h = graph_from_code(j - 1, parent);
      const auto base = h.edges();
      for (std::uint32_t s = 0; s < (1u << (j - 1)); ++s) {
        if (std::popcount(s) < need) continue;
        bool ok = true;
        for (int v = 0; v < j - 1 && ok; ++v) ok = h.degree(v) + static_cast<int>(s >> v & 1u) >= need;
        if (!ok) continue;
        auto es = base;
        for (int v = 0; v < j - 1; ++v)
          if (s >> v & 1u) es.emplace_back(v, j - 1);
        next.insert(canonical_code(Graph::from_edges(j, es)));
      }
    }
    level.assign(next.begin(), next.end());
  }
  if (n == 1 && min_degree > 0) return {};
  return level;
}

}  // namespace detail

/// One canonical representative per isomorphism class on n vertices with
/// minimum degree >= min_degree and vertex connectivity >= connectivity,
/// ordered by canonical code.
inline std::vector<Graph> enumerate_graphs(int n, int min_degree, int connectivity) {
  if (n > kEnumerateMaxOrder)
    throw Error(Errc::too_large, "built-in enumeration stops at n = 8; ingest a graph6 corpus for larger n");
  if (n < 3) throw Error(Errc::bad_range, "enumeration needs n >= 3");
  if (min_degree < 0 || connectivity < 0) throw Error(Errc::bad_range, "negative degree or connectivity");
  std::vector<Graph> out;
  for (std::uint64_t code : detail::grow_classes(n, min_degree)) {
    Graph g = graph_from_code(n, code);
    if (g.min_degree() < min_degree) continue;
    if (connectivity > 0 && !is_k_connected(g, connectivity)) continue;
    out.push_back(std::move(g));
  }
  return out;
}

}  // namespace lcchord
