#pragma once

// Bonds as circuits of the cographic matroid M*(G).
//
// Graphic rank r(S) = n - #components(V, S); cographic rank
// r*(A) = |A| + r(E \ A) - r(E). An edge e outside a bond B is a chord of B
// when it is not a loop of M*(G) (a bridge of G) and r*(B + e) = r*(B).
// Concretely, e is a chord exactly when it is a bridge of the induced side
// that contains it, which is why every edge of a tree side is a chord.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <vector>

#include "lcchord/error.hpp"
#include "lcchord/graph.hpp"

namespace lcchord {

struct Bond {
  std::vector<Vertex> side_x;  // sorted
  std::vector<Edge> edges;     // sorted crossing edges

  int size() const noexcept { return static_cast<int>(edges.size()); }
};

namespace detail {

class DisjointSets {
 public:
  explicit DisjointSets(int n) : parent_(static_cast<std::size_t>(n)), sets_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int find(int x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) {
      parent_[a] = b;
      --sets_;
    }
  }
  int sets() const noexcept { return sets_; }

 private:
  std::vector<int> parent_;
  int sets_;
};

/// Graphic rank of E(G) minus `removed` (indexed like g.edges()).
inline int graphic_rank_without(const Graph& g, const std::vector<Edge>& all, const std::vector<char>& removed) {
  DisjointSets ds(g.order());
  for (std::size_t i = 0; i < all.size(); ++i)
    if (!removed[i]) ds.unite(all[i].u, all[i].v);
  return g.order() - ds.sets();
}

inline std::vector<char> edge_flags(const std::vector<Edge>& all, std::span<const Edge> subset) {
  std::vector<char> flag(all.size(), 0);
  for (Edge e : subset) {
    const Edge key(e.u, e.v);
    auto it = std::lower_bound(all.begin(), all.end(), key);
    if (it == all.end() || *it != key)
      throw Error(Errc::precondition, "edge " + to_string(key) + " is not an edge of the graph");
    flag[static_cast<std::size_t>(it - all.begin())] = 1;
  }
  return flag;
}

inline void require_connected(const Graph& g) {
  if (!is_connected(g)) throw Error(Errc::disconnected, "graph must be connected");
}

inline bool induces_connected(const Graph& g, const std::vector<char>& in_side) {
  Vertex start = -1;
  int size = 0;
  for (Vertex x = 0; x < g.order(); ++x)
    if (in_side[x]) {
      ++size;
      if (start < 0) start = x;
    }
  if (size == 0) return false;
  std::vector<char> seen(in_side.size(), 0);
  std::vector<Vertex> stack{start};
  seen[start] = 1;
  int reached = 1;
  while (!stack.empty()) {
    const Vertex x = stack.back();
    stack.pop_back();
    for (Vertex y : g.neighbors(x))
      if (in_side[y] && !seen[y]) {
        seen[y] = 1;
        ++reached;
        stack.push_back(y);
      }
  }
  return reached == size;
}

}  // namespace detail

inline int cographic_rank(const Graph& g, std::span<const Edge> subset) {
  detail::require_connected(g);
  const auto all = g.edges();
  auto in_a = detail::edge_flags(all, subset);
  const int size_a = static_cast<int>(std::count(in_a.begin(), in_a.end(), 1));
  const int rank_rest = detail::graphic_rank_without(g, all, in_a);
  return size_a + rank_rest - (g.order() - 1);
}

/// The cut between side_x and its complement, provided both sides induce
/// connected subgraphs.
inline Bond bond_from_partition(const Graph& g, std::span<const Vertex> side_x) {
  detail::require_connected(g);
  std::vector<char> in_x(static_cast<std::size_t>(g.order()), 0);
  for (Vertex v : side_x) {
    if (!g.contains(v)) throw Error(Errc::vertex_out_of_range, "vertex " + std::to_string(v) + " not in graph");
    in_x[v] = 1;
  }
  const auto nx = std::count(in_x.begin(), in_x.end(), 1);
  if (nx == 0 || nx == g.order()) throw Error(Errc::precondition, "both sides of the partition must be nonempty");
  std::vector<char> in_y(in_x.size());
  for (std::size_t i = 0; i < in_x.size(); ++i) in_y[i] = !in_x[i];
  if (!detail::induces_connected(g, in_x) || !detail::induces_connected(g, in_y))
    throw Error(Errc::not_a_bond, "edge cut is not a bond");

  Bond b;
  for (Vertex x = 0; x < g.order(); ++x)
    if (in_x[x]) b.side_x.push_back(x);
  for (const Edge& e : g.edges())
    if (in_x[e.u] != in_x[e.v]) b.edges.push_back(e);
  return b;
}

inline std::vector<Vertex> other_side(const Graph& g, const Bond& b) {
  std::vector<Vertex> y;
  for (Vertex x = 0; x < g.order(); ++x)
    if (!std::binary_search(b.side_x.begin(), b.side_x.end(), x)) y.push_back(x);
  return y;
}

/// Bridges of G are loops of M*(G) and never count as chords.
inline std::vector<Edge> chords_of_bond(const Graph& g, const Bond& b) {
  const Bond checked = bond_from_partition(g, b.side_x);
  if (checked.edges != b.edges) throw Error(Errc::not_a_bond, "edge set does not match the partition");

  const auto all = g.edges();
  const auto in_b = detail::edge_flags(all, b.edges);
  const int full_rank = g.order() - 1;
  const int base_rank = detail::graphic_rank_without(g, all, in_b);
  const int rank_b = b.size() + base_rank - full_rank;

  std::vector<Edge> chords;
  std::vector<char> flags = in_b;
  std::vector<char> only(all.size(), 0);
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (in_b[i]) continue;
    only[i] = 1;
    const bool bridge = detail::graphic_rank_without(g, all, only) < full_rank;
    only[i] = 0;
    if (bridge) continue;
    flags[i] = 1;
    const int rank_be = b.size() + 1 + detail::graphic_rank_without(g, all, flags) - full_rank;
    flags[i] = 0;
    if (rank_be == rank_b) chords.push_back(all[i]);
  }
  return chords;
}

/// m - n + 2, the largest bond size a connected graph can have.
inline int max_bond_bound(const Graph& g) { return g.size() - g.order() + 2; }

struct BondAnalysis {
  int size = 0;
  int p = 0;
  std::vector<Edge> chords;
  bool side_x_tree = false;
  bool side_y_tree = false;
  /// |B| >= p - 1 with a tree side but no chord: the tree side is a single
  /// vertex, so there is no tree edge to serve as a chord.
  bool edgeless_tree_side = false;
};

inline BondAnalysis analyze_bond(const Graph& g, const Bond& b) {
  BondAnalysis a;
  a.size = b.size();
  a.p = max_bond_bound(g);
  a.chords = chords_of_bond(g, b);
  const auto y = other_side(g, b);
  auto tree = [&](std::span<const Vertex> side) {
    const Graph h = g.induced(side);
    return h.size() == h.order() - 1;
  };
  a.side_x_tree = tree(b.side_x);
  a.side_y_tree = tree(y);
  const bool single_tree_side = (a.side_x_tree && b.side_x.size() == 1) || (a.side_y_tree && y.size() == 1);
  a.edgeless_tree_side = a.size >= a.p - 1 && single_tree_side && a.chords.empty();
  return a;
}

inline constexpr int kMaxBondSearchOrder = 24;

struct MaxBondResult {
  int size = 0;
  Bond witness;
  int p = 0;
};

/// Exhaustive over bipartitions with vertex 0 on side X; ties go to the
/// side X with the smallest bitmask.
inline MaxBondResult max_bond(const Graph& g) {
  detail::require_connected(g);
  const int n = g.order();
  if (n < 2) throw Error(Errc::precondition, "a bond needs at least two vertices");
  if (n > kMaxBondSearchOrder) throw Error(Errc::too_large, "exhaustive bond search is capped at 24 vertices");
  std::vector<std::uint32_t> adj(static_cast<std::size_t>(n), 0);
  for (const Edge& e : g.edges()) {
    adj[e.u] |= 1u << e.v;
    adj[e.v] |= 1u << e.u;
  }
  const std::uint32_t all = n == 32 ? ~0u : (1u << n) - 1;
  auto connected = [&](std::uint32_t side) {
    std::uint32_t comp = side & (~side + 1);
    std::uint32_t frontier = comp;
    while (frontier) {
      std::uint32_t nb = 0;
      for (std::uint32_t f = frontier; f; f &= f - 1) nb |= adj[std::countr_zero(f)];
      nb &= side & ~comp;
      comp |= nb;
      frontier = nb;
    }
    return comp == side;
  };
  int best = -1;
  std::uint32_t best_side = 0;
  for (std::uint32_t rest = 0; rest < (1u << (n - 1)); ++rest) {
    const std::uint32_t side = (rest << 1) | 1u;
    if (side == all) continue;
    int cut = 0;
    for (std::uint32_t s = side; s; s &= s - 1) cut += std::popcount(adj[std::countr_zero(s)] & ~side);
    if (cut <= best) continue;
    if (!connected(side) || !connected(all & ~side)) continue;
    best = cut;
    best_side = side;
  }
  std::vector<Vertex> sx;
  for (Vertex v = 0; v < n; ++v)
    if (best_side >> v & 1u) sx.push_back(v);
  MaxBondResult r;
  r.witness = bond_from_partition(g, sx);
  r.size = r.witness.size();
  r.p = max_bond_bound(g);
  if (r.size > r.p) throw std::logic_error("bond larger than m - n + 2");
  return r;
}

}  // namespace lcchord
