#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "lcchord/error.hpp"

namespace lcchord {

/// Dense 0-based vertex id. External labels are mapped at the format boundary.
using Vertex = int;

/// Unordered vertex pair, stored with u < v once normalized.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  constexpr Edge() = default;
  constexpr Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

inline std::string to_string(const Edge& e) {
  return std::to_string(e.u) + "-" + std::to_string(e.v);
}

/// Immutable simple undirected graph on vertices 0..n-1.
class Graph {
 public:
  Graph() = default;

  /// Deduplicates pairs; rejects out-of-range endpoints and self-loops.
  static Graph from_edges(int n, std::span<const Edge> edges) {
    if (n < 0) throw Error(Errc::bad_argument, "negative vertex count");
    Graph g;
    g.adj_.assign(static_cast<std::size_t>(n), {});
    for (const Edge& e : edges) {
      if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n)
        throw Error(Errc::vertex_out_of_range,
                    "edge " + to_string(e) + " outside 0.." + std::to_string(n - 1));
      if (e.u == e.v)
        throw Error(Errc::self_loop, "self-loop at vertex " + std::to_string(e.u));
      g.adj_[e.u].push_back(e.v);
      g.adj_[e.v].push_back(e.u);
    }
    std::size_t degree_sum = 0;
    for (auto& nbrs : g.adj_) {
      std::sort(nbrs.begin(), nbrs.end());
      nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
      degree_sum += nbrs.size();
    }
    g.m_ = static_cast<int>(degree_sum / 2);
    return g;
  }

  static Graph from_edges(int n, std::initializer_list<Edge> edges) {
    return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
  }

  int order() const noexcept { return static_cast<int>(adj_.size()); }
  int size() const noexcept { return m_; }

  std::span<const Vertex> neighbors(Vertex v) const { return adj_.at(v); }
  int degree(Vertex v) const { return static_cast<int>(adj_.at(v).size()); }

  bool adjacent(Vertex u, Vertex v) const {
    if (u < 0 || v < 0 || u >= order() || v >= order()) return false;
    const auto& a = adj_[u];
    return std::binary_search(a.begin(), a.end(), v);
  }

  bool contains(Vertex v) const noexcept { return v >= 0 && v < order(); }

  /// Sorted by (u, v) with u < v.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(static_cast<std::size_t>(m_));
    for (Vertex u = 0; u < order(); ++u)
      for (Vertex v : adj_[u])
        if (u < v) out.emplace_back(u, v);
    return out;
  }

  int min_degree() const {
    int d = order() == 0 ? 0 : degree(0);
    for (Vertex v = 1; v < order(); ++v) d = std::min(d, degree(v));
    return d;
  }

  int max_degree() const {
    int d = 0;
    for (Vertex v = 0; v < order(); ++v) d = std::max(d, degree(v));
    return d;
  }

  /// Subgraph induced by `keep` (sorted, distinct); vertex keep[i] becomes i.
  Graph induced(std::span<const Vertex> keep) const {
    std::vector<int> index(adj_.size(), -1);
    for (std::size_t i = 0; i < keep.size(); ++i) index.at(keep[i]) = static_cast<int>(i);
    std::vector<Edge> es;
    for (std::size_t i = 0; i < keep.size(); ++i)
      for (Vertex w : adj_[keep[i]])
        if (index[w] > static_cast<int>(i)) es.emplace_back(static_cast<int>(i), index[w]);
    return from_edges(static_cast<int>(keep.size()), es);
  }

  Graph with_edge(Edge e) const {
    auto es = edges();
    es.push_back(e);
    return from_edges(order(), es);
  }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::vector<Vertex>> adj_;
  int m_ = 0;
};

inline Graph build_graph(int n, std::span<const Edge> edges) { return Graph::from_edges(n, edges); }

/// A cycle as a cyclic vertex sequence; the stored order is its orientation.
/// Equality and ordering ignore rotation and reflection.
class Cycle {
 public:
  explicit Cycle(std::vector<Vertex> verts) : verts_(std::move(verts)) {
    if (verts_.size() < 3) throw Error(Errc::invalid_cycle, "a cycle needs at least 3 vertices");
    auto sorted = verts_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw Error(Errc::invalid_cycle, "repeated vertex in cycle");
    if (sorted.front() < 0) throw Error(Errc::invalid_cycle, "negative vertex id");
  }

  std::size_t size() const noexcept { return verts_.size(); }
  int length() const noexcept { return static_cast<int>(verts_.size()); }
  const std::vector<Vertex>& verts() const noexcept { return verts_; }

  /// Vertex at position i read modulo the length (negative i allowed).
  Vertex at(std::ptrdiff_t i) const {
    const auto len = static_cast<std::ptrdiff_t>(verts_.size());
    return verts_[static_cast<std::size_t>(((i % len) + len) % len)];
  }

  std::optional<std::size_t> position(Vertex v) const {
    auto it = std::find(verts_.begin(), verts_.end(), v);
    if (it == verts_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - verts_.begin());
  }

  bool contains(Vertex v) const { return position(v).has_value(); }

  /// True iff u and v are consecutive along the cycle.
  bool has_edge(Vertex u, Vertex v) const {
    auto p = position(u);
    if (!p) return false;
    return at(static_cast<std::ptrdiff_t>(*p) + 1) == v || at(static_cast<std::ptrdiff_t>(*p) - 1) == v;
  }

  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    for (std::size_t i = 0; i < verts_.size(); ++i)
      out.emplace_back(verts_[i], verts_[(i + 1) % verts_.size()]);
    std::sort(out.begin(), out.end());
    return out;
  }

  Cycle reversed() const {
    std::vector<Vertex> r(verts_.rbegin(), verts_.rend());
    return Cycle(std::move(r), trusted{});
  }

  /// Starts at the minimum vertex and heads toward its smaller neighbor.
  Cycle canonical() const {
    const std::size_t len = verts_.size();
    const std::size_t start =
        static_cast<std::size_t>(std::min_element(verts_.begin(), verts_.end()) - verts_.begin());
    const Vertex next = verts_[(start + 1) % len];
    const Vertex prev = verts_[(start + len - 1) % len];
    std::vector<Vertex> out(len);
    for (std::size_t i = 0; i < len; ++i)
      out[i] = next < prev ? verts_[(start + i) % len] : verts_[(start + len - i) % len];
    return Cycle(std::move(out), trusted{});
  }

  bool is_valid_in(const Graph& g) const {
    for (std::size_t i = 0; i < verts_.size(); ++i)
      if (!g.adjacent(verts_[i], verts_[(i + 1) % verts_.size()])) return false;
    return true;
  }

  void validate(const Graph& g) const {
    for (std::size_t i = 0; i < verts_.size(); ++i) {
      const Vertex a = verts_[i];
      const Vertex b = verts_[(i + 1) % verts_.size()];
      if (!g.contains(a)) throw Error(Errc::invalid_cycle, "vertex " + std::to_string(a) + " not in graph");
      if (!g.adjacent(a, b))
        throw Error(Errc::invalid_cycle, "consecutive pair " + to_string(Edge(a, b)) + " is not an edge");
    }
  }

  friend bool operator==(const Cycle& a, const Cycle& b) {
    return a.size() == b.size() && a.canonical().verts_ == b.canonical().verts_;
  }
  friend bool operator<(const Cycle& a, const Cycle& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.canonical().verts_ < b.canonical().verts_;
  }

 private:
  struct trusted {};
  Cycle(std::vector<Vertex> verts, trusted) : verts_(std::move(verts)) {}

  std::vector<Vertex> verts_;
};

inline std::string to_string(const Cycle& c) {
  std::string s;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(c.verts()[i]);
  }
  return s;
}

/// Vertex-disjoint union of paths; a one-vertex path is an isolated vertex.
class LinearForest {
 public:
  LinearForest() = default;

  explicit LinearForest(std::vector<std::vector<Vertex>> paths) : paths_(std::move(paths)) {
    std::vector<Vertex> all;
    for (const auto& p : paths_) {
      if (p.empty()) throw Error(Errc::invalid_forest, "empty path");
      all.insert(all.end(), p.begin(), p.end());
    }
    std::sort(all.begin(), all.end());
    if (std::adjacent_find(all.begin(), all.end()) != all.end())
      throw Error(Errc::invalid_forest, "paths are not vertex-disjoint");
    if (!all.empty() && all.front() < 0) throw Error(Errc::invalid_forest, "negative vertex id");
    vertices_ = std::move(all);
  }

  static LinearForest single_edge(Vertex u, Vertex v) { return LinearForest({{u, v}}); }

  static LinearForest isolated(std::span<const Vertex> vs) {
    std::vector<std::vector<Vertex>> p;
    for (Vertex v : vs) p.push_back({v});
    return LinearForest(std::move(p));
  }

  const std::vector<std::vector<Vertex>>& paths() const noexcept { return paths_; }
  const std::vector<Vertex>& vertices() const noexcept { return vertices_; }
  bool empty() const noexcept { return paths_.empty(); }

  int edge_count() const {
    int c = 0;
    for (const auto& p : paths_) c += static_cast<int>(p.size()) - 1;
    return c;
  }

  int isolated_count() const {
    return static_cast<int>(std::count_if(paths_.begin(), paths_.end(),
                                          [](const auto& p) { return p.size() == 1; }));
  }

  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    for (const auto& p : paths_)
      for (std::size_t i = 0; i + 1 < p.size(); ++i) out.emplace_back(p[i], p[i + 1]);
    std::sort(out.begin(), out.end());
    return out;
  }

  void validate(const Graph& g) const {
    for (Vertex v : vertices_)
      if (!g.contains(v))
        throw Error(Errc::invalid_forest, "vertex " + std::to_string(v) + " not in graph");
    for (const Edge& e : edges())
      if (!g.adjacent(e.u, e.v))
        throw Error(Errc::invalid_forest, "path edge " + to_string(e) + " is not an edge of the graph");
  }

  /// True iff every vertex and edge of the forest lies on `c`.
  bool contained_in(const Cycle& c) const {
    for (Vertex v : vertices_)
      if (!c.contains(v)) return false;
    for (const Edge& e : edges())
      if (!c.has_edge(e.u, e.v)) return false;
    return true;
  }

 private:
  std::vector<std::vector<Vertex>> paths_;
  std::vector<Vertex> vertices_;
};

inline std::string to_string(const LinearForest& f) {
  std::string s;
  for (std::size_t i = 0; i < f.paths().size(); ++i) {
    if (i) s += ';';
    const auto& p = f.paths()[i];
    for (std::size_t j = 0; j < p.size(); ++j) {
      if (j) s += '-';
      s += std::to_string(p[j]);
    }
  }
  return s;
}

// ---------------------------------------------------------------------------
// Connectivity

/// Component label per vertex, ignoring vertices flagged in `removed`.
/// Removed vertices get label -1. Returns the number of components.
inline int label_components(const Graph& g, std::vector<int>& label,
                            const std::vector<char>* removed = nullptr) {
  const int n = g.order();
  label.assign(static_cast<std::size_t>(n), -1);
  int count = 0;
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < n; ++s) {
    if (label[s] != -1 || (removed && (*removed)[s])) continue;
    label[s] = count;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex x = stack.back();
      stack.pop_back();
      for (Vertex y : g.neighbors(x)) {
        if (label[y] != -1 || (removed && (*removed)[y])) continue;
        label[y] = count;
        stack.push_back(y);
      }
    }
    ++count;
  }
  return count;
}

inline int component_count(const Graph& g) {
  std::vector<int> label;
  return label_components(g, label);
}

inline bool is_connected(const Graph& g) { return g.order() > 0 && component_count(g) == 1; }

/// k-connectivity by removing every vertex subset of size < k.
/// Requires n >= k+1, so K_n is (n-1)-connected but not n-connected.
inline bool is_k_connected(const Graph& g, int k) {
  const int n = g.order();
  if (k <= 0) return true;
  if (n < k + 1) return false;
  std::vector<char> removed(static_cast<std::size_t>(n), 0);
  std::vector<int> label;
  std::vector<Vertex> chosen;
  // Enumerate subsets of size 0..k-1 in lexicographic order.
  auto check = [&]() {
    int c = label_components(g, label, &removed);
    return c == 1;
  };
  if (!check()) return false;
  for (int size = 1; size < k; ++size) {
    chosen.resize(static_cast<std::size_t>(size));
    std::iota(chosen.begin(), chosen.end(), 0);
    while (true) {
      for (Vertex v : chosen) removed[v] = 1;
      const bool ok = check();
      for (Vertex v : chosen) removed[v] = 0;
      if (!ok) return false;
      int i = size - 1;
      while (i >= 0 && chosen[i] == n - size + i) --i;
      if (i < 0) break;
      ++chosen[i];
      for (int j = i + 1; j < size; ++j) chosen[j] = chosen[j - 1] + 1;
    }
  }
  return true;
}

struct StatsRecord {
  int n = 0;
  int m = 0;
  int min_degree = 0;
  int max_degree = 0;
  bool connected = false;
  bool biconnected = false;
  bool triconnected = false;
  int components = 0;

  friend bool operator==(const StatsRecord&, const StatsRecord&) = default;
};

inline StatsRecord analyze(const Graph& g) {
  if (g.order() == 0) throw Error(Errc::empty_graph, "no statistics for the graph with no vertices");
  StatsRecord s;
  s.n = g.order();
  s.m = g.size();
  s.min_degree = g.min_degree();
  s.max_degree = g.max_degree();
  s.components = component_count(g);
  s.connected = s.components == 1;
  s.biconnected = s.connected && is_k_connected(g, 2);
  s.triconnected = s.biconnected && is_k_connected(g, 3);
  return s;
}

}  // namespace lcchord
