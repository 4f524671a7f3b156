#pragma once

// Exact longest-cycle search.
//
// Every cycle lives inside one biconnected block, so the graph is split into
// blocks first and each block is searched on its own with 64-bit vertex masks
// (blocks larger than 64 vertices are rejected).
//
// Inside a block the search grows a simple path from an anchor vertex s and
// closes it when the path end is adjacent to s. Pruning at every node:
//   * vertices that cannot be interior to the closing path (fewer than two
//     neighbours among the free vertices plus the two path ends) are peeled;
//   * the remaining free vertices split into components; the closing path
//     runs inside exactly one component that touches both the path end and
//     s, so path length + that component's size bounds any completion;
//   * forced-forest vertices still unvisited must sit in that component.
// Without a forced forest the anchor is the minimum vertex of the cycle
// (only larger vertices may be used) and reflections are broken by
// requiring path[1] < path[last]. With a forced forest the anchor is the
// forest's minimum vertex; if the anchor has a forced neighbour the path
// starts along that edge instead.
//
// All maximum cycles are found in two passes: the maximum length first, then
// an enumeration pinned at that length.

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "lcchord/error.hpp"
#include "lcchord/graph.hpp"

namespace lcchord {

struct SearchOptions {
  /// Wall-clock budget per engine call; zero means unlimited.
  std::chrono::milliseconds time_budget{0};
  /// Search-node budget per engine call; zero means unlimited.
  std::uint64_t node_budget = 0;
};

enum class SearchStatus { complete, budget_exceeded };

struct CircumferenceResult {
  SearchStatus status = SearchStatus::complete;
  /// Maximum cycle length; 0 when no cycle exists. A lower bound only when
  /// the budget was exceeded.
  int length = 0;
  std::optional<Cycle> witness;
  std::uint64_t nodes = 0;

  bool complete() const noexcept { return status == SearchStatus::complete; }
  bool acyclic() const noexcept { return complete() && length == 0; }
};

struct LongestCyclesResult {
  SearchStatus status = SearchStatus::complete;
  int length = 0;
  /// Canonical forms, sorted, one per rotation/reflection class.
  std::vector<Cycle> cycles;
  std::uint64_t nodes = 0;

  bool complete() const noexcept { return status == SearchStatus::complete; }
};

namespace detail {

using Mask = std::uint64_t;

constexpr Mask bit(int v) { return Mask{1} << v; }

inline int lowest(Mask m) { return std::countr_zero(m); }

/// Vertex sets of the biconnected blocks (bridges give 2-vertex blocks,
/// isolated vertices none). Each set is sorted; the list is sorted.
inline std::vector<std::vector<Vertex>> biconnected_blocks(const Graph& g) {
  const int n = g.order();
  std::vector<int> disc(static_cast<std::size_t>(n), -1), low(static_cast<std::size_t>(n), 0);
  std::vector<std::size_t> next_idx(static_cast<std::size_t>(n), 0);
  std::vector<Vertex> parent(static_cast<std::size_t>(n), -1);
  std::vector<Edge> estack;
  std::vector<std::vector<Vertex>> blocks;
  int timer = 0;

  for (Vertex root = 0; root < n; ++root) {
    if (disc[root] != -1) continue;
    std::vector<Vertex> stack{root};
    disc[root] = low[root] = timer++;
    while (!stack.empty()) {
      const Vertex x = stack.back();
      auto nbrs = g.neighbors(x);
      if (next_idx[x] < nbrs.size()) {
        const Vertex y = nbrs[next_idx[x]++];
        if (disc[y] == -1) {
          parent[y] = x;
          disc[y] = low[y] = timer++;
          estack.emplace_back(x, y);
          stack.push_back(y);
        } else if (y != parent[x] && disc[y] < disc[x]) {
          low[x] = std::min(low[x], disc[y]);
          estack.emplace_back(x, y);
        }
        continue;
      }
      stack.pop_back();
      const Vertex p = parent[x];
      if (p == -1) continue;
      low[p] = std::min(low[p], low[x]);
      if (low[x] >= disc[p]) {
        std::vector<Vertex> block;
        const Edge stop(p, x);
        while (!estack.empty()) {
          const Edge e = estack.back();
          estack.pop_back();
          block.push_back(e.u);
          block.push_back(e.v);
          if (e == stop) break;
        }
        std::sort(block.begin(), block.end());
        block.erase(std::unique(block.begin(), block.end()), block.end());
        blocks.push_back(std::move(block));
      }
    }
  }
  std::sort(blocks.begin(), blocks.end());
  return blocks;
}

class Budget {
 public:
  explicit Budget(const SearchOptions& opt) : node_limit_(opt.node_budget) {
    if (opt.time_budget.count() > 0) deadline_ = std::chrono::steady_clock::now() + opt.time_budget;
  }

  /// Counts one node; true once the budget is gone.
  bool tick() {
    ++nodes_;
    if (exceeded_) return true;
    if (node_limit_ && nodes_ > node_limit_) exceeded_ = true;
    if (deadline_ && (nodes_ & 0x3ff) == 0 && std::chrono::steady_clock::now() > *deadline_)
      exceeded_ = true;
    return exceeded_;
  }

  bool exceeded() const noexcept { return exceeded_; }
  std::uint64_t nodes() const noexcept { return nodes_; }

 private:
  std::uint64_t node_limit_ = 0;
  std::optional<std::chrono::steady_clock::time_point> deadline_;
  std::uint64_t nodes_ = 0;
  bool exceeded_ = false;
};

/// Search restricted to one block, in local ids 0..b-1 (ordered like the
/// global ids they stand for).
class BlockSearch {
 public:
  BlockSearch(const Graph& g, std::span<const Vertex> block, const LinearForest& forest, Budget& budget)
      : verts_(block.begin(), block.end()), budget_(budget) {
    const int b = static_cast<int>(verts_.size());
    if (b > 64) throw Error(Errc::too_large, "block of " + std::to_string(b) + " vertices exceeds 64");
    adj_.assign(static_cast<std::size_t>(b), 0);
    forced_.assign(static_cast<std::size_t>(b), 0);
    for (int i = 0; i < b; ++i)
      for (int j = 0; j < b; ++j)
        if (i != j && g.adjacent(verts_[i], verts_[j])) adj_[i] |= bit(j);
    for (Vertex v : forest.vertices()) required_ |= bit(local(v));
    for (const Edge& e : forest.edges()) {
      forced_[local(e.u)] |= bit(local(e.v));
      forced_[local(e.v)] |= bit(local(e.u));
    }
    anchored_ = !forest.empty();
    if (anchored_) anchor_ = local(forest.vertices().front());
  }

  int block_size() const noexcept { return static_cast<int>(verts_.size()); }

  /// Longest cycle strictly longer than `floor`; returns its length and
  /// fills `witness`, or returns `floor` when none exists.
  int find_max(int floor, std::vector<Vertex>& witness) {
    mode_ = Mode::maximize;
    best_ = floor;
    best_path_ = &witness;
    run();
    return best_;
  }

  /// Appends every cycle of exactly `target` vertices (global ids, one
  /// orientation each).
  void enumerate(int target, std::vector<std::vector<Vertex>>& out) {
    mode_ = Mode::enumerate;
    target_ = target;
    found_ = &out;
    run();
  }

 private:
  enum class Mode { maximize, enumerate };

  int local(Vertex v) const {
    auto it = std::lower_bound(verts_.begin(), verts_.end(), v);
    return static_cast<int>(it - verts_.begin());
  }

  void run() {
    const int b = block_size();
    if (b < 3) return;
    if (anchored_) {
      start(anchor_, ~bit(anchor_) & full());
      return;
    }
    for (int s = 0; s < b; ++s) {
      if (mode_ == Mode::maximize && b - s <= best_) break;
      if (mode_ == Mode::enumerate && b - s < target_) break;
      const Mask allowed = full() & ~((bit(s) << 1) - 1);
      start(s, allowed);
      if (budget_.exceeded()) return;
      if (mode_ == Mode::maximize && best_ == b) return;
    }
  }

  Mask full() const { return block_size() == 64 ? ~Mask{0} : bit(block_size()) - 1; }

  void start(int s, Mask allowed) {
    s_ = s;
    allowed_ = allowed;
    first_choice_ = ~Mask{0};
    orient_fixed_ = false;
    if (forced_[s]) {
      first_choice_ = bit(lowest(forced_[s]));
      orient_fixed_ = true;
    }
    path_.assign(1, s);
    visited_ = bit(s);
    dfs();
  }

  void dfs() {
    if (budget_.tick()) return;
    const int len = static_cast<int>(path_.size());
    const int end = path_.back();
    const int prev = len >= 2 ? path_[len - 2] : -1;

    Mask need = 0;
    if (len >= 2) {
      need = forced_[end] & ~bit(prev);
      if (std::popcount(need) > 1) return;
      if (need & visited_ & ~bit(s_)) return;
    }

    if (len >= 3 && (adj_[end] & bit(s_))) close(end, prev);
    if (need == bit(s_)) return;
    if (mode_ == Mode::enumerate && len >= target_) return;
    if (mode_ == Mode::maximize && best_ == block_size()) return;

    // Peel free vertices that cannot be interior to the closing path.
    Mask avail = allowed_ & ~visited_;
    const Mask ends = bit(end) | bit(s_);
    for (bool changed = true; changed;) {
      changed = false;
      for (Mask rest = avail; rest; rest &= rest - 1) {
        const int x = lowest(rest);
        if (std::popcount(adj_[x] & (avail | ends)) < 2) {
          avail &= ~bit(x);
          changed = true;
        }
      }
    }

    const Mask req_left = required_ & ~visited_;
    Mask usable = 0;
    Mask rem = avail;
    for (Mask seeds = adj_[end] & rem; seeds; seeds = adj_[end] & rem) {
      const Mask comp = flood(bit(lowest(seeds)), rem);
      rem &= ~comp;
      if (!(comp & adj_[s_])) continue;
      if (req_left & ~comp) continue;
      const int bound = len + std::popcount(comp);
      if (mode_ == Mode::maximize ? bound <= best_ : bound < target_) continue;
      usable |= comp;
    }

    Mask next = adj_[end] & usable;
    if (need) next &= need;
    if (len == 1) next &= first_choice_;
    for (; next; next &= next - 1) {
      const int y = lowest(next);
      path_.push_back(y);
      visited_ |= bit(y);
      dfs();
      visited_ &= ~bit(y);
      path_.pop_back();
      if (budget_.exceeded()) return;
    }
  }

  Mask flood(Mask seed, Mask within) const {
    Mask comp = seed;
    Mask frontier = seed;
    while (frontier) {
      Mask nb = 0;
      for (Mask f = frontier; f; f &= f - 1) nb |= adj_[lowest(f)];
      nb &= within & ~comp;
      comp |= nb;
      frontier = nb;
    }
    return comp;
  }

  void close(int end, int prev) {
    if (required_ & ~visited_) return;
    if (forced_[end] & ~(bit(prev) | bit(s_))) return;
    if (forced_[s_] & ~(bit(path_[1]) | bit(end))) return;
    if (!orient_fixed_ && path_[1] > end) return;
    const int len = static_cast<int>(path_.size());
    if (mode_ == Mode::maximize) {
      if (len > best_) {
        best_ = len;
        best_path_->clear();
        for (int v : path_) best_path_->push_back(verts_[v]);
      }
    } else if (len == target_) {
      std::vector<Vertex> cyc;
      cyc.reserve(path_.size());
      for (int v : path_) cyc.push_back(verts_[v]);
      found_->push_back(std::move(cyc));
    }
  }

  std::vector<Vertex> verts_;
  Budget& budget_;
  std::vector<Mask> adj_;
  std::vector<Mask> forced_;
  Mask required_ = 0;
  bool anchored_ = false;
  int anchor_ = 0;

  Mode mode_ = Mode::maximize;
  int best_ = 0;
  int target_ = 0;
  std::vector<Vertex>* best_path_ = nullptr;
  std::vector<std::vector<Vertex>>* found_ = nullptr;

  int s_ = 0;
  Mask allowed_ = 0;
  Mask first_choice_ = ~Mask{0};
  bool orient_fixed_ = false;
  std::vector<int> path_;
  Mask visited_ = 0;
};

}  // namespace detail

/// Exact longest-cycle engine over one graph. Single-threaded; run one
/// engine per graph for corpus-level parallelism.
class CycleEngine {
 public:
  explicit CycleEngine(const Graph& g, SearchOptions options = {})
      : graph_(g), options_(options), blocks_(detail::biconnected_blocks(g)) {
    std::stable_sort(blocks_.begin(), blocks_.end(),
                     [](const auto& a, const auto& b) { return a.size() > b.size(); });
  }

  const Graph& graph() const noexcept { return graph_; }

  /// Longest cycle containing every vertex and edge of `forest` (plain
  /// circumference when the forest is empty).
  CircumferenceResult longest(const LinearForest& forest = {}) const {
    forest.validate(graph_);
    detail::Budget budget(options_);
    CircumferenceResult res;
    std::vector<Vertex> witness;
    for (const auto& block : blocks_) {
      if (static_cast<int>(block.size()) <= res.length) break;
      if (!holds_forest(block, forest)) continue;
      detail::BlockSearch search(graph_, block, forest, budget);
      res.length = search.find_max(res.length, witness);
      if (budget.exceeded()) break;
    }
    if (!witness.empty()) res.witness = Cycle(witness);
    res.status = budget.exceeded() ? SearchStatus::budget_exceeded : SearchStatus::complete;
    res.nodes = budget.nodes();
    return res;
  }

  /// Every cycle of exactly `length` vertices containing `forest`.
  LongestCyclesResult cycles_of_length(int length, const LinearForest& forest = {}) const {
    forest.validate(graph_);
    detail::Budget budget(options_);
    LongestCyclesResult res;
    res.length = length;
    std::vector<std::vector<Vertex>> raw;
    if (length >= 3) {
      for (const auto& block : blocks_) {
        if (static_cast<int>(block.size()) < length) break;
        if (!holds_forest(block, forest)) continue;
        detail::BlockSearch search(graph_, block, forest, budget);
        search.enumerate(length, raw);
        if (budget.exceeded()) break;
      }
    }
    res.cycles.reserve(raw.size());
    for (auto& r : raw) res.cycles.push_back(Cycle(std::move(r)).canonical());
    std::sort(res.cycles.begin(), res.cycles.end());
    res.cycles.erase(std::unique(res.cycles.begin(), res.cycles.end()), res.cycles.end());
    res.status = budget.exceeded() ? SearchStatus::budget_exceeded : SearchStatus::complete;
    res.nodes = budget.nodes();
    return res;
  }

  /// Maximum length first, then every cycle at that length.
  LongestCyclesResult longest_all(const LinearForest& forest = {}) const {
    const auto max = longest(forest);
    if (!max.complete()) {
      LongestCyclesResult res;
      res.status = SearchStatus::budget_exceeded;
      res.length = max.length;
      res.nodes = max.nodes;
      return res;
    }
    if (max.length == 0) {
      LongestCyclesResult res;
      res.nodes = max.nodes;
      return res;
    }
    auto res = cycles_of_length(max.length, forest);
    res.nodes += max.nodes;
    return res;
  }

 private:
  static bool holds_forest(const std::vector<Vertex>& block, const LinearForest& forest) {
    return std::all_of(forest.vertices().begin(), forest.vertices().end(),
                       [&](Vertex v) { return std::binary_search(block.begin(), block.end(), v); });
  }

  const Graph& graph_;
  SearchOptions options_;
  std::vector<std::vector<Vertex>> blocks_;
};

inline CircumferenceResult circumference(const Graph& g, SearchOptions options = {}) {
  return CycleEngine(g, options).longest();
}

inline LongestCyclesResult longest_cycles_all(const Graph& g, const LinearForest& forest = {},
                                              SearchOptions options = {}) {
  return CycleEngine(g, options).longest_all(forest);
}

/// Edges of `g` joining two vertices of `c` that are not consecutive on it.
inline std::vector<Edge> chords_of_cycle(const Graph& g, const Cycle& c) {
  c.validate(g);
  const auto len = static_cast<int>(c.size());
  std::vector<int> pos(static_cast<std::size_t>(g.order()), -1);
  for (int i = 0; i < len; ++i) pos[c.verts()[i]] = i;
  std::vector<Edge> out;
  for (int i = 0; i < len; ++i) {
    const Vertex x = c.verts()[i];
    for (Vertex y : g.neighbors(x)) {
      const int j = pos[y];
      if (j < 0 || y < x) continue;
      const int gap = (j - i + len) % len;
      if (gap != 1 && gap != len - 1) out.emplace_back(x, y);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline bool is_chordless(const Graph& g, const Cycle& c) { return chords_of_cycle(g, c).empty(); }

}  // namespace lcchord
