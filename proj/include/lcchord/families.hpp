#pragma once

// Explicit extremal constructions with a fixed vertex numbering each.
//
// figure1(k), k >= 1, n = 12k
//   0..5k-1      the cycle x_1..x_{5k} (x_j has id j-1)
//   5k..6k-1     hubs y_1..y_k, y_i adjacent to x_{5i-4}, x_{5i-2}, x_{5i}
//   6k..12k-1    three extra vertices per attachment x_{5i-3}, x_{5i-1}
//                (attachments taken in cycle order), forming a K4 with it
//
// wheel_k4(k), k >= 3, n = 5k+1
//   0            hub
//   1..2k        the subdivided rim in cyclic order; odd ids are the original
//                rim vertices (adjacent to the hub), even ids the
//                subdivision vertices
//   2k+1..5k     three extra vertices per subdivision vertex, forming a K4
//
// two_cycle_bipartite(n), n >= 3
//   0..n-1 cycle X, n..2n-1 cycle Y, every X vertex joined to every Y vertex
//
// wheel(r), r >= 3: hub 0, rim 1..r in cyclic order
//
// petersen: outer 5-cycle 0..4, inner pentagram 5..9, spokes i -- i+5

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lcchord/cycle_search.hpp"
#include "lcchord/error.hpp"
#include "lcchord/graph.hpp"

namespace lcchord {

enum class FamilyId { figure1, wheel_k4, two_cycle_bipartite, wheel, petersen };

inline std::string_view family_name(FamilyId id) {
  switch (id) {
    case FamilyId::figure1: return "figure1";
    case FamilyId::wheel_k4: return "wheel-k4";
    case FamilyId::two_cycle_bipartite: return "two-cycle-bipartite";
    case FamilyId::wheel: return "wheel";
    case FamilyId::petersen: return "petersen";
  }
  return "?";
}

inline std::optional<FamilyId> parse_family(std::string_view s) {
  for (auto id : {FamilyId::figure1, FamilyId::wheel_k4, FamilyId::two_cycle_bipartite, FamilyId::wheel,
                  FamilyId::petersen})
    if (family_name(id) == s) return id;
  return std::nullopt;
}

struct FamilyMeta {
  FamilyId id = FamilyId::petersen;
  int param = 0;
  /// The cycle the construction is built around (chordless for figure1,
  /// wheel_k4; the rim for wheel).
  std::optional<Cycle> designated_cycle;
  /// One side of the designated bond (two_cycle_bipartite).
  std::optional<std::vector<Vertex>> bond_side;
  /// Set when the engine confirmed the designated cycle is a longest cycle.
  bool verified = false;
  /// Circumference measured at generation time, when it was measured.
  std::optional<int> measured_circumference;
};

struct FamilyGraph {
  Graph graph;
  FamilyMeta meta;
};

namespace detail {

inline void add_k4_at(std::vector<Edge>& es, Vertex anchor, Vertex first_extra) {
  const Vertex q[4] = {anchor, first_extra, first_extra + 1, first_extra + 2};
  for (int a = 0; a < 4; ++a)
    for (int b = a + 1; b < 4; ++b) es.emplace_back(q[a], q[b]);
}

inline std::vector<Vertex> iota_vec(Vertex from, Vertex to) {
  std::vector<Vertex> v;
  for (Vertex x = from; x < to; ++x) v.push_back(x);
  return v;
}

inline FamilyGraph figure1(int k) {
  if (k < 1) throw Error(Errc::bad_argument, "figure1 needs k >= 1");
  const int cyc = 5 * k;
  std::vector<Edge> es;
  for (int j = 0; j < cyc; ++j) es.emplace_back(j, (j + 1) % cyc);
  int extra = 6 * k;
  for (int i = 0; i < k; ++i) {
    const Vertex hub = cyc + i;
    for (int off : {0, 2, 4}) es.emplace_back(hub, 5 * i + off);
    for (int off : {1, 3}) {
      add_k4_at(es, 5 * i + off, extra);
      extra += 3;
    }
  }
  FamilyGraph fg{Graph::from_edges(12 * k, es), {}};
  fg.meta.id = FamilyId::figure1;
  fg.meta.param = k;
  fg.meta.designated_cycle = Cycle(iota_vec(0, cyc));
  return fg;
}

inline constexpr int kWheelK4VerifyLimit = 12;

inline FamilyGraph wheel_k4(int k) {
  if (k < 3) throw Error(Errc::bad_argument, "wheel-k4 needs k >= 3");
  const int rim = 2 * k;
  std::vector<Edge> es;
  for (int j = 0; j < rim; ++j) es.emplace_back(1 + j, 1 + (j + 1) % rim);
  for (int i = 0; i < k; ++i) es.emplace_back(0, 1 + 2 * i);
  for (int i = 0; i < k; ++i) add_k4_at(es, 2 + 2 * i, rim + 1 + 3 * i);
  FamilyGraph fg{Graph::from_edges(5 * k + 1, es), {}};
  fg.meta.id = FamilyId::wheel_k4;
  fg.meta.param = k;
  const Cycle pattern(iota_vec(1, rim + 1));
  fg.meta.designated_cycle = pattern;
  if (k <= kWheelK4VerifyLimit) {
    const auto all = longest_cycles_all(fg.graph);
    if (all.complete()) {
      fg.meta.measured_circumference = all.length;
      for (const auto& c : all.cycles) {
        if (is_chordless(fg.graph, c)) {
          fg.meta.designated_cycle = c;
          fg.meta.verified = true;
          break;
        }
      }
    }
  }
  return fg;
}

inline FamilyGraph two_cycle_bipartite(int n) {
  if (n < 3) throw Error(Errc::bad_argument, "two-cycle-bipartite needs n >= 3");
  std::vector<Edge> es;
  for (int j = 0; j < n; ++j) {
    es.emplace_back(j, (j + 1) % n);
    es.emplace_back(n + j, n + (j + 1) % n);
  }
  for (int x = 0; x < n; ++x)
    for (int y = n; y < 2 * n; ++y) es.emplace_back(x, y);
  FamilyGraph fg{Graph::from_edges(2 * n, es), {}};
  fg.meta.id = FamilyId::two_cycle_bipartite;
  fg.meta.param = n;
  fg.meta.bond_side = iota_vec(0, n);
  return fg;
}

inline FamilyGraph wheel(int r) {
  if (r < 3) throw Error(Errc::bad_argument, "wheel needs a rim of at least 3 vertices");
  std::vector<Edge> es;
  for (int j = 0; j < r; ++j) {
    es.emplace_back(1 + j, 1 + (j + 1) % r);
    es.emplace_back(0, 1 + j);
  }
  FamilyGraph fg{Graph::from_edges(r + 1, es), {}};
  fg.meta.id = FamilyId::wheel;
  fg.meta.param = r;
  fg.meta.designated_cycle = Cycle(iota_vec(1, r + 1));
  return fg;
}

inline FamilyGraph petersen() {
  std::vector<Edge> es;
  for (int i = 0; i < 5; ++i) {
    es.emplace_back(i, (i + 1) % 5);
    es.emplace_back(5 + i, 5 + (i + 2) % 5);
    es.emplace_back(i, 5 + i);
  }
  FamilyGraph fg{Graph::from_edges(10, es), {}};
  fg.meta.id = FamilyId::petersen;
  return fg;
}

}  // namespace detail

inline FamilyGraph gen_family(FamilyId id, int param = 0) {
  switch (id) {
    case FamilyId::figure1: return detail::figure1(param);
    case FamilyId::wheel_k4: return detail::wheel_k4(param);
    case FamilyId::two_cycle_bipartite: return detail::two_cycle_bipartite(param);
    case FamilyId::wheel: return detail::wheel(param);
    case FamilyId::petersen: return detail::petersen();
  }
  throw Error(Errc::bad_argument, "unknown family");
}

}  // namespace lcchord
