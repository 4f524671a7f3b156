#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "lcchord/graph.hpp"

namespace lcchord {

/// DOT text with vertices and edges in sorted order. Cycle edges are drawn
/// bold red, chord edges dashed blue, everything else plain.
inline std::string export_dot(const Graph& g, const std::optional<Cycle>& highlight = std::nullopt,
                              std::span<const Edge> chords = {}) {
  std::set<Edge> cycle_edges;
  if (highlight) {
    highlight->validate(g);
    for (const Edge& e : highlight->edges()) cycle_edges.insert(e);
  }
  std::set<Edge> chord_edges;
  for (const Edge& e : chords) {
    if (!g.adjacent(e.u, e.v))
      throw Error(Errc::bad_argument, "chord " + to_string(e) + " is not an edge of the graph");
    chord_edges.insert(Edge(e.u, e.v));
  }

  std::ostringstream os;
  os << "graph G {\n";
  os << "  node [shape=circle];\n";
  for (Vertex v = 0; v < g.order(); ++v) {
    os << "  " << v;
    if (highlight && highlight->contains(v)) os << " [style=filled, fillcolor=mistyrose]";
    os << ";\n";
  }
  for (const Edge& e : g.edges()) {
    os << "  " << e.u << " -- " << e.v;
    if (cycle_edges.count(e))
      os << " [color=red, penwidth=2.5]";
    else if (chord_edges.count(e))
      os << " [color=blue, style=dashed]";
    os << ";\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace lcchord
