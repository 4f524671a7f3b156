#pragma once

// Corpus and single-graph file readers.
//
// .g6     one graph6 line per graph; blank lines are skipped.
// .edges  '#' starts a comment; the first data line holds the vertex count n,
//         every following data line holds one edge "u v" (0-based ids).

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "lcchord/error.hpp"
#include "lcchord/graph.hpp"
#include "lcchord/graph6.hpp"

namespace lcchord {

inline std::vector<Graph> read_graph6_stream(std::istream& in) {
  std::vector<Graph> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    if (line.empty()) continue;
    try {
      out.push_back(parse_graph6(line));
    } catch (const Error& e) {
      throw Error(e.code(), "line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return out;
}

inline Graph parse_edge_list(std::istream& in) {
  std::string line;
  int n = -1;
  std::vector<Edge> edges;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    long long a = 0;
    if (!(ls >> a)) continue;
    if (n < 0) {
      if (a < 0) throw Error(Errc::bad_edge_list, "negative vertex count");
      n = static_cast<int>(a);
      continue;
    }
    long long b = 0;
    if (!(ls >> b))
      throw Error(Errc::bad_edge_list, "line " + std::to_string(lineno) + ": expected two endpoints");
    edges.emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(b));
  }
  if (n < 0) throw Error(Errc::bad_edge_list, "missing vertex count");
  return Graph::from_edges(n, edges);
}

inline bool has_suffix(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

/// Reads every graph in `path`: an .edges file holds one graph, anything else
/// is treated as a graph6 corpus.
inline std::vector<Graph> read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::bad_argument, "cannot open " + path);
  if (has_suffix(path, ".edges")) return {parse_edge_list(in)};
  return read_graph6_stream(in);
}

inline void write_graph6_file(const std::string& path, const std::vector<Graph>& graphs) {
  std::ofstream out(path);
  if (!out) throw Error(Errc::bad_argument, "cannot write " + path);
  for (const auto& g : graphs) out << emit_graph6(g) << '\n';
}

}  // namespace lcchord
