#pragma once

#include <sstream>
#include <stdexcept>
#include <string>

#include "mdim/graph.hpp"

namespace mdim {

/// Adjacency-list text: first line "n m", then one "u v" line per edge
/// (0-based, min endpoint first, stored order).
inline std::string to_adjacency_text(const Graph& g) {
  std::ostringstream out;
  out << g.n << ' ' << g.edges.size() << '\n';
  for (auto [u, v] : g.edges) out << u << ' ' << v << '\n';
  return out.str();
}

inline Graph from_adjacency_text(const std::string& text) {
  std::istringstream in(text);
  long long n = 0, m = 0;
  if (!(in >> n >> m)) throw std::invalid_argument("adjacency text: missing header");
  if (n < 1 || m < 0) throw std::invalid_argument("adjacency text: bad header");
  std::vector<Edge> edges;
  edges.reserve(static_cast<size_t>(m));
  for (long long i = 0; i < m; ++i) {
    int u, v;
    if (!(in >> u >> v))
      throw std::invalid_argument("adjacency text: expected " + std::to_string(m) +
                                  " edges, got " + std::to_string(i));
    edges.emplace_back(u, v);
  }
  return build_graph(static_cast<int>(n), edges);
}

/// Undirected DOT. Vertex labels are rendered when present.
inline std::string to_dot(const Graph& g, const std::string& name = "g") {
  std::ostringstream out;
  out << "graph " << name << " {\n";
  for (int v = 0; v < g.n; ++v) {
    out << "  " << v;
    if (v < static_cast<int>(g.labels.size()) && !g.labels[v].empty())
      out << " [label=\"" << g.labels[v] << "\"]";
    out << ";\n";
  }
  for (auto [u, v] : g.edges) out << "  " << u << " -- " << v << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace mdim
