#pragma once

#include <algorithm>
#include <initializer_list>
#include <queue>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

namespace mdim {

using Edge = std::pair<int, int>;

/// Undirected simple graph on dense vertex indices 0..n-1.
///
/// Edges are stored normalized as (min,max) in first-insertion order (the
/// order used by the text exporters); adjacency lists are kept sorted.
/// Instances are immutable after construction and safe to share across
/// threads.
struct Graph {
  int n = 0;
  std::vector<Edge> edges;
  std::vector<std::vector<int>> adj;
  std::vector<std::string> labels;  // optional display names, e.g. digit words

  int degree(int v) const { return static_cast<int>(adj[v].size()); }
  int edge_count() const { return static_cast<int>(edges.size()); }

  bool has_edge(int u, int v) const {
    if (u < 0 || v < 0 || u >= n || v >= n || u == v) return false;
    const auto& a = adj[u];
    return std::binary_search(a.begin(), a.end(), v);
  }

  /// Edge list sorted lexicographically by (min endpoint, max endpoint);
  /// canonical order for edge-pair enumeration.
  std::vector<Edge> sorted_edges() const {
    std::vector<Edge> es = edges;
    std::sort(es.begin(), es.end());
    return es;
  }

  /// Display name of a vertex: its label when present, else the index.
  std::string name_of(int v) const {
    if (v >= 0 && v < static_cast<int>(labels.size()) && !labels[v].empty())
      return labels[v];
    return std::to_string(v);
  }
};

inline Graph build_graph(int n, std::span<const Edge> edge_list) {
  if (n < 1) throw std::invalid_argument("graph needs at least one vertex");
  Graph g;
  g.n = n;
  g.adj.assign(static_cast<size_t>(n), {});
  std::unordered_set<long long> seen;
  for (auto [u, v] : edge_list) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw std::out_of_range("edge endpoint out of range");
    if (u == v) throw std::invalid_argument("self-loop rejected");
    if (u > v) std::swap(u, v);
    long long key = static_cast<long long>(u) * n + v;
    if (!seen.insert(key).second) continue;
    g.edges.emplace_back(u, v);
    g.adj[static_cast<size_t>(u)].push_back(v);
    g.adj[static_cast<size_t>(v)].push_back(u);
  }
  for (auto& a : g.adj) std::sort(a.begin(), a.end());
  return g;
}

inline Graph build_graph(int n, std::initializer_list<Edge> edge_list) {
  return build_graph(n, std::span<const Edge>(edge_list.begin(), edge_list.size()));
}

/// All-pairs hop distances. Unreachable pairs carry the `unreachable`
/// marker (-1), which never enters arithmetic unchecked.
struct DistanceMatrix {
  static constexpr int unreachable = -1;

  int n = 0;
  std::vector<int> d;  // row-major n*n

  int at(int u, int v) const { return d[static_cast<size_t>(u) * n + v]; }
  bool reachable(int u, int v) const { return at(u, v) != unreachable; }
};

/// One BFS layer sweep from `source`; fills `dist` (must be sized n).
inline void bfs_fill(const Graph& g, int source, std::vector<int>& dist) {
  std::fill(dist.begin(), dist.end(), DistanceMatrix::unreachable);
  std::queue<int> q;
  dist[static_cast<size_t>(source)] = 0;
  q.push(source);
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (int w : g.adj[static_cast<size_t>(u)]) {
      if (dist[static_cast<size_t>(w)] == DistanceMatrix::unreachable) {
        dist[static_cast<size_t>(w)] = dist[static_cast<size_t>(u)] + 1;
        q.push(w);
      }
    }
  }
}

inline DistanceMatrix all_pairs_distances(const Graph& g) {
  DistanceMatrix dm;
  dm.n = g.n;
  dm.d.assign(static_cast<size_t>(g.n) * g.n, DistanceMatrix::unreachable);
  std::vector<int> row(static_cast<size_t>(g.n));
  for (int s = 0; s < g.n; ++s) {
    bfs_fill(g, s, row);
    std::copy(row.begin(), row.end(), dm.d.begin() + static_cast<size_t>(s) * g.n);
  }
  return dm;
}

inline bool is_connected(const Graph& g) {
  std::vector<int> dist(static_cast<size_t>(g.n));
  bfs_fill(g, 0, dist);
  return std::none_of(dist.begin(), dist.end(),
                      [](int x) { return x == DistanceMatrix::unreachable; });
}

struct BipartiteResult {
  bool bipartite = false;
  std::vector<int> color;      // per-vertex 0/1, valid when bipartite
  std::vector<int> odd_cycle;  // closed odd walk witness otherwise (first == last omitted)
};

/// BFS 2-coloring. On a same-color edge the odd cycle is recovered from the
/// BFS parent chains of the two endpoints.
inline BipartiteResult is_bipartite(const Graph& g) {
  BipartiteResult res;
  res.color.assign(static_cast<size_t>(g.n), -1);
  std::vector<int> parent(static_cast<size_t>(g.n), -1);
  for (int root = 0; root < g.n; ++root) {
    if (res.color[static_cast<size_t>(root)] != -1) continue;
    res.color[static_cast<size_t>(root)] = 0;
    std::queue<int> q;
    q.push(root);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int w : g.adj[static_cast<size_t>(u)]) {
        if (res.color[static_cast<size_t>(w)] == -1) {
          res.color[static_cast<size_t>(w)] = res.color[static_cast<size_t>(u)] ^ 1;
          parent[static_cast<size_t>(w)] = u;
          q.push(w);
        } else if (res.color[static_cast<size_t>(w)] == res.color[static_cast<size_t>(u)]) {
          // Walk both endpoints up to their lowest common ancestor.
          std::vector<int> up_u{u}, up_w{w};
          for (int x = u; parent[static_cast<size_t>(x)] != -1; x = parent[static_cast<size_t>(x)])
            up_u.push_back(parent[static_cast<size_t>(x)]);
          for (int x = w; parent[static_cast<size_t>(x)] != -1; x = parent[static_cast<size_t>(x)])
            up_w.push_back(parent[static_cast<size_t>(x)]);
          while (up_u.size() > 1 && up_w.size() > 1 &&
                 up_u[up_u.size() - 2] == up_w[up_w.size() - 2]) {
            up_u.pop_back();
            up_w.pop_back();
          }
          res.odd_cycle = up_u;
          res.odd_cycle.insert(res.odd_cycle.end(), up_w.rbegin() + 1, up_w.rend());
          res.bipartite = false;
          return res;
        }
      }
    }
  }
  res.bipartite = true;
  return res;
}

}  // namespace mdim
