#pragma once

#include <map>
#include <span>
#include <stdexcept>
#include <vector>

#include "mdim/graph.hpp"
#include "mdim/resolving.hpp"
#include "mdim/sierpinski.hpp"

namespace mdim {

enum class TwinKind { adjacent, non_adjacent };

struct TwinSet {
  std::vector<int> members;  // sorted, size >= 2
  TwinKind kind;
};

/// All twin vertices of a graph partitioned into maximal twin sets. In a
/// simple graph a vertex cannot be an open twin of one vertex and a closed
/// twin of another, so the open/closed groupings are disjoint; any vertex
/// matching both signatures is reported in `anomalies` instead of being
/// assigned to a set.
struct TwinPartition {
  std::vector<TwinSet> sets;      // ordered by smallest member
  std::vector<int> all;           // union T, sorted
  std::vector<int> set_index_of;  // per vertex, -1 when twin-free
  std::vector<int> anomalies;

  int set_count() const { return static_cast<int>(sets.size()); }
  int twin_count() const { return static_cast<int>(all.size()); }
};

/// Groups vertices by exact open- and closed-neighborhood signatures.
/// Adjacency lists are already sorted, so the signatures are exact keys and
/// no hash verification step is needed.
inline TwinPartition find_twins(const Graph& g) {
  std::map<std::vector<int>, std::vector<int>> open_groups, closed_groups;
  for (int v = 0; v < g.n; ++v) {
    open_groups[g.adj[static_cast<size_t>(v)]].push_back(v);
    std::vector<int> closed = g.adj[static_cast<size_t>(v)];
    closed.insert(std::lower_bound(closed.begin(), closed.end(), v), v);
    closed_groups[closed].push_back(v);
  }

  std::vector<char> in_open(static_cast<size_t>(g.n), 0), in_closed(static_cast<size_t>(g.n), 0);
  for (const auto& [sig, vs] : open_groups)
    if (vs.size() >= 2)
      for (int v : vs) in_open[static_cast<size_t>(v)] = 1;
  for (const auto& [sig, vs] : closed_groups)
    if (vs.size() >= 2)
      for (int v : vs) in_closed[static_cast<size_t>(v)] = 1;

  TwinPartition tp;
  tp.set_index_of.assign(static_cast<size_t>(g.n), -1);
  for (int v = 0; v < g.n; ++v)
    if (in_open[static_cast<size_t>(v)] && in_closed[static_cast<size_t>(v)])
      tp.anomalies.push_back(v);

  auto take = [&](const std::map<std::vector<int>, std::vector<int>>& groups, TwinKind kind) {
    for (const auto& [sig, vs] : groups) {
      if (vs.size() < 2) continue;
      TwinSet ts;
      ts.kind = kind;
      for (int v : vs)
        if (!(in_open[static_cast<size_t>(v)] && in_closed[static_cast<size_t>(v)]))
          ts.members.push_back(v);
      if (ts.members.size() < 2) continue;
      tp.sets.push_back(std::move(ts));
    }
  };
  take(open_groups, TwinKind::non_adjacent);
  take(closed_groups, TwinKind::adjacent);

  std::sort(tp.sets.begin(), tp.sets.end(),
            [](const TwinSet& a, const TwinSet& b) { return a.members[0] < b.members[0]; });
  for (size_t i = 0; i < tp.sets.size(); ++i)
    for (int v : tp.sets[i].members) {
      tp.set_index_of[static_cast<size_t>(v)] = static_cast<int>(i);
      tp.all.push_back(v);
    }
  std::sort(tp.all.begin(), tp.all.end());
  return tp;
}

/// (|T|-k, |T|, |T|-k, |T|): lower bounds for dim, dim', dim_E, dim_E'.
struct TwinBounds {
  int dim = 0;
  int ft_dim = 0;
  int edge_dim = 0;
  int ft_edge_dim = 0;
};

inline TwinBounds twin_lower_bounds(const TwinPartition& tp) {
  TwinBounds b;
  b.dim = b.edge_dim = tp.twin_count() - tp.set_count();
  b.ft_dim = b.ft_edge_dim = tp.twin_count();
  return b;
}

inline int bound_for(const TwinBounds& b, Variant v) {
  switch (v) {
    case Variant::mg: return b.dim;
    case Variant::emg: return b.edge_dim;
    case Variant::ftmg: return b.ft_dim;
    case Variant::ftemg: return b.ft_edge_dim;
  }
  return 0;
}

/// Membership constraints every generator of the given variant must satisfy:
/// from each listed set all but one member is required; mandatory vertices
/// are required outright.
struct ForcedInclusion {
  std::vector<std::vector<int>> all_but_one;
  std::vector<int> mandatory;
};

inline ForcedInclusion forced_inclusion(const TwinPartition& tp, Variant v) {
  ForcedInclusion fi;
  if (fault_tolerant(v)) {
    fi.mandatory = tp.all;
  } else {
    for (const TwinSet& ts : tp.sets) fi.all_but_one.push_back(ts.members);
  }
  return fi;
}

/// Structural twin test specific to the C4 family: a vertex is marked iff it
/// has degree 2 and lies on a 4-cycle containing another degree-2 vertex.
/// Returns true iff the marked set equals the twin set T of S_{C_4}^r and
/// every twin set has exactly two members.
inline bool check_twin_characterization_c4(int r) {
  if (r < 2) throw std::invalid_argument("twin characterization needs r >= 2");
  const Graph c4 = build_graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  const Graph g = build_sierpinski(c4, r).graph;

  std::vector<char> marked(static_cast<size_t>(g.n), 0);
  for (int u = 0; u < g.n; ++u) {
    if (g.degree(u) != 2) continue;
    const auto& nbrs = g.adj[static_cast<size_t>(u)];
    for (size_t ai = 0; ai < nbrs.size() && !marked[static_cast<size_t>(u)]; ++ai) {
      for (size_t bi = ai + 1; bi < nbrs.size() && !marked[static_cast<size_t>(u)]; ++bi) {
        int a = nbrs[ai], b = nbrs[bi];
        // common neighbors of a and b other than u close a 4-cycle u-a-w-b
        for (int w : g.adj[static_cast<size_t>(a)]) {
          if (w == u || !g.has_edge(b, w)) continue;
          if (g.degree(a) == 2 || g.degree(b) == 2 || g.degree(w) == 2) {
            marked[static_cast<size_t>(u)] = 1;
            break;
          }
        }
      }
    }
  }

  const TwinPartition tp = find_twins(g);
  for (const TwinSet& ts : tp.sets)
    if (ts.members.size() != 2) return false;
  std::vector<char> twin(static_cast<size_t>(g.n), 0);
  for (int v : tp.all) twin[static_cast<size_t>(v)] = 1;
  for (int v = 0; v < g.n; ++v)
    if (twin[static_cast<size_t>(v)] != marked[static_cast<size_t>(v)]) return false;
  return true;
}

}  // namespace mdim
