#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "mdim/graph.hpp"

namespace mdim {

enum class Variant { mg, emg, ftmg, ftemg };

constexpr bool edge_variant(Variant v) { return v == Variant::emg || v == Variant::ftemg; }
constexpr bool fault_tolerant(Variant v) { return v == Variant::ftmg || v == Variant::ftemg; }
constexpr Variant plain_counterpart(Variant v) {
  return edge_variant(v) ? Variant::emg : Variant::mg;
}

inline const char* variant_name(Variant v) {
  switch (v) {
    case Variant::mg: return "mg";
    case Variant::emg: return "emg";
    case Variant::ftmg: return "ftmg";
    case Variant::ftemg: return "ftemg";
  }
  return "?";
}

inline Variant variant_from_name(const std::string& s) {
  if (s == "mg") return Variant::mg;
  if (s == "emg") return Variant::emg;
  if (s == "ftmg") return Variant::ftmg;
  if (s == "ftemg") return Variant::ftemg;
  throw std::invalid_argument("unknown variant: " + s);
}

/// Verdict for one candidate set under one variant. On rejection the witness
/// is the first unresolved pair in lexicographic enumeration order (vertex
/// pairs by index, edge pairs by (min,max) edge order); for fault-tolerant
/// variants `resolvers` lists the at most one resolver that was found for it.
struct GeneratorCertificate {
  Variant variant{};
  bool ok = false;
  std::optional<std::pair<int, int>> vertex_pair;
  std::optional<std::pair<Edge, Edge>> edge_pair;
  std::vector<int> resolvers;
};

/// r(x|X): component i is d(x, X[i]).
inline std::vector<int> distance_vector(const DistanceMatrix& dm, int x,
                                        std::span<const int> landmarks) {
  if (landmarks.empty()) throw std::invalid_argument("distance_vector: empty landmark set");
  std::vector<int> r;
  r.reserve(landmarks.size());
  for (int u : landmarks) r.push_back(dm.at(x, u));
  return r;
}

/// d(u, vw) = min(d(u,v), d(u,w)).
inline int vertex_edge_distance(const Graph& g, const DistanceMatrix& dm, int u, Edge e) {
  if (!g.has_edge(e.first, e.second))
    throw std::invalid_argument("vertex_edge_distance: not an edge");
  return std::min(dm.at(u, e.first), dm.at(u, e.second));
}

inline GeneratorCertificate is_metric_generator(const Graph& g, const DistanceMatrix& dm,
                                                std::span<const int> xs) {
  if (xs.empty()) throw std::invalid_argument("metric generator candidate must be non-empty");
  GeneratorCertificate cert;
  cert.variant = Variant::mg;
  for (int x = 0; x < g.n; ++x) {
    for (int y = x + 1; y < g.n; ++y) {
      bool resolved = false;
      for (int u : xs) {
        if (dm.at(u, x) != dm.at(u, y)) {
          resolved = true;
          break;
        }
      }
      if (!resolved) {
        cert.ok = false;
        cert.vertex_pair = {x, y};
        return cert;
      }
    }
  }
  cert.ok = true;
  return cert;
}

/// Every vertex pair needs two distinct resolvers in F; counting stops at two.
inline GeneratorCertificate is_ft_metric_generator(const Graph& g, const DistanceMatrix& dm,
                                                   std::span<const int> fs) {
  if (fs.size() < 2)
    throw std::invalid_argument("fault-tolerant candidate needs at least two vertices");
  GeneratorCertificate cert;
  cert.variant = Variant::ftmg;
  for (int x = 0; x < g.n; ++x) {
    for (int y = x + 1; y < g.n; ++y) {
      int found = 0;
      int first = -1;
      for (int u : fs) {
        if (dm.at(u, x) != dm.at(u, y)) {
          if (found == 0) first = u;
          if (++found == 2) break;
        }
      }
      if (found < 2) {
        cert.ok = false;
        cert.vertex_pair = {x, y};
        if (found == 1) cert.resolvers.push_back(first);
        return cert;
      }
    }
  }
  cert.ok = true;
  return cert;
}

inline GeneratorCertificate is_edge_metric_generator(const Graph& g, const DistanceMatrix& dm,
                                                     std::span<const int> ss) {
  if (ss.empty()) throw std::invalid_argument("edge generator candidate must be non-empty");
  GeneratorCertificate cert;
  cert.variant = Variant::emg;
  const std::vector<Edge> es = g.sorted_edges();
  for (size_t i = 0; i < es.size(); ++i) {
    for (size_t j = i + 1; j < es.size(); ++j) {
      bool resolved = false;
      for (int w : ss) {
        int de = std::min(dm.at(w, es[i].first), dm.at(w, es[i].second));
        int df = std::min(dm.at(w, es[j].first), dm.at(w, es[j].second));
        if (de != df) {
          resolved = true;
          break;
        }
      }
      if (!resolved) {
        cert.ok = false;
        cert.edge_pair = {es[i], es[j]};
        return cert;
      }
    }
  }
  cert.ok = true;
  return cert;
}

inline GeneratorCertificate is_ft_edge_metric_generator(const Graph& g, const DistanceMatrix& dm,
                                                        std::span<const int> fs) {
  if (fs.size() < 2)
    throw std::invalid_argument("fault-tolerant candidate needs at least two vertices");
  GeneratorCertificate cert;
  cert.variant = Variant::ftemg;
  const std::vector<Edge> es = g.sorted_edges();
  for (size_t i = 0; i < es.size(); ++i) {
    for (size_t j = i + 1; j < es.size(); ++j) {
      int found = 0;
      int first = -1;
      for (int w : fs) {
        int de = std::min(dm.at(w, es[i].first), dm.at(w, es[i].second));
        int df = std::min(dm.at(w, es[j].first), dm.at(w, es[j].second));
        if (de != df) {
          if (found == 0) first = w;
          if (++found == 2) break;
        }
      }
      if (found < 2) {
        cert.ok = false;
        cert.edge_pair = {es[i], es[j]};
        if (found == 1) cert.resolvers.push_back(first);
        return cert;
      }
    }
  }
  cert.ok = true;
  return cert;
}

inline GeneratorCertificate check_generator(const Graph& g, const DistanceMatrix& dm,
                                            std::span<const int> set, Variant v) {
  switch (v) {
    case Variant::mg: return is_metric_generator(g, dm, set);
    case Variant::emg: return is_edge_metric_generator(g, dm, set);
    case Variant::ftmg: return is_ft_metric_generator(g, dm, set);
    case Variant::ftemg: return is_ft_edge_metric_generator(g, dm, set);
  }
  throw std::logic_error("unreachable");
}

}  // namespace mdim
