#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "mdim/graph.hpp"

namespace mdim {

/// Digit word x_r .. x_1 naming a Sierpinski vertex. The front entry is the
/// most significant digit x_r, so the word is the base-n expansion of the
/// dense vertex index.
using VertexWord = std::vector<int>;

// Construction is capped here; everything downstream assumes indices fit an int.
inline constexpr long long max_sierpinski_vertices = 1 << 20;

inline long long power_checked(int base, int exp) {
  long long value = 1;
  for (int i = 0; i < exp; ++i) {
    value *= base;
    if (value > max_sierpinski_vertices)
      throw std::invalid_argument("level too large: " + std::to_string(base) + "^" +
                                  std::to_string(exp) + " vertices exceeds cap " +
                                  std::to_string(max_sierpinski_vertices));
  }
  return value;
}

inline VertexWord word_of(long long index, int n, int r) {
  if (n < 1 || r < 1) throw std::invalid_argument("word_of: need n >= 1 and r >= 1");
  if (index < 0 || index >= power_checked(n, r))
    throw std::out_of_range("word_of: index out of range");
  VertexWord w(static_cast<size_t>(r));
  for (int i = r - 1; i >= 0; --i) {
    w[static_cast<size_t>(i)] = static_cast<int>(index % n);
    index /= n;
  }
  return w;
}

inline long long index_of(const VertexWord& w, int n) {
  if (w.empty()) throw std::invalid_argument("index_of: empty word");
  long long index = 0;
  for (int digit : w) {
    if (digit < 0 || digit >= n) throw std::out_of_range("index_of: digit out of range");
    index = index * n + digit;
  }
  return index;
}

/// Compact digit string for n <= 10 ("020"), dot-separated otherwise ("0.11.3").
inline std::string word_to_string(const VertexWord& w, int n) {
  std::string s;
  for (size_t i = 0; i < w.size(); ++i) {
    if (n > 10 && i > 0) s += '.';
    s += std::to_string(w[i]);
  }
  return s;
}

inline VertexWord word_from_string(const std::string& s, int n, int r) {
  VertexWord w;
  if (n <= 10) {
    for (char c : s) {
      if (c < '0' || c > '9') throw std::invalid_argument("bad word digit: " + s);
      w.push_back(c - '0');
    }
  } else {
    std::string tok;
    for (char c : s + ".") {
      if (c == '.') {
        if (tok.empty()) throw std::invalid_argument("bad word: " + s);
        w.push_back(std::stoi(tok));
        tok.clear();
      } else {
        tok += c;
      }
    }
  }
  if (static_cast<int>(w.size()) != r) throw std::invalid_argument("word length != level: " + s);
  for (int d : w)
    if (d < 0 || d >= n) throw std::out_of_range("word digit out of range: " + s);
  return w;
}

/// A Sierpinski graph together with the parameters needed to interpret its
/// vertex indices as digit words.
struct SierpinskiGraph {
  Graph graph;    // labels carry the words
  int base_n = 0; // vertex count of the base graph
  int level = 0;  // r
};

/// Builds S_base^r: n^r vertices named by length-r words, two words adjacent
/// iff they agree above some position t, differ at t across a base edge, and
/// mirror each other's digit-t values below t. Built by stacking n relabeled
/// copies of level r-1 and adding one linking edge per base edge, between the
/// words i j^(r-1) and j i^(r-1).
inline SierpinskiGraph build_sierpinski(const Graph& base, int r) {
  if (r < 1) throw std::invalid_argument("level must be at least 1");
  const int n = base.n;
  const long long count = power_checked(n, r);

  auto repeated = [n](int digit, int len) {
    long long value = 0;
    for (int i = 0; i < len; ++i) value = value * n + digit;
    return value;
  };

  std::vector<Edge> cur = base.edges;
  long long block = n;  // n^(k-1) while assembling level k
  for (int k = 2; k <= r; ++k) {
    std::vector<Edge> next;
    next.reserve(cur.size() * static_cast<size_t>(n) + base.edges.size());
    for (int i = 0; i < n; ++i) {
      long long off = i * block;
      for (auto [u, v] : cur)
        next.emplace_back(static_cast<int>(off + u), static_cast<int>(off + v));
    }
    for (auto [a, b] : base.edges) {
      long long u = a * block + repeated(b, k - 1);
      long long v = b * block + repeated(a, k - 1);
      next.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    cur = std::move(next);
    block *= n;
  }

  SierpinskiGraph s;
  s.graph = build_graph(static_cast<int>(count), cur);
  s.base_n = n;
  s.level = r;
  s.graph.labels.resize(static_cast<size_t>(count));
  for (long long v = 0; v < count; ++v)
    s.graph.labels[static_cast<size_t>(v)] = word_to_string(word_of(v, n, r), n);
  return s;
}

/// The induced subgraph on the words starting with base vertex i, relabeled
/// by dropping the leading digit. Local vertex k corresponds to parent vertex
/// parent_vertex[k] and to the length-(r-1) word written in block.graph.labels[k].
struct PrefixBlock {
  SierpinskiGraph block;  // level r-1
  std::vector<int> parent_vertex;
};

inline PrefixBlock prefix_block(const SierpinskiGraph& s, int i) {
  if (s.level < 2) throw std::invalid_argument("prefix_block needs level >= 2");
  if (i < 0 || i >= s.base_n) throw std::out_of_range("prefix_block: no such base vertex");
  const int n = s.base_n;
  const long long sub = power_checked(n, s.level - 1);
  const long long lo = i * sub, hi = lo + sub;

  std::vector<Edge> edges;
  for (auto [u, v] : s.graph.edges)
    if (u >= lo && u < hi && v >= lo && v < hi)
      edges.emplace_back(static_cast<int>(u - lo), static_cast<int>(v - lo));

  PrefixBlock pb;
  pb.block.graph = build_graph(static_cast<int>(sub), edges);
  pb.block.base_n = n;
  pb.block.level = s.level - 1;
  pb.block.graph.labels.resize(static_cast<size_t>(sub));
  pb.parent_vertex.resize(static_cast<size_t>(sub));
  for (long long k = 0; k < sub; ++k) {
    pb.block.graph.labels[static_cast<size_t>(k)] = word_to_string(word_of(k, n, s.level - 1), n);
    pb.parent_vertex[static_cast<size_t>(k)] = static_cast<int>(lo + k);
  }
  return pb;
}

}  // namespace mdim
