#include <catch2/catch_amalgamated.hpp>

#include "mdim/c4.hpp"
#include "mdim/graph.hpp"
#include "mdim/resolving.hpp"
#include "mdim/sierpinski.hpp"
#include "oracles.hpp"

using namespace mdim;

namespace {

Graph c4() { return c4_base(); }
Graph star4() { return build_graph(4, {{0, 1}, {0, 2}, {0, 3}}); }

// re-check a rejection witness straight from the distance matrix
void require_valid_witness(const Graph& g, const DistanceMatrix& dm,
                           const GeneratorCertificate& cert, std::span<const int> set) {
  REQUIRE(!cert.ok);
  if (!edge_variant(cert.variant)) {
    REQUIRE(cert.vertex_pair.has_value());
    auto [x, y] = *cert.vertex_pair;
    int resolvers = 0;
    for (int u : set)
      if (dm.at(u, x) != dm.at(u, y)) ++resolvers;
    CHECK(resolvers < (fault_tolerant(cert.variant) ? 2 : 1));
  } else {
    REQUIRE(cert.edge_pair.has_value());
    auto [e, f] = *cert.edge_pair;
    int resolvers = 0;
    for (int w : set)
      if (vertex_edge_distance(g, dm, w, e) != vertex_edge_distance(g, dm, w, f)) ++resolvers;
    CHECK(resolvers < (fault_tolerant(cert.variant) ? 2 : 1));
  }
}

}  // namespace

TEST_CASE("distance vectors") {
  const Graph g = c4();
  const DistanceMatrix dm = all_pairs_distances(g);
  const std::vector<int> x01{0, 1};
  CHECK(distance_vector(dm, 2, x01) == std::vector<int>{2, 1});
  CHECK(distance_vector(dm, 0, x01) == std::vector<int>{0, 1});
  CHECK_THROWS_AS(distance_vector(dm, 0, std::vector<int>{}), std::invalid_argument);

  const SierpinskiGraph s2 = build_sierpinski(c4(), 2);
  const DistanceMatrix dm2 = all_pairs_distances(s2.graph);
  const int v22 = static_cast<int>(index_of({2, 2}, 4));
  const std::vector<int> landmarks{static_cast<int>(index_of({0, 0}, 4)),
                                   static_cast<int>(index_of({1, 1}, 4))};
  const std::vector<int> vec = distance_vector(dm2, v22, landmarks);
  CHECK(vec[0] == oracle::bfs_distance(s2.graph, v22, landmarks[0]));
  CHECK(vec[1] == oracle::bfs_distance(s2.graph, v22, landmarks[1]));
  CHECK(vec == std::vector<int>{6, 3});
}

TEST_CASE("vertex-edge distance") {
  const Graph g = c4();
  const DistanceMatrix dm = all_pairs_distances(g);
  CHECK(vertex_edge_distance(g, dm, 0, {1, 2}) == 1);
  CHECK(vertex_edge_distance(g, dm, 0, {0, 1}) == 0);
  CHECK(vertex_edge_distance(g, dm, 0, {2, 3}) == 1);
  CHECK_THROWS_AS(vertex_edge_distance(g, dm, 0, {0, 2}), std::invalid_argument);
}

TEST_CASE("metric generator verdicts on the 4-cycle") {
  const Graph g = c4();
  const DistanceMatrix dm = all_pairs_distances(g);

  CHECK(is_metric_generator(g, dm, std::vector<int>{0, 1}).ok);
  CHECK(is_metric_generator(g, dm, std::vector<int>{0, 1, 2, 3}).ok);

  const GeneratorCertificate cert = is_metric_generator(g, dm, std::vector<int>{0, 2});
  REQUIRE(!cert.ok);
  CHECK(cert.vertex_pair == std::pair<int, int>{1, 3});
  require_valid_witness(g, dm, cert, std::vector<int>{0, 2});

  CHECK_THROWS_AS(is_metric_generator(g, dm, std::vector<int>{}), std::invalid_argument);
}

TEST_CASE("fault-tolerant metric generator verdicts") {
  const Graph g = c4();
  const DistanceMatrix dm = all_pairs_distances(g);
  const std::vector<int> all{0, 1, 2, 3};

  CHECK(is_ft_metric_generator(g, dm, all).ok);
  CHECK(oracle::leave_one_out_ft(g, dm, all, false));

  const std::vector<int> two{0, 1};
  const GeneratorCertificate cert = is_ft_metric_generator(g, dm, two);
  REQUIRE(!cert.ok);
  CHECK(cert.resolvers.size() <= 1);
  require_valid_witness(g, dm, cert, two);

  CHECK_THROWS_AS(is_ft_metric_generator(g, dm, std::vector<int>{0}), std::invalid_argument);
}

TEST_CASE("edge metric generator verdicts") {
  const Graph g = c4();
  const DistanceMatrix dm = all_pairs_distances(g);

  const std::vector<int> s01{0, 1};
  CHECK(is_edge_metric_generator(g, dm, s01).ok);
  // brute force over all 6 edge pairs
  const auto es = g.sorted_edges();
  for (size_t i = 0; i < es.size(); ++i)
    for (size_t j = i + 1; j < es.size(); ++j) {
      bool resolved = false;
      for (int w : s01)
        resolved |= vertex_edge_distance(g, dm, w, es[i]) != vertex_edge_distance(g, dm, w, es[j]);
      CHECK(resolved);
    }

  const GeneratorCertificate cert = is_edge_metric_generator(g, dm, std::vector<int>{0});
  require_valid_witness(g, dm, cert, std::vector<int>{0});

  const Graph star = star4();
  const DistanceMatrix dms = all_pairs_distances(star);
  const GeneratorCertificate center = is_edge_metric_generator(star, dms, std::vector<int>{0});
  require_valid_witness(star, dms, center, std::vector<int>{0});
}

TEST_CASE("fault-tolerant edge metric generator verdicts") {
  const Graph g = c4();
  const DistanceMatrix dm = all_pairs_distances(g);
  CHECK(is_ft_edge_metric_generator(g, dm, std::vector<int>{0, 1, 2, 3}).ok);

  const std::vector<int> two{0, 1};
  const GeneratorCertificate cert = is_ft_edge_metric_generator(g, dm, two);
  require_valid_witness(g, dm, cert, two);
}

TEST_CASE("the level-2 fault-tolerant witness set of size 8 passes both FT predicates") {
  const SierpinskiGraph s2 = build_sierpinski(c4(), 2);
  const DistanceMatrix dm = all_pairs_distances(s2.graph);
  const TwinPartition tp = find_twins(s2.graph);
  const std::vector<int> f = twin_partner_set(tp, rset_indices(build_R(2)));
  REQUIRE(f.size() == 8);
  CHECK(is_ft_metric_generator(s2.graph, dm, f).ok);
  CHECK(is_ft_edge_metric_generator(s2.graph, dm, f).ok);
}

TEST_CASE("generators are monotone under supersets") {
  std::mt19937 rng(2024);
  std::uniform_int_distribution<int> extra(0, 7);
  for (int i = 0; i < 40; ++i) {
    const int n = 4 + i % 5;
    const Graph g = oracle::random_connected_graph(rng, n);
    const DistanceMatrix dm = all_pairs_distances(g);
    for (const auto& x : oracle::all_subsets(n)) {
      if (x.size() < 2 || static_cast<int>(x.size()) == n) continue;
      std::vector<int> y = x;
      int v = extra(rng) % n;
      while (std::binary_search(y.begin(), y.end(), v)) v = (v + 1) % n;
      y.insert(std::lower_bound(y.begin(), y.end(), v), v);
      for (Variant var : {Variant::mg, Variant::emg, Variant::ftmg, Variant::ftemg})
        if (check_generator(g, dm, x, var).ok) CHECK(check_generator(g, dm, y, var).ok);
    }
  }
}

TEST_CASE("pairwise-count fault tolerance matches leave-one-out") {
  std::mt19937 rng(11);
  for (int i = 0; i < 50; ++i) {
    const int n = 4 + i % 5;
    const Graph g = oracle::random_connected_graph(rng, n);
    const DistanceMatrix dm = all_pairs_distances(g);
    for (const auto& f : oracle::all_subsets(n)) {
      if (f.size() < 2) continue;
      CHECK(is_ft_metric_generator(g, dm, f).ok == oracle::leave_one_out_ft(g, dm, f, false));
      CHECK(is_ft_edge_metric_generator(g, dm, f).ok == oracle::leave_one_out_ft(g, dm, f, true));
    }
  }
}

TEST_CASE("on bipartite graphs every (FT) metric generator resolves edges too") {
  std::mt19937 rng(31);
  for (int i = 0; i < 40; ++i) {
    const int n = 4 + i % 5;
    const Graph g = oracle::random_connected_bipartite(rng, n);
    const DistanceMatrix dm = all_pairs_distances(g);
    for (const auto& x : oracle::all_subsets(n)) {
      if (x.empty()) continue;
      if (is_metric_generator(g, dm, x).ok) CHECK(is_edge_metric_generator(g, dm, x).ok);
      if (x.size() >= 2 && is_ft_metric_generator(g, dm, x).ok)
        CHECK(is_ft_edge_metric_generator(g, dm, x).ok);
    }
  }
}

TEST_CASE("the full vertex set always resolves") {
  std::mt19937 rng(17);
  for (int i = 0; i < 30; ++i) {
    const int n = 4 + i % 5;
    const Graph g = oracle::random_connected_graph(rng, n);
    const DistanceMatrix dm = all_pairs_distances(g);
    std::vector<int> all(static_cast<size_t>(n));
    std::iota(all.begin(), all.end(), 0);
    CHECK(is_metric_generator(g, dm, all).ok);
    CHECK(oracle::leave_one_out_ft(g, dm, all, false) == is_ft_metric_generator(g, dm, all).ok);
  }
}
