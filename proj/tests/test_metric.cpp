#include <doctest.h>

#include <random>

#include "support.hpp"
#include "topocoarse/metric.hpp"

using namespace topocoarse;
using testsupport::make_graph;
using testsupport::make_weighted;

TEST_CASE("path distances") {
  const auto g = make_graph({0, 0, 1, 0, 3, 0}, {{0, 1}, {1, 2}});
  const auto m = shortest_path_metric(g, EdgeWeighting::length());
  CHECK(m(0, 2) == 3.0);
  CHECK(m(2, 0) == 3.0);
  CHECK(m(1, 1) == 0.0);
  CHECK(m.max_diameter() == 3.0);
}

TEST_CASE("isolated nodes are at infinite distance") {
  const auto g = make_graph({0, 0, 1, 0}, {});
  const auto m = shortest_path_metric(g, EdgeWeighting::length());
  CHECK(m(0, 1) == kInfinity);
  CHECK(m.max_diameter() == 0.0);
}

TEST_CASE("a two-hop path beats a heavy direct edge") {
  const auto g = make_weighted(3, {{0, 1}, {1, 2}, {0, 2}}, {1.0, 1.0, 3.0});
  const auto m = shortest_path_metric(g, EdgeWeighting::custom());
  CHECK(m(0, 2) == 2.0);
}

TEST_CASE("truncated metric") {
  const auto g = make_graph({0, 0, 1, 0, 3, 0}, {{0, 1}, {1, 2}});
  const auto w = EdgeWeighting::length();
  SUBCASE("pairs beyond r_max become infinite") {
    const auto m = truncated_metric(g, w, 2.0);
    CHECK(m(0, 2) == kInfinity);
    CHECK(m(0, 1) == 1.0);
    CHECK(m(1, 2) == 2.0);
  }
  SUBCASE("r_max above the diameter changes nothing") {
    CHECK(truncated_metric(g, w, 10.0).data() == shortest_path_metric(g, w).data());
  }
  SUBCASE("unit complete graph with r_max 0.5 keeps only the diagonal") {
    const auto k = make_weighted(3, {{0, 1}, {1, 2}, {0, 2}}, {1.0, 1.0, 1.0});
    const auto m = truncated_metric(k, EdgeWeighting::custom(), 0.5);
    for (NodeId u = 0; u < 3; ++u) {
      for (NodeId v = 0; v < 3; ++v) CHECK(m(u, v) == (u == v ? 0.0 : kInfinity));
    }
  }
  SUBCASE("non-positive r_max is rejected") {
    CHECK_THROWS_AS(truncated_metric(g, w, 0.0), ConfigError);
  }
}

TEST_CASE("metric matches Floyd-Warshall and is thread-count independent") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    const auto g = testsupport::random_graph(rng, 15, 0.2);
    const auto w = edge_weights(g, EdgeWeighting::length());
    const auto expected = testsupport::floyd_warshall(g, w);
    const auto m1 = shortest_path_metric(g, EdgeWeighting::length(), 1);
    const auto m4 = shortest_path_metric(g, EdgeWeighting::length(), 4);
    CHECK(m1.data() == m4.data());
    const std::size_t n = g.num_nodes();
    for (std::size_t i = 0; i < n * n; ++i) {
      CHECK(testsupport::close_rel(m1.data()[i], expected[i], 1e-12));
    }
    for (NodeId u = 0; u < n; ++u) {
      for (NodeId v = 0; v < n; ++v) CHECK(m1(u, v) == m1(v, u));
    }
  }
}

TEST_CASE("complete graph metric is the Euclidean distance") {
  std::mt19937_64 rng(5);
  const auto g = testsupport::random_graph(rng, 10, 1.0);
  const auto m = shortest_path_metric(g, EdgeWeighting::length());
  for (NodeId u = 0; u < g.num_nodes(); ++u) {
    for (NodeId v = 0; v < g.num_nodes(); ++v) {
      CHECK(testsupport::close_rel(m(u, v), euclidean_distance(g.position(u), g.position(v)), 1e-12));
    }
  }
}
