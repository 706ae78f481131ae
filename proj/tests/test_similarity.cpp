#include <doctest.h>

#include <cmath>
#include <numbers>

#include "support.hpp"
#include "topocoarse/similarity.hpp"

using namespace topocoarse;
using testsupport::make_graph;

TEST_CASE("identity leaves positions unchanged") {
  const auto g = make_graph({0.25, -1.5, 3, 4}, {{0, 1}});
  CHECK(apply_similarity(g, Similarity::identity(2)).positions() == g.positions());
}

TEST_CASE("pure scaling") {
  const auto g = make_graph({0, 0, 1, 0}, {{0, 1}});
  auto s = Similarity::identity(2);
  s.scale = 2.0;
  CHECK(edge_weight(apply_similarity(g, s), EdgeWeighting::length(), 0) == 2.0);
}

TEST_CASE("quarter turn") {
  auto s = Similarity::identity(2);
  s.rotation << 0.0, -1.0, 1.0, 0.0;
  const std::vector<double> x{1.0, 0.0};
  const auto y = transform_point(s, x);
  CHECK(y(0) == 0.0);
  CHECK(y(1) == 1.0);
}

TEST_CASE("invalid similarities") {
  const auto g = make_graph({0, 0, 1, 0}, {{0, 1}});
  CHECK_THROWS_AS(apply_similarity(g, Similarity::identity(3)), ConfigError);
  auto s = Similarity::identity(2);
  s.scale = 0.0;
  CHECK_THROWS_AS(apply_similarity(g, s), ConfigError);
}

TEST_CASE("random similarities") {
  for (std::size_t dim : {2, 3}) {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
      const auto s = random_similarity(dim, seed);
      const Eigen::MatrixXd gram = s.rotation.transpose() * s.rotation;
      CHECK((gram - Eigen::MatrixXd::Identity(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim)))
                .cwiseAbs()
                .maxCoeff() < 1e-12);
      CHECK(s.scale > 0.0);
      CHECK(s.scale >= 0.1);
      CHECK(s.scale <= 10.0);
      CHECK(s.translation.cwiseAbs().maxCoeff() <= 10.0);
      const auto again = random_similarity(dim, seed);
      CHECK(again.rotation == s.rotation);
      CHECK(again.translation == s.translation);
      CHECK(again.scale == s.scale);
    }
  }
}

TEST_CASE("edge lengths scale by k") {
  const auto g = make_graph({0, 0, 1, 2, -3, 1}, {{0, 1}, {1, 2}});
  const auto s = random_similarity(2, 9);
  const auto t = apply_similarity(g, s);
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    CHECK(testsupport::close_rel(edge_weight(t, EdgeWeighting::length(), e),
                                 s.scale * edge_weight(g, EdgeWeighting::length(), e), 1e-12));
  }
}
