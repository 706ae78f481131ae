#include "topocoarse/similarity.hpp"

#include <cmath>
#include <random>
#include <string>

namespace topocoarse {

Similarity Similarity::identity(std::size_t dim) {
  const auto p = static_cast<Eigen::Index>(dim);
  return {Eigen::MatrixXd::Identity(p, p), Eigen::VectorXd::Zero(p), 1.0};
}

Eigen::VectorXd transform_point(const Similarity& s, std::span<const double> x) {
  const Eigen::Map<const Eigen::VectorXd> v(x.data(), static_cast<Eigen::Index>(x.size()));
  return s.scale * (s.rotation * v) + s.translation;
}

SpatialGraph apply_similarity(const SpatialGraph& g, const Similarity& s) {
  if (s.dim() != g.dim() || static_cast<std::size_t>(s.translation.size()) != g.dim()) {
    throw ConfigError("similarity acts on R^" + std::to_string(s.dim()) + " but graph lives in R^" +
                      std::to_string(g.dim()));
  }
  if (!(s.scale > 0.0)) throw ConfigError("similarity scale must be positive");
  auto parts = g.to_parts();
  for (NodeId v = 0; v < g.num_nodes(); ++v) {
    const auto y = transform_point(s, g.position(v));
    std::copy(y.data(), y.data() + y.size(), parts.positions.begin() + v * g.dim());
  }
  return SpatialGraph(std::move(parts));
}

Similarity random_similarity(std::size_t dim, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  std::uniform_real_distribution<double> shift(-10.0, 10.0);
  std::uniform_real_distribution<double> log_scale(std::log(0.1), std::log(10.0));

  const auto p = static_cast<Eigen::Index>(dim);
  Eigen::MatrixXd gaussian(p, p);
  for (Eigen::Index c = 0; c < p; ++c) {
    for (Eigen::Index r = 0; r < p; ++r) gaussian(r, c) = normal(rng);
  }
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(gaussian);
  Eigen::MatrixXd q = qr.householderQ() * Eigen::MatrixXd::Identity(p, p);
  const Eigen::MatrixXd r = qr.matrixQR().triangularView<Eigen::Upper>();
  // sign fix makes Q Haar-distributed over O(p)
  for (Eigen::Index i = 0; i < p; ++i) {
    if (r(i, i) < 0.0) q.col(i) *= -1.0;
  }

  Similarity s;
  s.rotation = std::move(q);
  s.translation.resize(p);
  for (Eigen::Index i = 0; i < p; ++i) s.translation(i) = shift(rng);
  s.scale = std::exp(log_scale(rng));
  return s;
}

}  // namespace topocoarse
