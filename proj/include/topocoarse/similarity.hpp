#pragma once

#include <cstdint>

#include <Eigen/Dense>

#include "topocoarse/graph.hpp"

namespace topocoarse {

/// Element (R, A, k) of the similarity group acting as x -> k R x + A.
struct Similarity {
  Eigen::MatrixXd rotation;     // orthogonal, det = +-1
  Eigen::VectorXd translation;
  double scale{1.0};

  static Similarity identity(std::size_t dim);
  std::size_t dim() const noexcept { return static_cast<std::size_t>(rotation.rows()); }
};

/// Positions mapped by the similarity; edges, ids and custom weights are unchanged.
/// Throws ConfigError on a dimension mismatch or a non-positive scale.
SpatialGraph apply_similarity(const SpatialGraph& g, const Similarity& s);

/// Haar-random orthogonal matrix (reflections included), translation uniform in
/// [-10, 10]^p, scale log-uniform in [0.1, 10]. Deterministic in `seed`.
Similarity random_similarity(std::size_t dim, std::uint64_t seed);

/// Applies the similarity to a single point.
Eigen::VectorXd transform_point(const Similarity& s, std::span<const double> x);

}  // namespace topocoarse
