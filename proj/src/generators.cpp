#include "topocoarse/generators.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <tuple>

namespace topocoarse {

SpatialGraph gen_annulus(const AnnulusParams& params) {
  if (params.n < 2) throw ConfigError("annulus needs n >= 2");
  if (!(params.inner > 0.0) || !(params.inner < params.outer)) {
    throw ConfigError("annulus radii must satisfy 0 < inner < outer");
  }
  if (!(params.edge_fraction > 0.0) || params.edge_fraction > 1.0) {
    throw ConfigError("edge fraction must lie in (0, 1]");
  }

  std::mt19937_64 rng(params.seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double inner2 = params.inner * params.inner;
  const double span = params.outer * params.outer - inner2;

  GraphParts parts;
  parts.dim = 2;
  parts.positions.reserve(2 * params.n);
  for (std::size_t i = 0; i < params.n; ++i) {
    const double radius = std::sqrt(unit(rng) * span + inner2);
    const double angle = 2.0 * std::numbers::pi * unit(rng);
    parts.positions.push_back(radius * std::cos(angle));
    parts.positions.push_back(radius * std::sin(angle));
  }

  std::vector<std::tuple<double, NodeId, NodeId>> pairs;
  pairs.reserve(params.n * (params.n - 1) / 2);
  for (NodeId u = 0; u < params.n; ++u) {
    for (NodeId v = u + 1; v < params.n; ++v) {
      const double d = euclidean_distance({&parts.positions[2 * u], 2}, {&parts.positions[2 * v], 2});
      pairs.emplace_back(d, u, v);
    }
  }
  const auto keep = static_cast<std::size_t>(
      std::floor(params.edge_fraction * static_cast<double>(pairs.size())));
  std::partial_sort(pairs.begin(), pairs.begin() + static_cast<long>(keep), pairs.end());
  for (std::size_t i = 0; i < keep; ++i) {
    parts.edges.push_back({std::get<1>(pairs[i]), std::get<2>(pairs[i])});
  }
  return SpatialGraph(std::move(parts));
}

SpatialGraph gen_random_geometric(std::size_t n, std::size_t dim, double edge_probability,
                                  std::uint64_t seed) {
  if (n == 0 || dim == 0) throw ConfigError("random graph needs n >= 1 and dim >= 1");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  GraphParts parts;
  parts.dim = dim;
  for (std::size_t i = 0; i < n * dim; ++i) parts.positions.push_back(unit(rng));
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v = u + 1; v < n; ++v) {
      if (unit(rng) < edge_probability) parts.edges.push_back({u, v});
    }
  }
  return SpatialGraph(std::move(parts));
}

}  // namespace topocoarse
