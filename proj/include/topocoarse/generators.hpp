#pragma once

#include <cstdint>

#include "topocoarse/graph.hpp"

namespace topocoarse {

struct AnnulusParams {
  std::size_t n{100};
  double inner{0.7};
  double outer{1.0};
  double edge_fraction{0.1};  // share of all n(n-1)/2 pairs kept, shortest first
  std::uint64_t seed{0};
};

/// Points uniform (by area) on a 2D annulus, joined by the floor(edge_fraction * n(n-1)/2)
/// shortest pairs. Throws ConfigError on invalid parameters.
SpatialGraph gen_annulus(const AnnulusParams& params);

/// Uniform points in [0,1]^dim with each pair joined independently with probability
/// `edge_probability`. Used by tests and the CLI for quick experiments.
SpatialGraph gen_random_geometric(std::size_t n, std::size_t dim, double edge_probability,
                                  std::uint64_t seed);

}  // namespace topocoarse
