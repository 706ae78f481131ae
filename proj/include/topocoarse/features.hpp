#pragma once

#include <array>
#include <string_view>

#include "topocoarse/graph.hpp"
#include "topocoarse/persistence.hpp"

namespace topocoarse {

/// Per-graph summary of a persistence diagram, for downstream classifiers.
struct FeatureVector {
  std::size_t n_components{0};
  double mean_pers_1{0.0};
  double max_pers_1{0.0};
  double total_pers_1{0.0};
  double mean_birth_1{0.0};
  double mean_death_1{0.0};
  double landscape_l2{0.0};
  std::size_t n_degree1_nodes{0};
};

inline constexpr std::array<std::string_view, 8> kFeatureNames = {
    "n_components", "mean_pers_1",  "max_pers_1",   "total_pers_1",
    "mean_birth_1", "mean_death_1", "landscape_l2", "n_degree1_nodes"};

/// `pd` holds both dimensions (as produced by compute_persistence). Truncated points use
/// their capped death; dimension-1 statistics are zero when there are no finite points.
FeatureVector extract_features(const SpatialGraph& g, const PersistenceDiagram& pd,
                               std::size_t landscape_depth = 5);

/// L2 norm of the first `k_max` persistence landscapes of the finite dimension-1 points,
/// integrated exactly over the piecewise-linear pieces.
double landscape_l2_norm(const PersistenceDiagram& pd, std::size_t k_max = 5);

}  // namespace topocoarse
