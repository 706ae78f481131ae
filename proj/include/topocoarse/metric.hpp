#pragma once

#include <cstdint>
#include <limits>
#include <vector>

#include "topocoarse/graph.hpp"

namespace topocoarse {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

/// Dense all-pairs shortest-path distances. Cross-component pairs (and, for truncated
/// metrics, pairs beyond r_max) hold kInfinity.
class GraphMetric {
 public:
  GraphMetric(std::size_t n, std::vector<double> dist, std::vector<std::uint32_t> component_of);

  std::size_t size() const noexcept { return n_; }
  double operator()(NodeId u, NodeId v) const noexcept { return dist_[u * n_ + v]; }
  const std::vector<double>& data() const noexcept { return dist_; }

  const std::vector<std::uint32_t>& component_of() const noexcept { return component_of_; }
  /// Largest finite distance within each component.
  const std::vector<double>& component_diameters() const noexcept { return diameters_; }
  double max_diameter() const noexcept;

 private:
  std::size_t n_;
  std::vector<double> dist_;
  std::vector<std::uint32_t> component_of_;
  std::vector<double> diameters_;
};

/// Dijkstra from every source. Throws ConfigError on a negative or non-finite weight.
GraphMetric shortest_path_metric(const SpatialGraph& g, const EdgeWeighting& weighting,
                                 unsigned threads = 0);

/// As shortest_path_metric, but searches stop beyond r_max and such entries become kInfinity.
GraphMetric truncated_metric(const SpatialGraph& g, const EdgeWeighting& weighting, double r_max,
                             unsigned threads = 0);

}  // namespace topocoarse
