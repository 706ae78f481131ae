#pragma once

#include <cstdint>
#include <vector>

#include "topocoarse/graph.hpp"

namespace topocoarse {

enum class Positioning { Average, Degree };

/// Partition of the nodes into hypernodes. Block ids follow the order of each block's
/// smallest node id, so the numbering depends only on the partition itself.
struct NodePartition {
  std::vector<std::uint32_t> block_of;
  std::vector<std::vector<NodeId>> blocks;  // members ascending

  std::size_t size() const noexcept { return blocks.size(); }
};

struct CoarseningResult {
  SpatialGraph coarse;
  NodePartition partition;
  double theta;
  Positioning positioning;
  EdgeWeighting weighting;  // weighting used to build the partition and degrees
};

/// Edges whose weight is <= theta (inclusive, no slack).
std::vector<EdgeId> sub_graph(const SpatialGraph& g, const EdgeWeighting& weighting, double theta);

/// Connected components of (V, E_theta) via union-find.
NodePartition threshold_partition(const SpatialGraph& g, const std::vector<double>& weights,
                                  double theta);

/// Collapses every connected component of the sub-threshold subgraph into one hypernode.
/// The coarse graph carries Euclidean lengths derived from the new positions.
CoarseningResult coarsen(const SpatialGraph& g, const EdgeWeighting& weighting, double theta,
                         Positioning positioning);

enum class AggregationRule { Min, Sum };

/// Per-super-edge weight aggregated over all original edges crossing the block pair,
/// aligned with `coarse.edges()`. Requires custom weights on `g`.
std::vector<double> aggregate_custom_weights(const SpatialGraph& g, const CoarseningResult& result,
                                             AggregationRule rule = AggregationRule::Min);

/// Copy of `result.coarse` carrying aggregated custom weights.
SpatialGraph with_aggregated_weights(const SpatialGraph& g, const CoarseningResult& result,
                                     AggregationRule rule = AggregationRule::Min);

}  // namespace topocoarse
