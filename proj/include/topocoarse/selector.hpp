#pragma once

#include <optional>
#include <vector>

#include "topocoarse/bottleneck.hpp"
#include "topocoarse/coarsening.hpp"
#include "topocoarse/persistence.hpp"

namespace topocoarse {

/// Candidate thresholds: empirical quantiles of the edge weights at levels i/(m+1).
struct ThetaGrid {
  std::size_t m{0};
  std::vector<double> values;          // strictly ascending
  std::vector<double> quantile_levels;  // alpha of the first level that produced each value
};

/// The alpha-quantile is the order statistic of rank ceil(alpha * N) (lower empirical
/// quantile); repeated values are kept once. Throws ConfigError on empty input or m == 0.
ThetaGrid quantile_grid(std::vector<double> weights, std::size_t m);

/// Which metric equips the coarse graphs when scoring.
enum class CoarseMetric {
  Length,        // Euclidean lengths between hypernode positions
  AggregateMin,  // min of crossing custom weights (custom weighting only)
  AggregateSum,
};

struct SelectorOptions {
  EdgeWeighting weighting{};
  Positioning positioning{Positioning::Average};
  std::size_t grid_size{10};
  /// r_max = rmax_fraction * largest component diameter of the input graph.
  double rmax_fraction{2.0};
  DistanceMode distance{DistanceMode::MaxOverDims};
  CoarseMetric coarse_metric{CoarseMetric::Length};
  /// Adds a debug row at theta = 0 that takes no part in lambda or the argmin.
  bool include_zero_row{false};
  unsigned threads{0};
};

struct ScoreRow {
  double theta;
  double alpha;
  double edge_ratio;
  double bottleneck;
  double score;
  std::size_t num_nodes;
  std::size_t num_edges;
};

struct ScoreCurve {
  std::vector<ScoreRow> rows;  // grid order; a debug zero row comes first when requested
  std::optional<double> lambda;  // empty when every coarsening leaves the diagram unchanged
  std::size_t argmin_index{0};   // index into rows
  double theta_star{0.0};
  double alpha_star{0.0};
  double r_max{0.0};
  ThetaGrid grid;
};

/// Everything needed to compare a graph with one of its coarsenings under a shared r_max.
struct DiagramContext {
  double r_max;
  PersistenceDiagram original;
};

/// r_max from the input graph's diameter, plus the input graph's diagram.
DiagramContext original_diagram(const SpatialGraph& g, const SelectorOptions& options);

/// Diagram of a coarse graph under the shared r_max and the configured coarse metric.
PersistenceDiagram coarse_diagram(const SpatialGraph& g, const CoarseningResult& coarse,
                                  double r_max, const SelectorOptions& options,
                                  unsigned threads = 1);

ScoreCurve score_curve(const SpatialGraph& g, const SelectorOptions& options = {});

struct Selection {
  ScoreCurve curve;
  CoarseningResult coarsening;
  PersistenceDiagram original_diagram;
  PersistenceDiagram reduced_diagram;
};

/// Minimises the score over the grid (ties go to the larger theta) and returns the
/// coarsening at the optimum.
Selection select(const SpatialGraph& g, const SelectorOptions& options = {});

}  // namespace topocoarse
