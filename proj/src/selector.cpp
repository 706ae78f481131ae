#include "topocoarse/selector.hpp"

#include <algorithm>
#include <cmath>

#include "topocoarse/filtration.hpp"
#include "topocoarse/metric.hpp"
#include "topocoarse/parallel.hpp"

namespace topocoarse {

ThetaGrid quantile_grid(std::vector<double> weights, std::size_t m) {
  if (weights.empty()) throw ConfigError("quantile grid needs at least one edge weight");
  if (m == 0) throw ConfigError("grid size must be at least 1");
  std::sort(weights.begin(), weights.end());
  const std::size_t n = weights.size();

  ThetaGrid grid;
  grid.m = m;
  for (std::size_t i = 1; i <= m; ++i) {
    // rank = ceil(i * n / (m + 1)), 1-based
    std::size_t rank = (i * n + m) / (m + 1);
    rank = std::clamp<std::size_t>(rank, 1, n);
    const double value = weights[rank - 1];
    if (!grid.values.empty() && grid.values.back() == value) continue;
    grid.values.push_back(value);
    grid.quantile_levels.push_back(static_cast<double>(i) / static_cast<double>(m + 1));
  }
  return grid;
}

DiagramContext original_diagram(const SpatialGraph& g, const SelectorOptions& options) {
  if (!(options.rmax_fraction > 0.0)) throw ConfigError("r_max fraction must be positive");
  const auto metric = shortest_path_metric(g, options.weighting, options.threads);
  double r_max = options.rmax_fraction * metric.max_diameter();
  if (!(r_max > 0.0)) r_max = kInfinity;
  auto pd = compute_persistence(build_filtration(metric, r_max));
  return {r_max, std::move(pd)};
}

PersistenceDiagram coarse_diagram(const SpatialGraph& g, const CoarseningResult& coarse,
                                  double r_max, const SelectorOptions& options, unsigned threads) {
  auto metric_of = [&](const SpatialGraph& h, const EdgeWeighting& w) {
    return std::isfinite(r_max) ? truncated_metric(h, w, r_max, threads)
                                : shortest_path_metric(h, w, threads);
  };
  if (options.coarse_metric == CoarseMetric::Length) {
    return compute_persistence(
        build_filtration(metric_of(coarse.coarse, EdgeWeighting::length()), r_max));
  }
  const auto rule = options.coarse_metric == CoarseMetric::AggregateMin ? AggregationRule::Min
                                                                         : AggregationRule::Sum;
  const auto weighted = with_aggregated_weights(g, coarse, rule);
  return compute_persistence(
      build_filtration(metric_of(weighted, EdgeWeighting::custom(options.weighting.attribute)), r_max));
}

namespace {

ScoreCurve score_curve_in(const SpatialGraph& g, const SelectorOptions& options,
                          const DiagramContext& context) {
  if (g.num_edges() == 0) throw ConfigError("scoring needs a graph with at least one edge");
  if (options.coarse_metric != CoarseMetric::Length && !g.has_custom_weights()) {
    throw ConfigError("aggregated coarse weights need custom edge weights");
  }
  ScoreCurve curve;
  curve.grid = quantile_grid(edge_weights(g, options.weighting), options.grid_size);
  curve.r_max = context.r_max;

  std::vector<double> thetas;
  std::vector<double> alphas;
  if (options.include_zero_row) {
    thetas.push_back(0.0);
    alphas.push_back(0.0);
  }
  const std::size_t first_grid_row = thetas.size();
  thetas.insert(thetas.end(), curve.grid.values.begin(), curve.grid.values.end());
  alphas.insert(alphas.end(), curve.grid.quantile_levels.begin(), curve.grid.quantile_levels.end());

  curve.rows.resize(thetas.size());
  const auto total_edges = static_cast<double>(g.num_edges());
  parallel_for(
      thetas.size(),
      [&](std::size_t i) {
        const auto result = coarsen(g, options.weighting, thetas[i], options.positioning);
        const auto pd = coarse_diagram(g, result, context.r_max, options);
        auto& row = curve.rows[i];
        row.theta = thetas[i];
        row.alpha = alphas[i];
        row.edge_ratio = static_cast<double>(result.coarse.num_edges()) / total_edges;
        row.bottleneck = diagram_distance(context.original, pd, options.distance);
        row.num_nodes = result.coarse.num_nodes();
        row.num_edges = result.coarse.num_edges();
      },
      options.threads);

  double max_distance = 0.0;
  for (std::size_t i = first_grid_row; i < curve.rows.size(); ++i) {
    max_distance = std::max(max_distance, curve.rows[i].bottleneck);
  }
  if (max_distance > 0.0) curve.lambda = 1.0 / max_distance;

  for (auto& row : curve.rows) {
    row.score = curve.lambda ? row.edge_ratio + *curve.lambda * row.bottleneck : row.edge_ratio;
  }

  curve.argmin_index = first_grid_row;
  for (std::size_t i = first_grid_row; i < curve.rows.size(); ++i) {
    if (curve.rows[i].score <= curve.rows[curve.argmin_index].score) curve.argmin_index = i;
  }
  curve.theta_star = curve.rows[curve.argmin_index].theta;
  curve.alpha_star = curve.rows[curve.argmin_index].alpha;
  return curve;
}

}  // namespace

ScoreCurve score_curve(const SpatialGraph& g, const SelectorOptions& options) {
  if (g.num_edges() == 0) throw ConfigError("scoring needs a graph with at least one edge");
  return score_curve_in(g, options, original_diagram(g, options));
}

Selection select(const SpatialGraph& g, const SelectorOptions& options) {
  if (g.num_edges() == 0) throw ConfigError("scoring needs a graph with at least one edge");
  auto context = original_diagram(g, options);
  auto curve = score_curve_in(g, options, context);
  auto coarsening = coarsen(g, options.weighting, curve.theta_star, options.positioning);
  auto reduced = coarse_diagram(g, coarsening, context.r_max, options, options.threads);
  return {std::move(curve), std::move(coarsening), std::move(context.original), std::move(reduced)};
}

}  // namespace topocoarse
