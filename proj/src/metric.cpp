#include "topocoarse/metric.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <queue>
#include <string>
#include <utility>

#include "topocoarse/parallel.hpp"

namespace topocoarse {

GraphMetric::GraphMetric(std::size_t n, std::vector<double> dist,
                         std::vector<std::uint32_t> component_of)
    : n_(n), dist_(std::move(dist)), component_of_(std::move(component_of)) {
  const std::size_t comps =
      component_of_.empty() ? 0 : *std::max_element(component_of_.begin(), component_of_.end()) + 1;
  diameters_.assign(comps, 0.0);
  for (std::size_t u = 0; u < n_; ++u) {
    for (std::size_t v = u + 1; v < n_; ++v) {
      const double d = dist_[u * n_ + v];
      if (std::isfinite(d)) {
        auto& diam = diameters_[component_of_[u]];
        diam = std::max(diam, d);
      }
    }
  }
}

double GraphMetric::max_diameter() const noexcept {
  return diameters_.empty() ? 0.0 : *std::max_element(diameters_.begin(), diameters_.end());
}

namespace {

GraphMetric run_dijkstra(const SpatialGraph& g, const EdgeWeighting& weighting, double r_max,
                         unsigned threads) {
  const auto weights = edge_weights(g, weighting);
  for (std::size_t e = 0; e < weights.size(); ++e) {
    if (!(weights[e] >= 0.0) || !std::isfinite(weights[e])) {
      throw ConfigError("edge " + std::to_string(e) + " has invalid weight " +
                        std::to_string(weights[e]) + "; shortest paths need finite weights >= 0");
    }
  }
  const std::size_t n = g.num_nodes();
  std::vector<double> dist(n * n, kInfinity);

  parallel_for(
      n,
      [&](std::size_t source) {
        double* row = dist.data() + source * n;
        using Item = std::pair<double, NodeId>;
        std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
        row[source] = 0.0;
        heap.emplace(0.0, static_cast<NodeId>(source));
        while (!heap.empty()) {
          const auto [d, v] = heap.top();
          heap.pop();
          if (d > row[v]) continue;
          for (const auto& inc : g.incident(v)) {
            const double nd = d + weights[inc.edge];
            if (nd > r_max) continue;
            if (nd < row[inc.neighbor]) {
              row[inc.neighbor] = nd;
              heap.emplace(nd, inc.neighbor);
            }
          }
        }
      },
      threads);

  // Dijkstra is exact per source, but the two directions can round differently; keep the
  // matrix exactly symmetric.
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      const double d = std::min(dist[u * n + v], dist[v * n + u]);
      dist[u * n + v] = d;
      dist[v * n + u] = d;
    }
  }
  return GraphMetric(n, std::move(dist), g.component_labels());
}

}  // namespace

GraphMetric shortest_path_metric(const SpatialGraph& g, const EdgeWeighting& weighting,
                                 unsigned threads) {
  return run_dijkstra(g, weighting, kInfinity, threads);
}

GraphMetric truncated_metric(const SpatialGraph& g, const EdgeWeighting& weighting, double r_max,
                             unsigned threads) {
  if (!(r_max > 0.0)) throw ConfigError("r_max must be positive");
  return run_dijkstra(g, weighting, r_max, threads);
}

}  // namespace topocoarse
