#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "topocoarse/graph.hpp"
#include "topocoarse/metric.hpp"
#include "topocoarse/persistence.hpp"

namespace testsupport {

using namespace topocoarse;

inline SpatialGraph make_graph(std::vector<double> positions, std::vector<Edge> edges,
                               std::size_t dim = 2) {
  GraphParts parts;
  parts.dim = dim;
  parts.positions = std::move(positions);
  parts.edges = std::move(edges);
  return SpatialGraph(std::move(parts));
}

inline SpatialGraph make_weighted(std::size_t n, std::vector<Edge> edges, std::vector<double> weights) {
  GraphParts parts;
  parts.dim = 2;
  for (std::size_t i = 0; i < n; ++i) {
    parts.positions.push_back(static_cast<double>(i));
    parts.positions.push_back(0.0);
  }
  parts.edges = std::move(edges);
  parts.custom_weights = std::move(weights);
  return SpatialGraph(std::move(parts));
}

/// Random positions in [0,1]^2 and a random edge subset with inclusion probability `p`.
inline SpatialGraph random_graph(std::mt19937_64& rng, std::size_t n, double p) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  GraphParts parts;
  parts.dim = 2;
  for (std::size_t i = 0; i < 2 * n; ++i) parts.positions.push_back(unit(rng));
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v = u + 1; v < n; ++v) {
      if (unit(rng) < p) parts.edges.push_back({u, v});
    }
  }
  return SpatialGraph(std::move(parts));
}

/// Floyd-Warshall over the given edge weights.
inline std::vector<double> floyd_warshall(const SpatialGraph& g, const std::vector<double>& w) {
  const std::size_t n = g.num_nodes();
  std::vector<double> d(n * n, kInfinity);
  for (std::size_t i = 0; i < n; ++i) d[i * n + i] = 0.0;
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const auto [u, v] = g.edge(e);
    d[u * n + v] = std::min(d[u * n + v], w[e]);
    d[v * n + u] = std::min(d[v * n + u], w[e]);
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        d[i * n + j] = std::min(d[i * n + j], d[i * n + k] + d[k * n + j]);
      }
    }
  }
  return d;
}

inline bool close_rel(double a, double b, double rel) {
  if (a == b) return true;
  return std::abs(a - b) <= rel * std::max({std::abs(a), std::abs(b), 1e-300});
}

/// Midpoint-rule quadrature of sum_k lambda_k^2 over the support, evaluating
/// landscapes pointwise by sorting tent heights.
inline double landscape_quadrature(const PersistenceDiagram& pd, std::size_t k_max, std::size_t samples) {
  std::vector<std::pair<double, double>> pts;
  for (const auto& p : pd.points) {
    if (p.dim == 1 && !p.essential() && p.death > p.birth) pts.emplace_back(p.birth, p.death);
  }
  if (pts.empty()) return 0.0;
  double lo = pts.front().first;
  double hi = pts.front().second;
  for (const auto& [b, d] : pts) {
    lo = std::min(lo, b);
    hi = std::max(hi, d);
  }
  const double h = (hi - lo) / static_cast<double>(samples);
  std::vector<double> heights;
  double sum = 0.0;
  for (std::size_t s = 0; s < samples; ++s) {
    const double t = lo + (static_cast<double>(s) + 0.5) * h;
    heights.clear();
    for (const auto& [b, d] : pts) heights.push_back(std::max(0.0, std::min(t - b, d - t)));
    std::sort(heights.begin(), heights.end(), std::greater<>());
    for (std::size_t k = 0; k < std::min(k_max, heights.size()); ++k) sum += heights[k] * heights[k];
  }
  return std::sqrt(sum * h);
}

}  // namespace testsupport
