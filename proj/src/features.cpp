#include "topocoarse/features.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

namespace topocoarse {

namespace {

double tent(const PersistencePoint& p, double t) {
  return std::max(0.0, std::min(t - p.birth, p.death - t));
}

}  // namespace

double landscape_l2_norm(const PersistenceDiagram& pd, std::size_t k_max) {
  std::vector<PersistencePoint> pts;
  for (const auto& p : pd.points) {
    if (p.dim == 1 && !p.essential() && p.death > p.birth) pts.push_back(p);
  }
  if (pts.empty() || k_max == 0) return 0.0;

  // Every tent is linear between consecutive breakpoints, and two tents can only swap
  // order where a rising side meets a falling side.
  std::vector<double> breaks;
  for (const auto& p : pts) {
    breaks.push_back(p.birth);
    breaks.push_back(p.death);
    for (const auto& q : pts) {
      const double mid = 0.5 * (p.birth + q.death);
      if (mid > std::max(p.birth, q.birth) && mid < std::min(p.death, q.death)) {
        breaks.push_back(mid);
      }
    }
  }
  std::sort(breaks.begin(), breaks.end());
  breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());

  const std::size_t depth = std::min(k_max, pts.size());
  std::vector<double> left(pts.size());
  std::vector<double> right(pts.size());
  auto sample = [&](double t, std::vector<double>& out) {
    for (std::size_t i = 0; i < pts.size(); ++i) out[i] = tent(pts[i], t);
    std::partial_sort(out.begin(), out.begin() + static_cast<long>(depth), out.end(),
                      std::greater<>());
  };

  double integral = 0.0;
  sample(breaks.front(), left);
  for (std::size_t s = 1; s < breaks.size(); ++s) {
    sample(breaks[s], right);
    const double width = breaks[s] - breaks[s - 1];
    for (std::size_t k = 0; k < depth; ++k) {
      const double a = left[k];
      const double b = right[k];
      integral += width * (a * a + a * b + b * b) / 3.0;
    }
    left.swap(right);
  }
  return std::sqrt(integral);
}

FeatureVector extract_features(const SpatialGraph& g, const PersistenceDiagram& pd,
                               std::size_t landscape_depth) {
  FeatureVector f;
  f.n_components = static_cast<std::size_t>(std::count_if(
      pd.points.begin(), pd.points.end(), [](const PersistencePoint& p) { return p.dim == 0 && p.essential(); }));

  std::size_t count = 0;
  double birth_sum = 0.0;
  double death_sum = 0.0;
  for (const auto& p : pd.points) {
    if (p.dim != 1 || p.essential()) continue;
    const double pers = p.persistence();
    ++count;
    f.total_pers_1 += pers;
    f.max_pers_1 = std::max(f.max_pers_1, pers);
    birth_sum += p.birth;
    death_sum += p.death;
  }
  if (count > 0) {
    const auto c = static_cast<double>(count);
    f.mean_pers_1 = f.total_pers_1 / c;
    f.mean_birth_1 = birth_sum / c;
    f.mean_death_1 = death_sum / c;
  }
  f.landscape_l2 = landscape_l2_norm(pd, landscape_depth);

  for (NodeId v = 0; v < g.num_nodes(); ++v) {
    if (g.degree(v) == 1) ++f.n_degree1_nodes;
  }
  return f;
}

}  // namespace topocoarse
