#include "topocoarse/filtration.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>
#include <string>

namespace topocoarse {

namespace {

constexpr double kFlatTolerance = 1e-10;

bool admissible(double d, double r_max) { return std::isfinite(d) && d <= r_max; }

}  // namespace

bool filtration_less(const FilteredSimplex& a, const FilteredSimplex& b) noexcept {
  if (a.time != b.time) return a.time < b.time;
  if (a.dim != b.dim) return a.dim < b.dim;
  return a.vertices < b.vertices;
}

double triangle_aware_time(double a, double b, double c) noexcept {
  return std::min({a + b, b + c, a + c});
}

FilteredComplex build_filtration(const GraphMetric& metric, double r_max, TriangleRule rule) {
  const std::size_t n = metric.size();
  FilteredComplex fc;
  fc.r_max = r_max;
  auto& out = fc.simplices;

  for (NodeId v = 0; v < n; ++v) out.push_back({{v, 0, 0}, 0, 0.0});

  std::vector<std::vector<NodeId>> upper(n);
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v = u + 1; v < n; ++v) {
      const double d = metric(u, v);
      if (!admissible(d, r_max)) continue;
      upper[u].push_back(v);
      out.push_back({{u, v, 0}, 1, d});
    }
  }

  for (NodeId u = 0; u < n; ++u) {
    const auto& nb = upper[u];
    for (std::size_t i = 0; i < nb.size(); ++i) {
      const NodeId v = nb[i];
      const double duv = metric(u, v);
      for (std::size_t j = i + 1; j < nb.size(); ++j) {
        const NodeId w = nb[j];
        const double dvw = metric(v, w);
        if (!admissible(dvw, r_max)) continue;
        const double duw = metric(u, w);
        const double longest = std::max({duv, dvw, duw});
        double time = longest;
        if (rule == TriangleRule::TriangleAware) {
          const double sum = triangle_aware_time(duv, dvw, duw);
          if (sum - longest > kFlatTolerance * longest) time = sum;
        }
        if (time > r_max) continue;
        out.push_back({{u, v, w}, 2, time});
      }
    }
  }

  std::sort(out.begin(), out.end(), filtration_less);
  return fc;
}

void check_filtration(const FilteredComplex& fc) {
  std::map<std::array<NodeId, 3>, std::pair<std::size_t, double>> index;
  for (std::size_t i = 0; i < fc.simplices.size(); ++i) {
    const auto& s = fc.simplices[i];
    if (i > 0 && !filtration_less(fc.simplices[i - 1], s)) {
      throw std::logic_error("filtration stream out of order at position " + std::to_string(i));
    }
    if (s.time > fc.r_max) throw std::logic_error("simplex time exceeds r_max");
    for (int k = 0; k + 1 <= s.dim; ++k) {
      if (s.vertices[k] >= s.vertices[k + 1]) throw std::logic_error("vertices not increasing");
    }
    if (s.dim > 0) {
      for (int drop = 0; drop <= s.dim; ++drop) {
        std::array<NodeId, 3> face{};
        int f = 0;
        for (int k = 0; k <= s.dim; ++k) {
          if (k != drop) face[f++] = s.vertices[k];
        }
        const auto it = index.find(face);
        if (it == index.end() || it->second.second > s.time) {
          throw std::logic_error("face missing or later than coface at position " +
                                 std::to_string(i));
        }
      }
    }
    index.emplace(s.vertices, std::pair{i, s.time});
  }
}

}  // namespace topocoarse
