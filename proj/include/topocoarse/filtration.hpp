#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "topocoarse/metric.hpp"

namespace topocoarse {

struct FilteredSimplex {
  std::array<NodeId, 3> vertices{};  // first dim+1 entries used, strictly increasing
  std::uint8_t dim{0};
  double time{0.0};

  friend bool operator==(const FilteredSimplex&, const FilteredSimplex&) = default;
};

/// Canonical order: (time, dim, lexicographic vertices).
bool filtration_less(const FilteredSimplex& a, const FilteredSimplex& b) noexcept;

struct FilteredComplex {
  std::vector<FilteredSimplex> simplices;
  double r_max{kInfinity};
};

enum class TriangleRule {
  /// Triangle enters at the sum of its two shortest sides.
  TriangleAware,
  /// Plain Vietoris-Rips: triangle enters with its longest side.
  Rips,
};

/// Vertices at 0, pairs at their finite distance, triangles per `rule`; everything above
/// r_max is dropped.
///
/// The triangle-aware time is clamped below by the longest side so that rounding in the
/// path sums can never put a triangle before its faces. When the two-side sum is within
/// a relative 1e-10 of the longest side (a flat triple, i.e. one vertex lies on a
/// shortest path between the other two) it snaps to the longest side, so such triples
/// produce exactly zero persistence.
FilteredComplex build_filtration(const GraphMetric& metric, double r_max,
                                 TriangleRule rule = TriangleRule::TriangleAware);

inline FilteredComplex build_unmodified_filtration(const GraphMetric& metric, double r_max) {
  return build_filtration(metric, r_max, TriangleRule::Rips);
}

/// Sum of the two smallest sides: the triangle-aware appearance scale of a triple.
double triangle_aware_time(double a, double b, double c) noexcept;

/// Throws std::logic_error if some face is missing or appears after its coface, or the
/// stream is not in canonical order.
void check_filtration(const FilteredComplex& fc);

}  // namespace topocoarse
