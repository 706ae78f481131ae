#pragma once

#include <stdexcept>
#include <vector>

#include "topocoarse/persistence.hpp"

namespace topocoarse {

/// Raised when two diagrams cannot be compared (different numbers of essential classes).
class ComparisonError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct DiagramPoint {
  double birth;
  double death;
};

/// L-infinity distance between two diagram points.
inline double linf_cost(const DiagramPoint& a, const DiagramPoint& b) noexcept {
  const double db = a.birth > b.birth ? a.birth - b.birth : b.birth - a.birth;
  const double dd = a.death > b.death ? a.death - b.death : b.death - a.death;
  return db > dd ? db : dd;
}

/// Cost of matching a point to its nearest diagonal point.
inline double diagonal_cost(const DiagramPoint& a) noexcept { return (a.death - a.birth) / 2.0; }

/// Exact bottleneck distance between finite point sets: binary search over the sorted
/// candidate costs with a Hopcroft-Karp perfect-matching test at each step.
double bottleneck_finite(const std::vector<DiagramPoint>& a, const std::vector<DiagramPoint>& b);

/// Exhaustive minimum over all augmented bijections. Exponential: at most ~6 points a side.
double bottleneck_finite_oracle(const std::vector<DiagramPoint>& a,
                                const std::vector<DiagramPoint>& b);

/// Bottleneck distance between the `dim` parts of two diagrams. Essential points must occur
/// in equal numbers (else ComparisonError) and are then matched at zero cost; truncated
/// points count as finite at their capped death.
double bottleneck_distance(const PersistenceDiagram& a, const PersistenceDiagram& b, int dim);

/// Same contract, evaluated with bottleneck_finite_oracle.
double bottleneck_oracle(const PersistenceDiagram& a, const PersistenceDiagram& b, int dim);

enum class DistanceMode {
  MaxOverDims,  // max(d_B in dim 0, d_B in dim 1)
  Dim1Only,
};

double diagram_distance(const PersistenceDiagram& a, const PersistenceDiagram& b,
                        DistanceMode mode = DistanceMode::MaxOverDims);

}  // namespace topocoarse
