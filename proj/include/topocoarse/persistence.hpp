#pragma once

#include <cstddef>
#include <vector>

#include "topocoarse/filtration.hpp"

namespace topocoarse {

struct PersistencePoint {
  int dim{0};
  double birth{0.0};
  double death{0.0};  // kInfinity for essential classes
  bool truncated{false};  // death capped at r_max because no simplex killed the class

  bool essential() const noexcept { return death == kInfinity; }
  double persistence() const noexcept { return death - birth; }

  friend bool operator==(const PersistencePoint&, const PersistencePoint&) = default;
};

/// Canonical point order: (dim, birth, death).
bool point_less(const PersistencePoint& a, const PersistencePoint& b) noexcept;

struct PersistenceDiagram {
  std::vector<PersistencePoint> points;  // canonically sorted
  std::size_t essential_count_dim0{0};

  /// Points of one dimension, in canonical order.
  std::vector<PersistencePoint> of_dim(int dim) const;
  /// Copy with every birth and death multiplied by k > 0.
  PersistenceDiagram scaled(double k) const;

  friend bool operator==(const PersistenceDiagram&, const PersistenceDiagram&) = default;
};

struct PersistenceOptions {
  /// Keep points with birth == death (normally dropped).
  bool keep_zero_persistence{false};
};

/// Diagrams in dimensions 0 and 1. Dimension 0 uses union-find with the elder rule;
/// dimension 1 reduces triangle boundaries against edges.
PersistenceDiagram compute_persistence(const FilteredComplex& fc, PersistenceOptions options = {});

/// Textbook reduction of the full boundary matrix. Quadratic memory: test use only.
PersistenceDiagram naive_persistence_oracle(const FilteredComplex& fc,
                                            PersistenceOptions options = {});

}  // namespace topocoarse
