#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace topocoarse {

using NodeId = std::uint32_t;
using EdgeId = std::uint32_t;

/// Raised when a weighting or parameter does not fit the graph it is applied to.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when graph data violates a structural invariant. Carries every violation found.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(std::vector<std::string> violations);
  const std::vector<std::string>& violations() const noexcept { return violations_; }

 private:
  std::vector<std::string> violations_;
};

struct Edge {
  NodeId u{0};
  NodeId v{0};

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Unvalidated graph data, as produced by loaders and generators.
struct GraphParts {
  std::size_t dim{2};
  std::vector<double> positions;  // row-major, n * dim
  std::vector<Edge> edges;
  std::optional<std::vector<double>> custom_weights;
  std::vector<std::string> labels;  // original node ids; empty means "0..n-1"
};

/// Returns every invariant violation in `parts`; empty iff the data forms a valid SpatialGraph.
std::vector<std::string> validate(const GraphParts& parts);

struct Incidence {
  NodeId neighbor;
  EdgeId edge;
};

/// Undirected graph whose nodes carry coordinates in R^dim. Immutable once built.
///
/// Edges are stored with u < v in input order. An incidence list (CSR) gives O(deg)
/// access to the edges around each node.
class SpatialGraph {
 public:
  /// Validates `parts` and throws ValidationError listing all violations on failure.
  explicit SpatialGraph(GraphParts parts);

  std::size_t dim() const noexcept { return dim_; }
  std::size_t num_nodes() const noexcept { return positions_.size() / dim_; }
  std::size_t num_edges() const noexcept { return edges_.size(); }

  std::span<const double> position(NodeId v) const noexcept {
    return {positions_.data() + static_cast<std::size_t>(v) * dim_, dim_};
  }
  const std::vector<double>& positions() const noexcept { return positions_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const Edge& edge(EdgeId e) const noexcept { return edges_[e]; }

  bool has_custom_weights() const noexcept { return custom_weights_.has_value(); }
  const std::optional<std::vector<double>>& custom_weights() const noexcept { return custom_weights_; }

  std::span<const Incidence> incident(NodeId v) const noexcept {
    return {incidence_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
  }
  std::size_t degree(NodeId v) const noexcept { return offsets_[v + 1] - offsets_[v]; }

  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::string& label(NodeId v) const noexcept { return labels_[v]; }

  /// Connected-component id per node (ids assigned in order of smallest member).
  std::vector<std::uint32_t> component_labels() const;
  std::size_t num_components() const;

  GraphParts to_parts() const;

 private:
  std::size_t dim_;
  std::vector<double> positions_;
  std::vector<Edge> edges_;
  std::optional<std::vector<double>> custom_weights_;
  std::vector<std::string> labels_;
  std::vector<std::size_t> offsets_;
  std::vector<Incidence> incidence_;
};

/// How edges are weighted: Euclidean length of the endpoints, or a stored per-edge attribute.
struct EdgeWeighting {
  enum class Mode { Length, Custom };

  Mode mode{Mode::Length};
  std::string attribute{"weight"};

  static EdgeWeighting length() { return {}; }
  static EdgeWeighting custom(std::string attribute = "weight") {
    return {Mode::Custom, std::move(attribute)};
  }
};

double euclidean_distance(std::span<const double> a, std::span<const double> b) noexcept;

/// Throws ConfigError when `weighting` cannot be applied to `g`.
void check_weighting(const SpatialGraph& g, const EdgeWeighting& weighting);

double edge_weight(const SpatialGraph& g, const EdgeWeighting& weighting, EdgeId e);

/// All edge weights, indexed by EdgeId.
std::vector<double> edge_weights(const SpatialGraph& g, const EdgeWeighting& weighting);

double weighted_degree(const SpatialGraph& g, const EdgeWeighting& weighting, NodeId v);

}  // namespace topocoarse
