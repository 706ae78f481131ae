#include "topocoarse/graph.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <unordered_set>
#include <utility>

namespace topocoarse {

namespace {

std::string join_violations(const std::vector<std::string>& violations) {
  std::string out = "invalid graph:";
  for (const auto& v : violations) {
    out += "\n  ";
    out += v;
  }
  return out;
}

}  // namespace

ValidationError::ValidationError(std::vector<std::string> violations)
    : std::runtime_error(join_violations(violations)), violations_(std::move(violations)) {}

std::vector<std::string> validate(const GraphParts& parts) {
  std::vector<std::string> out;
  if (parts.dim == 0) {
    out.emplace_back("dimension must be positive");
    return out;
  }
  if (parts.positions.size() % parts.dim != 0) {
    out.emplace_back("position array length is not a multiple of the dimension");
    return out;
  }
  const std::size_t n = parts.positions.size() / parts.dim;
  if (n == 0) out.emplace_back("graph has no nodes");

  for (std::size_t i = 0; i < parts.positions.size(); ++i) {
    if (!std::isfinite(parts.positions[i])) {
      out.push_back("non-finite coordinate at node " + std::to_string(i / parts.dim));
    }
  }

  if (!parts.labels.empty()) {
    if (parts.labels.size() != n) {
      out.emplace_back("label count does not match node count");
    } else {
      std::unordered_set<std::string> seen;
      for (const auto& l : parts.labels) {
        if (!seen.insert(l).second) out.push_back("duplicate node id '" + l + "'");
      }
    }
  }

  std::set<std::pair<NodeId, NodeId>> seen_edges;
  for (std::size_t i = 0; i < parts.edges.size(); ++i) {
    const auto [u, v] = parts.edges[i];
    const std::string where = " (edge " + std::to_string(i) + ": " + std::to_string(u) + "-" +
                              std::to_string(v) + ")";
    if (u >= n || v >= n) {
      out.push_back("invalid edge endpoint" + where);
      continue;
    }
    if (u == v) {
      out.push_back("self-loop" + where);
      continue;
    }
    if (!seen_edges.emplace(std::min(u, v), std::max(u, v)).second) {
      out.push_back("duplicate edge" + where);
    }
  }

  if (parts.custom_weights) {
    const auto& w = *parts.custom_weights;
    if (w.size() != parts.edges.size()) {
      out.emplace_back("custom weight count does not match edge count");
    } else {
      for (std::size_t i = 0; i < w.size(); ++i) {
        if (!std::isfinite(w[i]) || w[i] <= 0.0) {
          out.push_back("custom weight must be positive and finite (edge " + std::to_string(i) +
                        ")");
        }
      }
    }
  }
  return out;
}

SpatialGraph::SpatialGraph(GraphParts parts) {
  if (auto violations = validate(parts); !violations.empty()) {
    throw ValidationError(std::move(violations));
  }
  dim_ = parts.dim;
  positions_ = std::move(parts.positions);
  edges_ = std::move(parts.edges);
  custom_weights_ = std::move(parts.custom_weights);
  labels_ = std::move(parts.labels);

  const std::size_t n = num_nodes();
  if (labels_.empty()) {
    labels_.reserve(n);
    for (std::size_t i = 0; i < n; ++i) labels_.push_back(std::to_string(i));
  }
  for (auto& e : edges_) {
    if (e.u > e.v) std::swap(e.u, e.v);
  }

  offsets_.assign(n + 1, 0);
  for (const auto& e : edges_) {
    ++offsets_[e.u + 1];
    ++offsets_[e.v + 1];
  }
  std::partial_sum(offsets_.begin(), offsets_.end(), offsets_.begin());
  incidence_.resize(offsets_[n]);
  std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
  for (EdgeId id = 0; id < edges_.size(); ++id) {
    const auto& e = edges_[id];
    incidence_[fill[e.u]++] = {e.v, id};
    incidence_[fill[e.v]++] = {e.u, id};
  }
}

std::vector<std::uint32_t> SpatialGraph::component_labels() const {
  const std::size_t n = num_nodes();
  constexpr auto unset = static_cast<std::uint32_t>(-1);
  std::vector<std::uint32_t> comp(n, unset);
  std::vector<NodeId> stack;
  std::uint32_t next = 0;
  for (NodeId s = 0; s < n; ++s) {
    if (comp[s] != unset) continue;
    comp[s] = next;
    stack.push_back(s);
    while (!stack.empty()) {
      const NodeId v = stack.back();
      stack.pop_back();
      for (const auto& inc : incident(v)) {
        if (comp[inc.neighbor] == unset) {
          comp[inc.neighbor] = next;
          stack.push_back(inc.neighbor);
        }
      }
    }
    ++next;
  }
  return comp;
}

std::size_t SpatialGraph::num_components() const {
  const auto comp = component_labels();
  return comp.empty() ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;
}

GraphParts SpatialGraph::to_parts() const {
  return {dim_, positions_, edges_, custom_weights_, labels_};
}

double euclidean_distance(std::span<const double> a, std::span<const double> b) noexcept {
  double sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = a[i] - b[i];
    sum += d * d;
  }
  return std::sqrt(sum);
}

void check_weighting(const SpatialGraph& g, const EdgeWeighting& weighting) {
  if (weighting.mode == EdgeWeighting::Mode::Custom && !g.has_custom_weights()) {
    throw ConfigError("custom weighting requested but edge attribute '" + weighting.attribute +
                      "' is missing");
  }
}

double edge_weight(const SpatialGraph& g, const EdgeWeighting& weighting, EdgeId e) {
  if (weighting.mode == EdgeWeighting::Mode::Custom) {
    check_weighting(g, weighting);
    return (*g.custom_weights())[e];
  }
  const auto& edge = g.edge(e);
  return euclidean_distance(g.position(edge.u), g.position(edge.v));
}

std::vector<double> edge_weights(const SpatialGraph& g, const EdgeWeighting& weighting) {
  check_weighting(g, weighting);
  if (weighting.mode == EdgeWeighting::Mode::Custom) return *g.custom_weights();
  std::vector<double> w(g.num_edges());
  for (EdgeId e = 0; e < w.size(); ++e) w[e] = edge_weight(g, weighting, e);
  return w;
}

double weighted_degree(const SpatialGraph& g, const EdgeWeighting& weighting, NodeId v) {
  double sum = 0.0;
  for (const auto& inc : g.incident(v)) sum += edge_weight(g, weighting, inc.edge);
  return sum;
}

}  // namespace topocoarse
