#include "topocoarse/coarsening.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <utility>

namespace topocoarse {

namespace {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0u); }

  std::uint32_t find(std::uint32_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  // Smaller root wins so that each root is the smallest member of its set.
  void unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a < b) {
      parent_[b] = a;
    } else {
      parent_[a] = b;
    }
  }

 private:
  std::vector<std::uint32_t> parent_;
};

std::uint64_t pair_key(std::uint32_t a, std::uint32_t b) {
  if (a > b) std::swap(a, b);
  return (static_cast<std::uint64_t>(a) << 32) | b;
}

}  // namespace

std::vector<EdgeId> sub_graph(const SpatialGraph& g, const EdgeWeighting& weighting, double theta) {
  const auto w = edge_weights(g, weighting);
  std::vector<EdgeId> out;
  for (EdgeId e = 0; e < w.size(); ++e) {
    if (w[e] <= theta) out.push_back(e);
  }
  return out;
}

NodePartition threshold_partition(const SpatialGraph& g, const std::vector<double>& weights,
                                  double theta) {
  const std::size_t n = g.num_nodes();
  UnionFind uf(n);
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    if (weights[e] <= theta) uf.unite(g.edge(e).u, g.edge(e).v);
  }

  NodePartition p;
  constexpr auto unset = static_cast<std::uint32_t>(-1);
  std::vector<std::uint32_t> block_of_root(n, unset);
  p.block_of.resize(n);
  for (NodeId v = 0; v < n; ++v) {
    const auto root = uf.find(v);
    if (block_of_root[root] == unset) {
      block_of_root[root] = static_cast<std::uint32_t>(p.blocks.size());
      p.blocks.emplace_back();
    }
    p.block_of[v] = block_of_root[root];
    p.blocks[p.block_of[v]].push_back(v);
  }
  return p;
}

CoarseningResult coarsen(const SpatialGraph& g, const EdgeWeighting& weighting, double theta,
                         Positioning positioning) {
  const auto weights = edge_weights(g, weighting);
  auto partition = threshold_partition(g, weights, theta);
  const std::size_t dim = g.dim();
  const std::size_t k = partition.size();

  GraphParts parts;
  parts.dim = dim;
  parts.positions.assign(k * dim, 0.0);
  parts.labels.reserve(k);

  std::vector<double> degree;
  if (positioning == Positioning::Degree) {
    degree.assign(g.num_nodes(), 0.0);
    for (NodeId v = 0; v < g.num_nodes(); ++v) {
      for (const auto& inc : g.incident(v)) degree[v] += weights[inc.edge];
    }
  }

  for (std::size_t b = 0; b < k; ++b) {
    const auto& members = partition.blocks[b];
    double* out = parts.positions.data() + b * dim;
    if (positioning == Positioning::Average) {
      for (const NodeId v : members) {
        const auto x = g.position(v);
        for (std::size_t d = 0; d < dim; ++d) out[d] += x[d];
      }
      const auto count = static_cast<double>(members.size());
      for (std::size_t d = 0; d < dim; ++d) out[d] /= count;
    } else {
      // members are ascending, so strict > keeps the smallest id on ties
      NodeId best = members.front();
      for (const NodeId v : members) {
        if (degree[v] > degree[best]) best = v;
      }
      const auto x = g.position(best);
      std::copy(x.begin(), x.end(), out);
    }
    parts.labels.push_back(std::to_string(b));
  }

  std::vector<std::uint64_t> keys;
  keys.reserve(g.num_edges());
  for (const auto& e : g.edges()) {
    const auto bu = partition.block_of[e.u];
    const auto bv = partition.block_of[e.v];
    if (bu != bv) keys.push_back(pair_key(bu, bv));
  }
  std::sort(keys.begin(), keys.end());
  keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
  parts.edges.reserve(keys.size());
  for (const auto key : keys) {
    parts.edges.push_back({static_cast<NodeId>(key >> 32), static_cast<NodeId>(key & 0xffffffffu)});
  }

  return CoarseningResult{SpatialGraph(std::move(parts)), std::move(partition), theta, positioning,
                          weighting};
}

std::vector<double> aggregate_custom_weights(const SpatialGraph& g, const CoarseningResult& result,
                                             AggregationRule rule) {
  if (!g.has_custom_weights()) {
    throw ConfigError("aggregate_custom_weights requires custom edge weights");
  }
  const auto& w = *g.custom_weights();
  std::map<std::uint64_t, double> acc;
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const auto bu = result.partition.block_of[g.edge(e).u];
    const auto bv = result.partition.block_of[g.edge(e).v];
    if (bu == bv) continue;
    const auto [it, inserted] = acc.emplace(pair_key(bu, bv), w[e]);
    if (inserted) continue;
    it->second = rule == AggregationRule::Min ? std::min(it->second, w[e]) : it->second + w[e];
  }
  std::vector<double> out;
  out.reserve(result.coarse.num_edges());
  for (const auto& e : result.coarse.edges()) out.push_back(acc.at(pair_key(e.u, e.v)));
  return out;
}

SpatialGraph with_aggregated_weights(const SpatialGraph& g, const CoarseningResult& result,
                                     AggregationRule rule) {
  auto parts = result.coarse.to_parts();
  parts.custom_weights = aggregate_custom_weights(g, result, rule);
  return SpatialGraph(std::move(parts));
}

}  // namespace topocoarse
