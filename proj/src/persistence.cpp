#include "topocoarse/persistence.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>

namespace topocoarse {

bool point_less(const PersistencePoint& a, const PersistencePoint& b) noexcept {
  if (a.dim != b.dim) return a.dim < b.dim;
  if (a.birth != b.birth) return a.birth < b.birth;
  if (a.death != b.death) return a.death < b.death;
  return a.truncated < b.truncated;
}

std::vector<PersistencePoint> PersistenceDiagram::of_dim(int dim) const {
  std::vector<PersistencePoint> out;
  for (const auto& p : points) {
    if (p.dim == dim) out.push_back(p);
  }
  return out;
}

PersistenceDiagram PersistenceDiagram::scaled(double k) const {
  PersistenceDiagram out = *this;
  for (auto& p : out.points) {
    p.birth *= k;
    p.death *= k;
  }
  std::sort(out.points.begin(), out.points.end(), point_less);
  return out;
}

namespace {

constexpr std::uint32_t kNone = static_cast<std::uint32_t>(-1);

// Collects (dim, birth, death) triples and applies the shared output conventions.
class DiagramBuilder {
 public:
  DiagramBuilder(double r_max, PersistenceOptions options) : r_max_(r_max), options_(options) {}

  void add_pair(int dim, double birth, double death) {
    if (birth == death && !options_.keep_zero_persistence) return;
    diagram_.points.push_back({dim, birth, death, false});
  }

  void add_essential(int dim, double birth) {
    if (dim == 0 || !std::isfinite(r_max_)) {
      if (dim == 0) ++diagram_.essential_count_dim0;
      diagram_.points.push_back({dim, birth, kInfinity, false});
      return;
    }
    if (birth == r_max_ && !options_.keep_zero_persistence) return;
    diagram_.points.push_back({dim, birth, r_max_, true});
  }

  PersistenceDiagram finish() {
    std::sort(diagram_.points.begin(), diagram_.points.end(), point_less);
    return std::move(diagram_);
  }

 private:
  double r_max_;
  PersistenceOptions options_;
  PersistenceDiagram diagram_;
};

void symmetric_difference(std::vector<std::uint32_t>& col, const std::vector<std::uint32_t>& other,
                          std::vector<std::uint32_t>& scratch) {
  scratch.clear();
  std::set_symmetric_difference(col.begin(), col.end(), other.begin(), other.end(),
                                std::back_inserter(scratch));
  col.swap(scratch);
}

}  // namespace

PersistenceDiagram compute_persistence(const FilteredComplex& fc, PersistenceOptions options) {
  const auto& s = fc.simplices;
  NodeId n = 0;
  for (const auto& x : s) {
    if (x.dim == 0) n = std::max<NodeId>(n, x.vertices[0] + 1);
  }

  // edge ordinal lookup; edges are numbered in stream order
  std::vector<std::uint32_t> edge_at(static_cast<std::size_t>(n) * n, kNone);
  std::vector<double> edge_time;
  std::vector<double> vertex_time(n, 0.0);
  std::vector<bool> vertex_seen(n, false);
  for (const auto& x : s) {
    if (x.dim == 0) {
      vertex_time[x.vertices[0]] = x.time;
      vertex_seen[x.vertices[0]] = true;
    } else if (x.dim == 1) {
      const auto [u, v, _] = x.vertices;
      if (!vertex_seen[u] || !vertex_seen[v]) {
        throw std::logic_error("edge appears before its vertices");
      }
      const auto id = static_cast<std::uint32_t>(edge_time.size());
      edge_at[static_cast<std::size_t>(u) * n + v] = id;
      edge_time.push_back(x.time);
    }
  }

  DiagramBuilder out(fc.r_max, options);

  // Dimension 0: union-find with the elder rule. Roots are the oldest member; among
  // equally old members the smaller vertex id is the elder.
  std::vector<NodeId> parent(n);
  std::iota(parent.begin(), parent.end(), 0u);
  auto find = [&](NodeId x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  auto elder = [&](NodeId a, NodeId b) {
    return vertex_time[a] < vertex_time[b] || (vertex_time[a] == vertex_time[b] && a < b);
  };

  std::vector<bool> positive_edge(edge_time.size(), false);
  std::size_t positive_count = 0;
  {
    std::uint32_t e = 0;
    for (const auto& x : s) {
      if (x.dim != 1) continue;
      NodeId a = find(x.vertices[0]);
      NodeId b = find(x.vertices[1]);
      if (a == b) {
        positive_edge[e] = true;
        ++positive_count;
      } else {
        if (elder(b, a)) std::swap(a, b);
        out.add_pair(0, vertex_time[b], x.time);
        parent[b] = a;
      }
      ++e;
    }
  }
  for (NodeId v = 0; v < n; ++v) {
    if (vertex_seen[v] && find(v) == v) out.add_essential(0, vertex_time[v]);
  }

  // Dimension 1: reduce triangle boundaries. The youngest (largest ordinal) edge is the pivot.
  std::vector<std::vector<std::uint32_t>> reduced_by_pivot(edge_time.size());
  std::vector<bool> paired(edge_time.size(), false);
  std::size_t paired_count = 0;
  std::vector<std::uint32_t> col;
  std::vector<std::uint32_t> scratch;
  for (const auto& x : s) {
    if (paired_count == positive_count) break;
    if (x.dim != 2) continue;
    const auto [u, v, w] = x.vertices;
    col = {edge_at[static_cast<std::size_t>(u) * n + v], edge_at[static_cast<std::size_t>(u) * n + w],
           edge_at[static_cast<std::size_t>(v) * n + w]};
    if (std::find(col.begin(), col.end(), kNone) != col.end()) {
      throw std::logic_error("triangle appears before its edges");
    }
    std::sort(col.begin(), col.end());
    while (!col.empty() && paired[col.back()]) {
      symmetric_difference(col, reduced_by_pivot[col.back()], scratch);
    }
    if (col.empty()) continue;
    const std::uint32_t pivot = col.back();
    if (edge_time[pivot] > x.time) throw std::logic_error("edge appears after its coface");
    paired[pivot] = true;
    ++paired_count;
    out.add_pair(1, edge_time[pivot], x.time);
    reduced_by_pivot[pivot] = col;
  }
  for (std::uint32_t e = 0; e < edge_time.size(); ++e) {
    if (positive_edge[e] && !paired[e]) out.add_essential(1, edge_time[e]);
  }
  return out.finish();
}

PersistenceDiagram naive_persistence_oracle(const FilteredComplex& fc, PersistenceOptions options) {
  const auto& s = fc.simplices;
  const std::size_t m = s.size();

  std::map<std::array<NodeId, 3>, std::size_t> index;
  std::vector<std::vector<bool>> matrix(m, std::vector<bool>(m, false));
  for (std::size_t j = 0; j < m; ++j) {
    const auto& x = s[j];
    for (int drop = 0; x.dim > 0 && drop <= x.dim; ++drop) {
      std::array<NodeId, 3> face{};
      int f = 0;
      for (int k = 0; k <= x.dim; ++k) {
        if (k != drop) face[f++] = x.vertices[k];
      }
      matrix[j][index.at(face)] = true;
    }
    index.emplace(x.vertices, j);
  }

  auto low = [&](std::size_t j) -> long {
    for (std::size_t i = m; i-- > 0;) {
      if (matrix[j][i]) return static_cast<long>(i);
    }
    return -1;
  };

  std::vector<long> lows(m, -1);
  for (std::size_t j = 0; j < m; ++j) {
    bool changed = true;
    while (changed) {
      changed = false;
      const long l = low(j);
      if (l < 0) break;
      for (std::size_t k = 0; k < j; ++k) {
        if (lows[k] == l) {
          for (std::size_t i = 0; i < m; ++i) matrix[j][i] = matrix[j][i] != matrix[k][i];
          changed = true;
          break;
        }
      }
    }
    lows[j] = low(j);
  }

  DiagramBuilder out(fc.r_max, options);
  std::vector<bool> is_birth_paired(m, false);
  for (std::size_t j = 0; j < m; ++j) {
    if (lows[j] < 0) continue;
    const auto& creator = s[static_cast<std::size_t>(lows[j])];
    is_birth_paired[static_cast<std::size_t>(lows[j])] = true;
    if (creator.dim <= 1) out.add_pair(creator.dim, creator.time, s[j].time);
  }
  for (std::size_t j = 0; j < m; ++j) {
    if (lows[j] >= 0 || is_birth_paired[j]) continue;
    if (s[j].dim <= 1) out.add_essential(s[j].dim, s[j].time);
  }
  return out.finish();
}

}  // namespace topocoarse
