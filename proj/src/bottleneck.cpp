#include "topocoarse/bottleneck.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <string>

namespace topocoarse {

namespace {

// Hopcroft-Karp on a bipartite graph with equal side sizes; returns true iff a perfect
// matching exists.
class PerfectMatching {
 public:
  explicit PerfectMatching(std::size_t n) : n_(n), adj_(n) {}

  void add_edge(std::size_t left, std::size_t right) { adj_[left].push_back(right); }

  bool has_perfect_matching() {
    match_left_.assign(n_, kFree);
    match_right_.assign(n_, kFree);
    std::size_t matched = 0;
    while (bfs()) {
      for (std::size_t u = 0; u < n_; ++u) {
        if (match_left_[u] == kFree && dfs(u)) ++matched;
      }
    }
    return matched == n_;
  }

 private:
  static constexpr std::size_t kFree = std::numeric_limits<std::size_t>::max();

  bool bfs() {
    layer_.assign(n_, kFree);
    std::queue<std::size_t> q;
    for (std::size_t u = 0; u < n_; ++u) {
      if (match_left_[u] == kFree) {
        layer_[u] = 0;
        q.push(u);
      }
    }
    bool found = false;
    while (!q.empty()) {
      const auto u = q.front();
      q.pop();
      for (const auto r : adj_[u]) {
        const auto next = match_right_[r];
        if (next == kFree) {
          found = true;
        } else if (layer_[next] == kFree) {
          layer_[next] = layer_[u] + 1;
          q.push(next);
        }
      }
    }
    return found;
  }

  bool dfs(std::size_t u) {
    for (const auto r : adj_[u]) {
      const auto next = match_right_[r];
      if (next == kFree || (layer_[next] == layer_[u] + 1 && dfs(next))) {
        match_left_[u] = r;
        match_right_[r] = u;
        return true;
      }
    }
    layer_[u] = kFree;
    return false;
  }

  std::size_t n_;
  std::vector<std::vector<std::size_t>> adj_;
  std::vector<std::size_t> match_left_;
  std::vector<std::size_t> match_right_;
  std::vector<std::size_t> layer_;
};

// Left side: a_0..a_{p-1}, then diagonal copies of b. Right side: b_0..b_{q-1}, then
// diagonal copies of a.
bool feasible(const std::vector<DiagramPoint>& a, const std::vector<DiagramPoint>& b, double delta) {
  const std::size_t p = a.size();
  const std::size_t q = b.size();
  PerfectMatching m(p + q);
  for (std::size_t i = 0; i < p; ++i) {
    for (std::size_t j = 0; j < q; ++j) {
      if (linf_cost(a[i], b[j]) <= delta) m.add_edge(i, j);
    }
    if (diagonal_cost(a[i]) <= delta) m.add_edge(i, q + i);
  }
  for (std::size_t j = 0; j < q; ++j) {
    if (diagonal_cost(b[j]) <= delta) m.add_edge(p + j, j);
    for (std::size_t i = 0; i < p; ++i) m.add_edge(p + j, q + i);
  }
  return m.has_perfect_matching();
}

struct SplitDiagram {
  std::vector<DiagramPoint> finite;
  std::vector<double> essential_births;
};

SplitDiagram split(const PersistenceDiagram& d, int dim) {
  SplitDiagram out;
  for (const auto& p : d.points) {
    if (p.dim != dim) continue;
    if (p.essential()) {
      out.essential_births.push_back(p.birth);
    } else {
      out.finite.push_back({p.birth, p.death});
    }
  }
  std::sort(out.essential_births.begin(), out.essential_births.end());
  return out;
}

// Essential classes can only be matched among themselves; sorted order minimises the
// largest birth displacement.
double essential_cost(const SplitDiagram& a, const SplitDiagram& b, int dim) {
  if (a.essential_births.size() != b.essential_births.size()) {
    throw ComparisonError("cannot compare diagrams in dimension " + std::to_string(dim) + ": " +
                          std::to_string(a.essential_births.size()) + " vs " +
                          std::to_string(b.essential_births.size()) + " essential classes");
  }
  double cost = 0.0;
  for (std::size_t i = 0; i < a.essential_births.size(); ++i) {
    cost = std::max(cost, std::abs(a.essential_births[i] - b.essential_births[i]));
  }
  return cost;
}

void enumerate(const std::vector<DiagramPoint>& a, const std::vector<DiagramPoint>& b,
               std::size_t i, std::vector<bool>& used, double current, double& best) {
  if (current >= best) return;
  if (i == a.size()) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (!used[j]) current = std::max(current, diagonal_cost(b[j]));
    }
    best = std::min(best, current);
    return;
  }
  enumerate(a, b, i + 1, used, std::max(current, diagonal_cost(a[i])), best);
  for (std::size_t j = 0; j < b.size(); ++j) {
    if (used[j]) continue;
    used[j] = true;
    enumerate(a, b, i + 1, used, std::max(current, linf_cost(a[i], b[j])), best);
    used[j] = false;
  }
}

}  // namespace

double bottleneck_finite(const std::vector<DiagramPoint>& a, const std::vector<DiagramPoint>& b) {
  if (a.empty() && b.empty()) return 0.0;
  std::vector<double> candidates;
  candidates.reserve(a.size() * b.size() + a.size() + b.size());
  for (const auto& x : a) {
    candidates.push_back(diagonal_cost(x));
    for (const auto& y : b) candidates.push_back(linf_cost(x, y));
  }
  for (const auto& y : b) candidates.push_back(diagonal_cost(y));
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

  // The largest candidate is always feasible (everything to the diagonal).
  std::size_t lo = 0;
  std::size_t hi = candidates.size() - 1;
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo) / 2;
    if (feasible(a, b, candidates[mid])) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  return candidates[lo];
}

double bottleneck_finite_oracle(const std::vector<DiagramPoint>& a,
                                const std::vector<DiagramPoint>& b) {
  double best = std::numeric_limits<double>::infinity();
  std::vector<bool> used(b.size(), false);
  enumerate(a, b, 0, used, 0.0, best);
  return best;
}

double bottleneck_distance(const PersistenceDiagram& a, const PersistenceDiagram& b, int dim) {
  const auto sa = split(a, dim);
  const auto sb = split(b, dim);
  const double ess = essential_cost(sa, sb, dim);
  return std::max(ess, bottleneck_finite(sa.finite, sb.finite));
}

double bottleneck_oracle(const PersistenceDiagram& a, const PersistenceDiagram& b, int dim) {
  const auto sa = split(a, dim);
  const auto sb = split(b, dim);
  const double ess = essential_cost(sa, sb, dim);
  return std::max(ess, bottleneck_finite_oracle(sa.finite, sb.finite));
}

double diagram_distance(const PersistenceDiagram& a, const PersistenceDiagram& b,
                        DistanceMode mode) {
  const double d1 = bottleneck_distance(a, b, 1);
  if (mode == DistanceMode::Dim1Only) return d1;
  return std::max(bottleneck_distance(a, b, 0), d1);
}

}  // namespace topocoarse
