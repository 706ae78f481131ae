// Acceptance run: one PASS/FAIL line per criterion. Exit status is nonzero if any fails.
// A time limit of 0 means the criterion has none.
// `--write-golden` regenerates the feature golden files instead of comparing against them.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstring>
#include <filesystem>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "support.hpp"
#include "topocoarse/bottleneck.hpp"
#include "topocoarse/coarsening.hpp"
#include "topocoarse/features.hpp"
#include "topocoarse/filtration.hpp"
#include "topocoarse/generators.hpp"
#include "topocoarse/io.hpp"
#include "topocoarse/metric.hpp"
#include "topocoarse/persistence.hpp"
#include "topocoarse/selector.hpp"
#include "topocoarse/similarity.hpp"

using namespace topocoarse;
using testsupport::close_rel;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

int failures = 0;

void run(int id, const std::string& title, double limit_seconds, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome out{false, ""};
  try {
    out = body();
  } catch (const std::exception& e) {
    out = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (limit_seconds > 0.0 && secs > limit_seconds) {
    out.pass = false;
    out.detail += " [over time limit]";
  }
  if (!out.pass) ++failures;
  std::ostringstream line;
  line.setf(std::ios::fixed);
  line.precision(2);
  line << (out.pass ? "PASS" : "FAIL") << " criterion " << id << ": " << title << " (" << secs << " s";
  if (limit_seconds > 0.0) line << " / " << limit_seconds << " s";
  line << ") " << out.detail;
  std::cout << line.str() << std::endl;
}

// ---------------------------------------------------------------------------------------
// 1. Hand cases for the two triangle rules.

Outcome hand_cases() {
  const auto g = testsupport::make_weighted(3, {{0, 1}, {1, 2}, {0, 2}}, {1.0, 1.0, 1.0});
  const auto m = shortest_path_metric(g, EdgeWeighting::custom());
  const auto aware = compute_persistence(build_filtration(m, 10.0)).of_dim(1);
  const auto rips = compute_persistence(build_unmodified_filtration(m, 10.0)).of_dim(1);
  const bool aware_ok = aware.size() == 1 && aware[0].birth == 1.0 && aware[0].death == 2.0 && !aware[0].truncated;
  const bool rips_ok = rips.empty();
  std::ostringstream detail;
  detail << "triangle-aware dim1 " << (aware_ok ? "== {(1,2)}" : "wrong") << ", Rips dim1 "
         << (rips_ok ? "empty" : "nonempty");
  return {aware_ok && rips_ok, detail.str()};
}

// ---------------------------------------------------------------------------------------
// 2. Fast persistence against the naive reduction.

Outcome persistence_oracle() {
  std::mt19937_64 rng(20240501);
  std::uniform_int_distribution<std::size_t> size(1, 8);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  int mismatches = 0;
  int nonempty_dim1 = 0;
  for (int trial = 0; trial < 500; ++trial) {
    const auto g = testsupport::random_graph(rng, size(rng), unit(rng));
    const auto m = shortest_path_metric(g, EdgeWeighting::length(), 1);
    const double fraction = trial % 5 == 0 ? 0.6 : 2.0;
    const double r_max = m.max_diameter() > 0.0 ? fraction * m.max_diameter() : kInfinity;
    const auto fc = build_filtration(m, r_max);
    const auto fast = compute_persistence(fc);
    if (fast != naive_persistence_oracle(fc)) ++mismatches;
    if (!fast.of_dim(1).empty()) ++nonempty_dim1;
  }
  std::ostringstream detail;
  detail << mismatches << "/500 mismatches; " << nonempty_dim1 << " graphs with dim-1 classes";
  return {mismatches == 0, detail.str()};
}

// ---------------------------------------------------------------------------------------
// 3. Bottleneck distance against exhaustive enumeration.

PersistenceDiagram random_diagram(std::mt19937_64& rng, bool lattice) {
  std::uniform_int_distribution<int> count(0, 6);
  std::uniform_real_distribution<double> unit(0.0, 2.0);
  std::uniform_int_distribution<int> step(0, 8);
  PersistenceDiagram pd;
  const int n = count(rng);
  for (int i = 0; i < n; ++i) {
    double b = lattice ? 0.25 * step(rng) : unit(rng);
    double d = lattice ? b + 0.25 * (1 + step(rng)) : b + unit(rng);
    pd.points.push_back({1, b, d, false});
  }
  std::sort(pd.points.begin(), pd.points.end(), point_less);
  return pd;
}

Outcome bottleneck_oracle_check() {
  std::mt19937_64 rng(77);
  int mismatches = 0;
  for (int trial = 0; trial < 500; ++trial) {
    // Every third pair is drawn on a lattice so that ties among costs occur.
    const bool lattice = trial % 3 == 0;
    const auto a = random_diagram(rng, lattice);
    const auto b = random_diagram(rng, lattice);
    if (bottleneck_distance(a, b, 1) != bottleneck_oracle(a, b, 1)) ++mismatches;
  }
  std::ostringstream detail;
  detail << mismatches << "/500 mismatches";
  return {mismatches == 0, detail.str()};
}

// ---------------------------------------------------------------------------------------
// 4. Similarity equivariance.

// Random planar graph whose distinct edge lengths are separated by a relative 1e-6, so
// that thresholds are not decided by rounding.
SpatialGraph well_separated_graph(std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> size(8, 24);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (;;) {
    const std::size_t n = size(rng);
    const double p = 0.15 + 0.35 * unit(rng);
    auto g = testsupport::random_graph(rng, n, p);
    if (g.num_edges() < 2) continue;
    auto w = edge_weights(g, EdgeWeighting::length());
    std::sort(w.begin(), w.end());
    bool separated = true;
    for (std::size_t i = 1; i < w.size(); ++i) {
      if (w[i] - w[i - 1] <= 1e-6 * w[i]) separated = false;
    }
    if (separated) return g;
  }
}

double graph_extent(const SpatialGraph& g) {
  double extent = 0.0;
  for (double x : g.positions()) extent = std::max(extent, std::abs(x));
  return extent;
}

bool same_partition(const NodePartition& a, const NodePartition& b) { return a.block_of == b.block_of; }

Outcome equivariance() {
  std::mt19937_64 rng(4242);
  int fail_a = 0;
  int fail_b = 0;
  int fail_c = 0;
  std::size_t thresholds_checked = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const auto g = well_separated_graph(rng);
    const auto s = random_similarity(2, static_cast<std::uint64_t>(1000 + trial));
    const auto t = apply_similarity(g, s);
    const double k = s.scale;
    const auto w = EdgeWeighting::length();
    // Positions are compared relative to the size of the transformed point cloud, since a
    // translated coordinate can sit arbitrarily close to zero.
    const double ref = graph_extent(t);

    // (a) Partitions and hypernode positions. Thresholds: every grid value (taken from each
    // graph's own grid) and the midpoints between consecutive distinct lengths (scaled by k).
    bool ok_a = true;
    const auto grid_g = quantile_grid(edge_weights(g, w), 10);
    const auto grid_t = quantile_grid(edge_weights(t, w), 10);
    std::vector<std::pair<double, double>> thetas;
    if (grid_g.values.size() != grid_t.values.size()) {
      ok_a = false;
    } else {
      for (std::size_t i = 0; i < grid_g.values.size(); ++i) {
        if (!close_rel(grid_t.values[i], k * grid_g.values[i], 1e-9)) ok_a = false;
        thetas.emplace_back(grid_g.values[i], grid_t.values[i]);
      }
    }
    auto lengths = edge_weights(g, w);
    std::sort(lengths.begin(), lengths.end());
    for (std::size_t i = 1; i < lengths.size(); i += 3) {
      const double mid = 0.5 * (lengths[i - 1] + lengths[i]);
      thetas.emplace_back(mid, k * mid);
    }
    for (const auto& [theta, ktheta] : thetas) {
      for (auto positioning : {Positioning::Average, Positioning::Degree}) {
        ++thresholds_checked;
        const auto rg = coarsen(g, w, theta, positioning);
        const auto rt = coarsen(t, w, ktheta, positioning);
        if (!same_partition(rg.partition, rt.partition)) {
          ok_a = false;
          continue;
        }
        const auto mapped = apply_similarity(rg.coarse, s);
        for (std::size_t i = 0; i < mapped.positions().size(); ++i) {
          const double a = mapped.positions()[i];
          const double b = rt.coarse.positions()[i];
          if (std::abs(a - b) > 1e-9 * std::max({std::abs(a), std::abs(b), ref})) ok_a = false;
        }
      }
    }
    if (!ok_a) ++fail_a;

    // (b) Diagrams scale by k.
    SelectorOptions opts;
    const auto dg = original_diagram(g, opts);
    const auto dt = original_diagram(t, opts);
    const auto expected = dg.original.scaled(k);
    bool ok_b = expected.points.size() == dt.original.points.size() && close_rel(dt.r_max, k * dg.r_max, 1e-9);
    if (ok_b) {
      for (std::size_t i = 0; i < expected.points.size(); ++i) {
        const auto& p = expected.points[i];
        const auto& q = dt.original.points[i];
        if (p.dim != q.dim || !close_rel(p.birth, q.birth, 1e-9) || !close_rel(p.death, q.death, 1e-9)) {
          ok_b = false;
        }
      }
    }
    if (!ok_b) ++fail_b;

    // (c) Score curves and the selected grid index agree.
    const auto cg = score_curve(g, opts);
    const auto ct = score_curve(t, opts);
    bool ok_c = cg.rows.size() == ct.rows.size() && cg.argmin_index == ct.argmin_index &&
                cg.alpha_star == ct.alpha_star;
    if (ok_c) {
      for (std::size_t i = 0; i < cg.rows.size(); ++i) {
        if (std::abs(cg.rows[i].score - ct.rows[i].score) > 1e-9 * std::max(1.0, std::abs(cg.rows[i].score))) {
          ok_c = false;
        }
      }
    }
    if (!ok_c) ++fail_c;
  }
  std::ostringstream detail;
  detail << "failing cases: (a) " << fail_a << "/100, (b) " << fail_b << "/100, (c) " << fail_c
         << "/100; " << thresholds_checked << " coarsenings compared";
  return {fail_a == 0 && fail_b == 0 && fail_c == 0, detail.str()};
}

// ---------------------------------------------------------------------------------------
// 5. Annulus run at the default settings.

double max_finite_persistence(const PersistenceDiagram& pd, int dim) {
  double best = 0.0;
  for (const auto& p : pd.of_dim(dim)) {
    if (!p.essential()) best = std::max(best, p.persistence());
  }
  return best;
}

Outcome annulus_run() {
  std::vector<std::uint64_t> node_fail;
  std::vector<std::uint64_t> persistence_fail;
  std::vector<std::uint64_t> ratio_fail;
  std::ostringstream per_seed;
  per_seed.precision(3);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    AnnulusParams params;
    params.seed = seed;
    const auto g = gen_annulus(params);
    const auto sel = select(g, SelectorOptions{});
    const std::size_t kept = sel.coarsening.coarse.num_nodes();
    if (static_cast<double>(kept) > 0.8 * static_cast<double>(g.num_nodes())) node_fail.push_back(seed);
    const double orig = max_finite_persistence(sel.original_diagram, 1);
    const double reduced = max_finite_persistence(sel.reduced_diagram, 1);
    if (reduced < 0.5 * orig) persistence_fail.push_back(seed);
    for (std::size_t i = 1; i < sel.curve.rows.size(); ++i) {
      if (sel.curve.rows[i].edge_ratio > sel.curve.rows[i - 1].edge_ratio) {
        ratio_fail.push_back(seed);
        break;
      }
    }
    per_seed << " s" << seed << ":" << kept << "n," << reduced / std::max(orig, 1e-300);
  }
  auto list = [](const std::vector<std::uint64_t>& v) {
    std::ostringstream ss;
    ss << v.size() << "/20";
    if (!v.empty()) {
      ss << " {";
      for (std::size_t i = 0; i < v.size(); ++i) ss << (i ? "," : "") << v[i];
      ss << "}";
    }
    return ss.str();
  };
  std::ostringstream detail;
  detail << "seeds failing: node reduction " << list(node_fail) << ", dim-1 persistence retention "
         << list(persistence_fail) << ", edge-ratio monotonicity " << list(ratio_fail)
         << "; per seed (nodes kept, reduced/original max dim-1 persistence):" << per_seed.str();
  return {node_fail.empty() && persistence_fail.empty() && ratio_fail.empty(), detail.str()};
}

// ---------------------------------------------------------------------------------------
// 6. Structural invariants of coarse graphs.

Outcome structural_invariants() {
  std::mt19937_64 rng(606);
  std::uniform_int_distribution<std::size_t> size(2, 40);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  int graphs = 0;
  std::size_t coarsenings = 0;
  int violations = 0;
  while (graphs < 200) {
    const auto g = testsupport::random_graph(rng, size(rng), 0.02 + 0.3 * unit(rng));
    if (g.num_edges() == 0) continue;
    ++graphs;
    const auto grid = quantile_grid(edge_weights(g, EdgeWeighting::length()), 10);
    for (double theta : grid.values) {
      for (auto positioning : {Positioning::Average, Positioning::Degree}) {
        ++coarsenings;
        const auto r = coarsen(g, EdgeWeighting::length(), theta, positioning);
        std::set<std::pair<NodeId, NodeId>> seen;
        bool ok = validate(r.coarse.to_parts()).empty();
        for (const auto& e : r.coarse.edges()) {
          if (e.u == e.v || !seen.emplace(std::min(e.u, e.v), std::max(e.u, e.v)).second) ok = false;
        }
        if (r.coarse.num_components() != g.num_components()) ok = false;
        if (!ok) ++violations;
      }
    }
  }
  std::ostringstream detail;
  detail << violations << " violations over " << coarsenings << " coarsenings of 200 graphs";
  return {violations == 0, detail.str()};
}

// ---------------------------------------------------------------------------------------
// 7. Landscape norm.

Outcome landscape_norm() {
  PersistenceDiagram single;
  single.points = {{1, 1.0, 3.0, false}};
  const double closed_err = std::abs(landscape_l2_norm(single) - std::sqrt(2.0 / 3.0));
  std::mt19937_64 rng(7007);
  std::uniform_int_distribution<int> count(1, 8);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  double worst = 0.0;
  for (int trial = 0; trial < 20; ++trial) {
    PersistenceDiagram pd;
    const int n = count(rng);
    for (int i = 0; i < n; ++i) {
      const double b = 2.0 * unit(rng);
      pd.points.push_back({1, b, b + 0.05 + unit(rng), false});
    }
    std::sort(pd.points.begin(), pd.points.end(), point_less);
    const double exact = landscape_l2_norm(pd, 5);
    const double quad = testsupport::landscape_quadrature(pd, 5, 100000);
    worst = std::max(worst, std::abs(exact - quad) / exact);
  }
  std::ostringstream detail;
  detail.precision(3);
  detail << "closed-form error " << closed_err << ", worst relative quadrature gap " << worst
         << " over 20 diagrams";
  return {closed_err <= 1e-12 && worst <= 1e-6, detail.str()};
}

// ---------------------------------------------------------------------------------------
// 8. Feature CSV golden files on synthetic graphs.

std::vector<std::pair<std::string, SpatialGraph>> golden_graphs() {
  std::vector<std::pair<std::string, SpatialGraph>> out;
  for (std::uint64_t seed : {0, 1, 6}) {
    AnnulusParams params;
    params.seed = seed;
    out.emplace_back("annulus_" + std::to_string(seed), gen_annulus(params));
  }
  for (std::uint64_t seed : {0, 1}) {
    out.emplace_back("random_" + std::to_string(seed), gen_random_geometric(40, 2, 0.2, seed));
  }
  return out;
}

std::string features_csv(bool reduce) {
  std::ostringstream ss;
  write_features_header(ss);
  for (const auto& [name, g] : golden_graphs()) {
    const SelectorOptions opts;
    if (reduce) {
      const auto sel = select(g, opts);
      write_features_row(ss, name, extract_features(sel.coarsening.coarse, sel.reduced_diagram));
    } else {
      write_features_row(ss, name, extract_features(g, original_diagram(g, opts).original));
    }
  }
  return ss.str();
}

Outcome golden_features(const std::filesystem::path& dir, bool write) {
  std::ostringstream detail;
  bool ok = true;
  for (bool reduce : {false, true}) {
    const auto path = dir / (reduce ? "features_reduced.csv" : "features_original.csv");
    const auto produced = features_csv(reduce);
    if (produced != features_csv(reduce)) {
      ok = false;
      detail << path.filename().string() << " not deterministic; ";
      continue;
    }
    if (write) {
      write_text_file(path, produced);
      detail << "wrote " << path.filename().string() << "; ";
    } else if (!std::filesystem::exists(path)) {
      ok = false;
      detail << path.filename().string() << " missing; ";
    } else if (read_text_file(path) != produced) {
      ok = false;
      detail << path.filename().string() << " differs; ";
    } else {
      detail << path.filename().string() << " matches; ";
    }
  }
  return {ok, detail.str()};
}

}  // namespace

int main(int argc, char** argv) {
  bool write_golden = false;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--write-golden") == 0) write_golden = true;
  }
  const std::filesystem::path golden_dir = TOPOCOARSE_GOLDEN_DIR;

  run(1, "triangle-aware vs Rips hand cases", 1.0, hand_cases);
  run(2, "persistence equals naive reduction on 500 graphs (n <= 8)", 30.0, persistence_oracle);
  run(3, "bottleneck equals exhaustive enumeration on 500 pairs", 30.0, bottleneck_oracle_check);
  run(4, "similarity equivariance on 100 (graph, similarity) pairs", 120.0, equivariance);
  run(5, "annulus n=100, p=0.1, seeds 0..19", 120.0, annulus_run);
  run(6, "coarse graphs are simple and keep component counts", 0.0, structural_invariants);
  run(7, "landscape norm closed form and quadrature", 0.0, landscape_norm);
  run(8, "feature CSV golden files", 0.0, [&] { return golden_features(golden_dir, write_golden); });

  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed")
            << std::endl;
  return failures == 0 ? 0 : 1;
}
