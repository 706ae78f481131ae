// Command-line front end: graph generation, coarsening, persistence diagrams, bottleneck
// distances, threshold selection, feature extraction and similarity transforms.

#include <cmath>
#include <filesystem>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

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

namespace tc = topocoarse;

namespace {

constexpr int kExitPipeline = 1;
constexpr int kExitUsage = 2;

struct GraphInput {
  std::string path;
  std::string edges;
  std::string weight{"length"};
  std::string attribute{"weight"};

  void attach(CLI::App* cmd, bool with_weight = true) {
    cmd->add_option("--input,-i", path, "Graph JSON, or node CSV when --edges is given")
        ->required()
        ->check(CLI::ExistingFile);
    cmd->add_option("--edges", edges, "Edge CSV (u,v[,weight]); selects the CSV format")
        ->check(CLI::ExistingFile);
    if (with_weight) {
      cmd->add_option("--weight", weight, "Edge weighting")
          ->check(CLI::IsMember({"length", "custom"}))
          ->capture_default_str();
      cmd->add_option("--weight-attr", attribute, "JSON edge attribute used as custom weight")
          ->capture_default_str();
    }
  }

  tc::SpatialGraph load() const {
    auto loaded = edges.empty() ? tc::load_graph_json(path, attribute)
                                : tc::load_graph_csv(path, edges);
    for (const auto& w : loaded.warnings) std::cerr << "warning: " << w << '\n';
    return std::move(loaded.graph);
  }

  tc::EdgeWeighting weighting() const {
    return weight == "custom" ? tc::EdgeWeighting::custom(attribute) : tc::EdgeWeighting::length();
  }
};

struct SelectorFlags {
  std::size_t grid_size{10};
  std::string positioning{"average"};
  double rmax_frac{2.0};
  std::string distance{"max"};
  std::string coarse_metric{"length"};

  void attach(CLI::App* cmd) {
    cmd->add_option("--grid-size,-m", grid_size, "Number of quantile levels")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd->add_option("--positioning", positioning, "Hypernode positioning")
        ->check(CLI::IsMember({"average", "degree"}))
        ->capture_default_str();
    cmd->add_option("--rmax-frac", rmax_frac, "r_max as a multiple of the largest component diameter")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd->add_option("--distance", distance, "Diagram distance: max over dims 0/1, or dim 1 only")
        ->check(CLI::IsMember({"max", "dim1"}))
        ->capture_default_str();
    cmd->add_option("--coarse-metric", coarse_metric,
                    "Metric on coarse graphs: hypernode lengths, or min/sum of crossing custom weights")
        ->check(CLI::IsMember({"length", "min", "sum"}))
        ->capture_default_str();
  }

  tc::SelectorOptions options(const GraphInput& in) const {
    tc::SelectorOptions o;
    o.weighting = in.weighting();
    o.positioning = positioning == "degree" ? tc::Positioning::Degree : tc::Positioning::Average;
    o.grid_size = grid_size;
    o.rmax_fraction = rmax_frac;
    o.distance = distance == "dim1" ? tc::DistanceMode::Dim1Only : tc::DistanceMode::MaxOverDims;
    o.coarse_metric = coarse_metric == "min"   ? tc::CoarseMetric::AggregateMin
                      : coarse_metric == "sum" ? tc::CoarseMetric::AggregateSum
                                               : tc::CoarseMetric::Length;
    return o;
  }
};

tc::Positioning parse_positioning(const std::string& s) {
  return s == "degree" ? tc::Positioning::Degree : tc::Positioning::Average;
}

// Writes to `path`, or stdout when it is empty or "-".
void emit(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
  } else {
    tc::write_text_file(path, content);
  }
}

std::vector<double> parse_vector(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string cell;
  while (std::getline(ss, cell, ',')) out.push_back(tc::parse_double(cell));
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Topology-preserving coarsening of spatial graphs"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for all subcommands");

  // gen
  auto* gen = app.add_subcommand("gen", "Generate synthetic spatial graphs");
  gen->require_subcommand(1);
  tc::AnnulusParams annulus;
  std::string gen_out;
  auto* gen_annulus = gen->add_subcommand("annulus", "Points on an annulus joined by their shortest pairs");
  gen_annulus->add_option("--n", annulus.n, "Node count")->capture_default_str();
  gen_annulus->add_option("--inner", annulus.inner, "Inner radius")->capture_default_str();
  gen_annulus->add_option("--outer", annulus.outer, "Outer radius")->capture_default_str();
  gen_annulus->add_option("--p", annulus.edge_fraction, "Fraction of all pairs kept as edges")
      ->capture_default_str();
  gen_annulus->add_option("--seed", annulus.seed, "Random seed")->capture_default_str();
  gen_annulus->add_option("--out,-o", gen_out, "Output JSON (default stdout)");
  std::size_t random_n = 20;
  std::size_t random_dim = 2;
  double random_prob = 0.3;
  std::uint64_t random_seed = 0;
  auto* gen_random = gen->add_subcommand("random", "Uniform points with independent random edges");
  gen_random->add_option("--n", random_n, "Node count")->capture_default_str();
  gen_random->add_option("--dim", random_dim, "Ambient dimension")->capture_default_str();
  gen_random->add_option("--prob", random_prob, "Edge probability")->capture_default_str();
  gen_random->add_option("--seed", random_seed, "Random seed")->capture_default_str();
  gen_random->add_option("--out,-o", gen_out, "Output JSON (default stdout)");

  // coarsen
  auto* coarsen_cmd = app.add_subcommand("coarsen", "Coarsen a graph at a fixed threshold");
  GraphInput coarsen_in;
  coarsen_in.attach(coarsen_cmd);
  double theta = 0.0;
  std::string coarsen_positioning = "average";
  std::string coarsen_out;
  std::string coarsen_aggregate = "none";
  coarsen_cmd->add_option("--theta", theta, "Collapse edges with weight <= theta")
      ->required()
      ->check(CLI::NonNegativeNumber);
  coarsen_cmd->add_option("--positioning", coarsen_positioning, "Hypernode positioning")
      ->check(CLI::IsMember({"average", "degree"}))
      ->capture_default_str();
  coarsen_cmd->add_option("--aggregate", coarsen_aggregate,
                          "Attach aggregated custom weights to the coarse edges")
      ->check(CLI::IsMember({"none", "min", "sum"}))
      ->capture_default_str();
  coarsen_cmd->add_option("--out,-o", coarsen_out, "Output JSON (default stdout)");

  // pd
  auto* pd_cmd = app.add_subcommand("pd", "Persistence diagram of a graph");
  GraphInput pd_in;
  pd_in.attach(pd_cmd);
  double pd_rmax_frac = 2.0;
  double pd_rmax = 0.0;
  std::string pd_variant = "triangle";
  bool pd_keep_zero = false;
  std::string pd_out;
  std::string pd_dump;
  pd_cmd->add_option("--rmax-frac", pd_rmax_frac, "r_max as a multiple of the largest component diameter")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  pd_cmd->add_option("--rmax", pd_rmax, "Absolute r_max (overrides --rmax-frac)")
      ->check(CLI::PositiveNumber);
  pd_cmd->add_option("--variant", pd_variant, "Triangle rule: triangle-aware or plain Rips")
      ->check(CLI::IsMember({"triangle", "rips"}))
      ->capture_default_str();
  pd_cmd->add_flag("--keep-zero", pd_keep_zero, "Keep zero-persistence points");
  pd_cmd->add_option("--out,-o", pd_out, "Diagram CSV (default stdout)");
  pd_cmd->add_option("--dump-filtration", pd_dump, "Also write the simplex stream as CSV");

  // bottleneck
  auto* bn_cmd = app.add_subcommand("bottleneck", "Bottleneck distance between two diagram CSVs");
  std::string bn_a;
  std::string bn_b;
  std::string bn_dim = "max";
  bn_cmd->add_option("--a", bn_a, "First diagram CSV")->required()->check(CLI::ExistingFile);
  bn_cmd->add_option("--b", bn_b, "Second diagram CSV")->required()->check(CLI::ExistingFile);
  bn_cmd->add_option("--dim", bn_dim, "Homology dimension, or the max over both")
      ->check(CLI::IsMember({"0", "1", "max"}))
      ->capture_default_str();

  // score-curve
  auto* sc_cmd = app.add_subcommand("score-curve", "Score every threshold of the quantile grid");
  GraphInput sc_in;
  sc_in.attach(sc_cmd);
  SelectorFlags sc_flags;
  sc_flags.attach(sc_cmd);
  bool sc_include_zero = false;
  std::string sc_out;
  sc_cmd->add_flag("--include-zero", sc_include_zero, "Add a debug row at theta = 0");
  sc_cmd->add_option("--out,-o", sc_out, "Score CSV (default stdout)");

  // select
  auto* sel_cmd = app.add_subcommand("select", "Pick the best threshold and write the coarse graph");
  GraphInput sel_in;
  sel_in.attach(sel_cmd);
  SelectorFlags sel_flags;
  sel_flags.attach(sel_cmd);
  std::string sel_prefix;
  sel_cmd->add_option("--out-prefix", sel_prefix,
                      "Writes <prefix>.coarse.json, .scores.csv, .pd_orig.csv, .pd_reduced.csv")
      ->required();

  // features
  auto* feat_cmd = app.add_subcommand("features", "Per-graph persistence features as CSV");
  std::vector<std::string> feat_inputs;
  std::string feat_weight = "length";
  std::string feat_attr = "weight";
  bool feat_reduce = false;
  SelectorFlags feat_flags;
  std::string feat_out;
  feat_cmd->add_option("--input,-i", feat_inputs, "Graph JSON files")
      ->required()
      ->check(CLI::ExistingFile);
  feat_cmd->add_option("--weight", feat_weight, "Edge weighting")
      ->check(CLI::IsMember({"length", "custom"}))
      ->capture_default_str();
  feat_cmd->add_option("--weight-attr", feat_attr, "JSON edge attribute used as custom weight")
      ->capture_default_str();
  feat_cmd->add_flag("--reduce", feat_reduce, "Describe the selected coarsening instead of the input");
  feat_flags.attach(feat_cmd);
  feat_cmd->add_option("--out,-o", feat_out, "Features CSV (default stdout)");

  // transform
  auto* tr_cmd = app.add_subcommand("transform", "Apply a similarity x -> kRx + A to node positions");
  GraphInput tr_in;
  tr_in.attach(tr_cmd, false);
  std::uint64_t tr_seed = 0;
  double tr_scale = 1.0;
  double tr_angle = 0.0;
  std::string tr_translate;
  std::string tr_out;
  auto* tr_seed_opt = tr_cmd->add_option("--seed", tr_seed, "Draw a random similarity from this seed");
  tr_cmd->add_option("--scale", tr_scale, "Scale k")->check(CLI::PositiveNumber)->excludes(tr_seed_opt);
  tr_cmd->add_option("--angle-deg", tr_angle, "Rotation angle in degrees (2D only)")->excludes(tr_seed_opt);
  tr_cmd->add_option("--translate", tr_translate, "Comma-separated translation")->excludes(tr_seed_opt);
  tr_cmd->add_option("--out,-o", tr_out, "Output JSON (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (gen->parsed()) {
      const auto g = gen_annulus->parsed()
                         ? tc::gen_annulus(annulus)
                         : tc::gen_random_geometric(random_n, random_dim, random_prob, random_seed);
      emit(gen_out, tc::graph_to_json(g));
    } else if (coarsen_cmd->parsed()) {
      const auto g = coarsen_in.load();
      const auto result = tc::coarsen(g, coarsen_in.weighting(), theta, parse_positioning(coarsen_positioning));
      if (coarsen_aggregate == "none") {
        emit(coarsen_out, tc::graph_to_json(result.coarse, &result.partition, &g));
      } else {
        const auto rule = coarsen_aggregate == "sum" ? tc::AggregationRule::Sum : tc::AggregationRule::Min;
        const auto weighted = tc::with_aggregated_weights(g, result, rule);
        emit(coarsen_out, tc::graph_to_json(weighted, &result.partition, &g));
      }
    } else if (pd_cmd->parsed()) {
      const auto g = pd_in.load();
      const auto metric = tc::shortest_path_metric(g, pd_in.weighting());
      double r_max = pd_rmax > 0.0 ? pd_rmax : pd_rmax_frac * metric.max_diameter();
      if (!(r_max > 0.0)) r_max = tc::kInfinity;
      const auto fc = tc::build_filtration(
          metric, r_max, pd_variant == "rips" ? tc::TriangleRule::Rips : tc::TriangleRule::TriangleAware);
      if (!pd_dump.empty()) {
        std::ostringstream ss;
        tc::write_filtration_csv(ss, fc);
        tc::write_text_file(pd_dump, ss.str());
      }
      std::ostringstream ss;
      tc::write_diagram_csv(ss, tc::compute_persistence(fc, {pd_keep_zero}));
      emit(pd_out, ss.str());
    } else if (bn_cmd->parsed()) {
      const auto a = tc::load_diagram_csv(bn_a);
      const auto b = tc::load_diagram_csv(bn_b);
      double d = 0.0;
      if (bn_dim == "max") {
        d = tc::diagram_distance(a, b, tc::DistanceMode::MaxOverDims);
      } else {
        d = tc::bottleneck_distance(a, b, bn_dim == "0" ? 0 : 1);
      }
      std::cout << tc::format_double(d) << '\n';
    } else if (sc_cmd->parsed()) {
      const auto g = sc_in.load();
      auto options = sc_flags.options(sc_in);
      options.include_zero_row = sc_include_zero;
      std::ostringstream ss;
      tc::write_score_csv(ss, tc::score_curve(g, options));
      emit(sc_out, ss.str());
    } else if (sel_cmd->parsed()) {
      const auto g = sel_in.load();
      const auto selection = tc::select(g, sel_flags.options(sel_in));
      tc::save_graph_json(sel_prefix + ".coarse.json", selection.coarsening.coarse,
                          &selection.coarsening.partition, &g);
      std::ostringstream scores;
      tc::write_score_csv(scores, selection.curve);
      tc::write_text_file(sel_prefix + ".scores.csv", scores.str());
      std::ostringstream orig;
      tc::write_diagram_csv(orig, selection.original_diagram);
      tc::write_text_file(sel_prefix + ".pd_orig.csv", orig.str());
      std::ostringstream reduced;
      tc::write_diagram_csv(reduced, selection.reduced_diagram);
      tc::write_text_file(sel_prefix + ".pd_reduced.csv", reduced.str());
      std::cerr << "theta*=" << tc::format_double(selection.curve.theta_star)
                << " alpha*=" << tc::format_double(selection.curve.alpha_star) << " nodes "
                << g.num_nodes() << " -> " << selection.coarsening.coarse.num_nodes() << '\n';
    } else if (feat_cmd->parsed()) {
      std::ostringstream ss;
      tc::write_features_header(ss);
      for (const auto& path : feat_inputs) {
        GraphInput in;
        in.path = path;
        in.weight = feat_weight;
        in.attribute = feat_attr;
        const auto g = in.load();
        const auto options = feat_flags.options(in);
        const auto name = std::filesystem::path(path).filename().string();
        if (feat_reduce) {
          const auto selection = tc::select(g, options);
          tc::write_features_row(ss, name,
                                 tc::extract_features(selection.coarsening.coarse, selection.reduced_diagram));
        } else {
          tc::write_features_row(ss, name, tc::extract_features(g, tc::original_diagram(g, options).original));
        }
      }
      emit(feat_out, ss.str());
    } else if (tr_cmd->parsed()) {
      const auto g = tr_in.load();
      tc::Similarity s;
      if (tr_cmd->count("--seed") > 0) {
        s = tc::random_similarity(g.dim(), tr_seed);
      } else {
        s = tc::Similarity::identity(g.dim());
        s.scale = tr_scale;
        if (tr_angle != 0.0) {
          if (g.dim() != 2) throw tc::ConfigError("--angle-deg needs a 2D graph");
          const double a = tr_angle * std::numbers::pi / 180.0;
          s.rotation << std::cos(a), -std::sin(a), std::sin(a), std::cos(a);
        }
        if (!tr_translate.empty()) {
          const auto t = parse_vector(tr_translate);
          if (t.size() != g.dim()) throw tc::ConfigError("--translate needs one value per dimension");
          for (std::size_t i = 0; i < t.size(); ++i) s.translation(static_cast<Eigen::Index>(i)) = t[i];
        }
      }
      emit(tr_out, tc::graph_to_json(tc::apply_similarity(g, s)));
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitPipeline;
  }
  return 0;
}
