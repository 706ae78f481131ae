#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "topocoarse/coarsening.hpp"
#include "topocoarse/features.hpp"
#include "topocoarse/filtration.hpp"
#include "topocoarse/persistence.hpp"
#include "topocoarse/selector.hpp"

namespace topocoarse {

/// Malformed input file. `line()` is 1-based, or 0 when unknown.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line = 0);
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Shortest decimal text that reads back to the same double; "inf" for +infinity.
std::string format_double(double x);
/// Accepts anything format_double produces. Throws ParseError.
double parse_double(std::string_view text, std::size_t line = 0);

struct LoadedGraph {
  SpatialGraph graph;
  std::vector<std::string> warnings;
};

/// JSON document:
///   {"dim": 2, "directed": false,
///    "nodes": [{"id": "a", "pos": [0.0, 0.0]}, ...],
///    "edges": [{"u": "a", "v": "b", "weight": 2.5}, ...]}
/// Node ids may be strings or integers and are renumbered 0..n-1 in document order.
/// The attribute named `weight_attribute` becomes the custom weight when every edge has it.
/// Directed documents are symmetrized; a reversed duplicate is dropped with a warning.
LoadedGraph parse_graph_json(std::string_view text, const std::string& weight_attribute = "weight");
LoadedGraph load_graph_json(const std::filesystem::path& path,
                            const std::string& weight_attribute = "weight");

/// Node file `id,x,y[,z...]` and edge file `u,v[,weight]`; header rows are optional.
LoadedGraph load_graph_csv(const std::filesystem::path& nodes_path,
                           const std::filesystem::path& edges_path);

/// Serializes the canonical JSON form. When `partition` is given, each node also lists the
/// original ids it absorbed under "members" (ignored on load).
std::string graph_to_json(const SpatialGraph& g, const NodePartition* partition = nullptr,
                          const SpatialGraph* original = nullptr);
void save_graph_json(const std::filesystem::path& path, const SpatialGraph& g,
                     const NodePartition* partition = nullptr,
                     const SpatialGraph* original = nullptr);

/// Diagram CSV: `dim,birth,death`, rows in canonical order, `inf` for essential deaths.
void write_diagram_csv(std::ostream& out, const PersistenceDiagram& pd);
PersistenceDiagram read_diagram_csv(std::istream& in);
PersistenceDiagram load_diagram_csv(const std::filesystem::path& path);

/// Score curve CSV: `theta,alpha,edge_ratio,bottleneck,score` plus a
/// `# lambda=<value> theta_star=<value>` footer.
void write_score_csv(std::ostream& out, const ScoreCurve& curve);

/// Filtration stream dump: `time,dim,v0,v1,v2` with empty cells for unused vertices.
void write_filtration_csv(std::ostream& out, const FilteredComplex& fc);

void write_features_header(std::ostream& out);
void write_features_row(std::ostream& out, std::string_view name, const FeatureVector& f);

/// Writes `content` to `path`, throwing std::runtime_error on failure.
void write_text_file(const std::filesystem::path& path, std::string_view content);
std::string read_text_file(const std::filesystem::path& path);

}  // namespace topocoarse
