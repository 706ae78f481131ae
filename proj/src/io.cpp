#include "topocoarse/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <unordered_map>

#include <json.hpp>

namespace topocoarse {

using nlohmann::json;

ParseError::ParseError(const std::string& what, std::size_t line)
    : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
      line_(line) {}

std::string format_double(double x) {
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  if (std::isnan(x)) return "nan";
  char buf[64];
  const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return {buf, end};
}

double parse_double(std::string_view text, std::size_t line) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text == "inf" || text == "+inf" || text == "infinity") return kInfinity;
  if (text == "-inf") return -kInfinity;
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty()) {
    throw ParseError("expected a number, got '" + std::string(text) + "'", line);
  }
  return value;
}

namespace {

bool is_canonical_integer(const std::string& s) {
  if (s.empty() || s.size() > 18) return false;
  std::size_t i = s[0] == '-' ? 1 : 0;
  if (i == s.size()) return false;
  if (s[i] == '0') return s.size() == i + 1 && i == 0;
  return std::all_of(s.begin() + static_cast<long>(i), s.end(),
                     [](char c) { return c >= '0' && c <= '9'; });
}

std::string id_to_label(const json& id, const char* what) {
  if (id.is_number_integer()) return std::to_string(id.get<long long>());
  if (id.is_string()) return id.get<std::string>();
  throw ParseError(std::string(what) + " must be a string or an integer, got " + id.dump());
}

json label_to_id(const std::string& label) {
  if (is_canonical_integer(label)) return std::stoll(label);
  return label;
}

struct RawEdge {
  std::string u;
  std::string v;
  std::optional<double> weight;
  std::size_t line;
};

LoadedGraph assemble(std::size_t dim, std::vector<std::string> labels, std::vector<double> positions,
                     std::vector<RawEdge> raw, bool directed, const std::string& attribute) {
  std::vector<std::string> warnings;
  std::unordered_map<std::string, NodeId> index;
  std::vector<std::string> violations;
  for (NodeId i = 0; i < labels.size(); ++i) {
    if (!index.emplace(labels[i], i).second) violations.push_back("duplicate node id '" + labels[i] + "'");
  }

  GraphParts parts;
  parts.dim = dim;
  parts.positions = std::move(positions);
  parts.labels = std::move(labels);
  std::vector<double> weights;
  std::size_t weighted = 0;
  std::set<std::pair<NodeId, NodeId>> seen;
  for (const auto& e : raw) {
    const auto iu = index.find(e.u);
    const auto iv = index.find(e.v);
    if (iu == index.end() || iv == index.end()) {
      violations.push_back("edge endpoint refers to unknown node id '" +
                           (iu == index.end() ? e.u : e.v) + "'" +
                           (e.line ? " (line " + std::to_string(e.line) + ")" : ""));
      continue;
    }
    if (directed && iu->second != iv->second) {
      if (seen.count({iv->second, iu->second}) > 0) {
        warnings.push_back("directed edge " + e.u + "->" + e.v +
                               " merged with its reverse; graph treated as undirected");
        continue;
      }
      seen.emplace(iu->second, iv->second);
    }
    parts.edges.push_back({iu->second, iv->second});
    weights.push_back(e.weight.value_or(std::nan("")));
    if (e.weight) ++weighted;
  }
  if (!violations.empty()) throw ValidationError(std::move(violations));

  if (weighted == parts.edges.size() && weighted > 0) {
    parts.custom_weights = std::move(weights);
  } else if (weighted > 0) {
    warnings.push_back("edge attribute '" + attribute + "' present on only " +
                           std::to_string(weighted) + " of " + std::to_string(parts.edges.size()) +
                           " edges; ignored");
  }
  return {SpatialGraph(std::move(parts)), std::move(warnings)};
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> out;
  std::string cell;
  std::istringstream ss(line);
  while (std::getline(ss, cell, ',')) {
    const auto b = cell.find_first_not_of(" \t\r");
    const auto e = cell.find_last_not_of(" \t\r");
    out.push_back(b == std::string::npos ? "" : cell.substr(b, e - b + 1));
  }
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

bool looks_numeric(const std::string& s) {
  try {
    parse_double(s);
    return true;
  } catch (const ParseError&) {
    return false;
  }
}

// Reads non-empty, non-comment lines with their 1-based line numbers.
std::vector<std::pair<std::size_t, std::vector<std::string>>> read_csv_rows(
    const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  std::vector<std::pair<std::size_t, std::vector<std::string>>> rows;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos || line.front() == '#') continue;
    rows.emplace_back(number, split_csv(line));
  }
  return rows;
}

}  // namespace

LoadedGraph parse_graph_json(std::string_view text, const std::string& weight_attribute) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  try {
    if (!doc.is_object()) throw ParseError("graph document must be a JSON object");
    const auto dim = doc.at("dim").get<std::size_t>();
    const bool directed = doc.value("directed", false);
    const auto& nodes = doc.at("nodes");
    std::vector<std::string> labels;
    std::vector<double> positions;
    for (const auto& node : nodes) {
      labels.push_back(id_to_label(node.at("id"), "node id"));
      const auto& pos = node.at("pos");
      if (!pos.is_array() || pos.size() != dim) {
        throw ParseError("node '" + labels.back() + "' has " + std::to_string(pos.size()) +
                         " coordinates, expected " + std::to_string(dim));
      }
      for (const auto& x : pos) positions.push_back(x.get<double>());
    }
    std::vector<RawEdge> raw;
    if (doc.contains("edges")) {
      for (const auto& edge : doc.at("edges")) {
        RawEdge e{id_to_label(edge.at("u"), "edge endpoint"),
                  id_to_label(edge.at("v"), "edge endpoint"), std::nullopt, 0};
        if (edge.contains(weight_attribute) && !edge.at(weight_attribute).is_null()) {
          e.weight = edge.at(weight_attribute).get<double>();
        }
        raw.push_back(std::move(e));
      }
    }
    return assemble(dim, std::move(labels), std::move(positions), std::move(raw), directed,
                    weight_attribute);
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid graph document: ") + e.what());
  }
}

LoadedGraph load_graph_json(const std::filesystem::path& path, const std::string& weight_attribute) {
  return parse_graph_json(read_text_file(path), weight_attribute);
}

LoadedGraph load_graph_csv(const std::filesystem::path& nodes_path,
                           const std::filesystem::path& edges_path) {
  auto node_rows = read_csv_rows(nodes_path);
  if (!node_rows.empty() && node_rows.front().second.size() >= 2 &&
      !looks_numeric(node_rows.front().second[1])) {
    node_rows.erase(node_rows.begin());
  }
  if (node_rows.empty()) throw ParseError("node file " + nodes_path.string() + " has no rows");
  const std::size_t columns = node_rows.front().second.size();
  if (columns < 2) throw ParseError("node rows need an id and at least one coordinate", node_rows.front().first);
  const std::size_t dim = columns - 1;

  std::vector<std::string> labels;
  std::vector<double> positions;
  for (const auto& [line, cells] : node_rows) {
    if (cells.size() != columns) {
      throw ParseError("expected " + std::to_string(columns) + " fields, got " +
                       std::to_string(cells.size()),
                       line);
    }
    labels.push_back(cells[0]);
    for (std::size_t d = 1; d < columns; ++d) positions.push_back(parse_double(cells[d], line));
  }

  auto edge_rows = read_csv_rows(edges_path);
  std::string attribute = "weight";
  if (!edge_rows.empty() && edge_rows.front().second.size() >= 3 &&
      !looks_numeric(edge_rows.front().second[2])) {
    attribute = edge_rows.front().second[2];
    edge_rows.erase(edge_rows.begin());
  } else if (!edge_rows.empty() && edge_rows.front().second.size() == 2 &&
             edge_rows.front().second == std::vector<std::string>{"u", "v"}) {
    edge_rows.erase(edge_rows.begin());
  }
  std::vector<RawEdge> raw;
  for (const auto& [line, cells] : edge_rows) {
    if (cells.size() != 2 && cells.size() != 3) {
      throw ParseError("edge rows need 2 or 3 fields, got " + std::to_string(cells.size()), line);
    }
    RawEdge e{cells[0], cells[1], std::nullopt, line};
    if (cells.size() == 3 && !cells[2].empty()) e.weight = parse_double(cells[2], line);
    raw.push_back(std::move(e));
  }
  return assemble(dim, std::move(labels), std::move(positions), std::move(raw), false, attribute);
}

std::string graph_to_json(const SpatialGraph& g, const NodePartition* partition,
                          const SpatialGraph* original) {
  json doc;
  doc["dim"] = g.dim();
  json nodes = json::array();
  for (NodeId v = 0; v < g.num_nodes(); ++v) {
    json node;
    node["id"] = label_to_id(g.label(v));
    const auto pos = g.position(v);
    node["pos"] = std::vector<double>(pos.begin(), pos.end());
    if (partition != nullptr) {
      json members = json::array();
      for (const NodeId m : partition->blocks[v]) {
        members.push_back(label_to_id(original != nullptr ? original->label(m) : std::to_string(m)));
      }
      node["members"] = std::move(members);
    }
    nodes.push_back(std::move(node));
  }
  doc["nodes"] = std::move(nodes);
  json edges = json::array();
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    json edge;
    edge["u"] = label_to_id(g.label(g.edge(e).u));
    edge["v"] = label_to_id(g.label(g.edge(e).v));
    if (g.has_custom_weights()) edge["weight"] = (*g.custom_weights())[e];
    edges.push_back(std::move(edge));
  }
  doc["edges"] = std::move(edges);
  return doc.dump(1) + "\n";
}

void save_graph_json(const std::filesystem::path& path, const SpatialGraph& g,
                     const NodePartition* partition, const SpatialGraph* original) {
  write_text_file(path, graph_to_json(g, partition, original));
}

void write_diagram_csv(std::ostream& out, const PersistenceDiagram& pd) {
  out << "dim,birth,death\n";
  for (const auto& p : pd.points) {
    out << p.dim << ',' << format_double(p.birth) << ',' << format_double(p.death) << '\n';
  }
}

PersistenceDiagram read_diagram_csv(std::istream& in) {
  PersistenceDiagram pd;
  std::string line;
  std::size_t number = 0;
  bool header_seen = false;
  while (std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos || line.front() == '#') continue;
    const auto cells = split_csv(line);
    if (!header_seen) {
      header_seen = true;
      if (cells == std::vector<std::string>{"dim", "birth", "death"}) continue;
    }
    if (cells.size() != 3) throw ParseError("diagram rows need 3 fields", number);
    PersistencePoint p;
    const double dim = parse_double(cells[0], number);
    if (dim != 0.0 && dim != 1.0) throw ParseError("dimension must be 0 or 1", number);
    p.dim = static_cast<int>(dim);
    p.birth = parse_double(cells[1], number);
    p.death = parse_double(cells[2], number);
    if (!std::isfinite(p.birth) || std::isnan(p.death) || p.death < p.birth) {
      throw ParseError("point must satisfy finite birth <= death", number);
    }
    if (p.dim == 0 && p.essential()) ++pd.essential_count_dim0;
    pd.points.push_back(p);
  }
  std::sort(pd.points.begin(), pd.points.end(), point_less);
  return pd;
}

PersistenceDiagram load_diagram_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  return read_diagram_csv(in);
}

void write_score_csv(std::ostream& out, const ScoreCurve& curve) {
  out << "theta,alpha,edge_ratio,bottleneck,score\n";
  for (const auto& r : curve.rows) {
    out << format_double(r.theta) << ',' << format_double(r.alpha) << ','
        << format_double(r.edge_ratio) << ',' << format_double(r.bottleneck) << ','
        << format_double(r.score) << '\n';
  }
  out << "# lambda=" << (curve.lambda ? format_double(*curve.lambda) : std::string("disabled"))
      << " theta_star=" << format_double(curve.theta_star) << '\n';
}

void write_filtration_csv(std::ostream& out, const FilteredComplex& fc) {
  out << "time,dim,v0,v1,v2\n";
  for (const auto& s : fc.simplices) {
    out << format_double(s.time) << ',' << int{s.dim};
    for (int k = 0; k < 3; ++k) {
      out << ',';
      if (k <= s.dim) out << s.vertices[k];
    }
    out << '\n';
  }
}

void write_features_header(std::ostream& out) {
  out << "graph";
  for (const auto name : kFeatureNames) out << ',' << name;
  out << '\n';
}

void write_features_row(std::ostream& out, std::string_view name, const FeatureVector& f) {
  out << name << ',' << f.n_components << ',' << format_double(f.mean_pers_1) << ','
      << format_double(f.max_pers_1) << ',' << format_double(f.total_pers_1) << ','
      << format_double(f.mean_birth_1) << ',' << format_double(f.mean_death_1) << ','
      << format_double(f.landscape_l2) << ',' << f.n_degree1_nodes << '\n';
}

void write_text_file(const std::filesystem::path& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!out) throw std::runtime_error("failed writing " + path.string());
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace topocoarse
