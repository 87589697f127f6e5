#include "bergman/io.hpp"

#include <fstream>
#include <ostream>
#include <sstream>
#include <unordered_map>

#include <json.hpp>

namespace bergman {

namespace {

std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(line);
  }
  while (!lines.empty() && trim(lines.back()).empty()) lines.pop_back();
  return lines;
}

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = line.find(',', start);
    if (comma == std::string::npos) {
      fields.push_back(trim(line.substr(start)));
      break;
    }
    fields.push_back(trim(line.substr(start, comma - start)));
    start = comma + 1;
  }
  return fields;
}

std::vector<std::string> string_list(const nlohmann::json& j,
                                     const std::string& what) {
  if (!j.is_array()) throw ParseError(what + " must be an array of strings");
  std::vector<std::string> out;
  for (const auto& item : j) {
    if (!item.is_string())
      throw ParseError(what + " must be an array of strings");
    out.push_back(item.get<std::string>());
  }
  return out;
}

const nlohmann::json& require_field(const nlohmann::json& j,
                                    const std::string& key) {
  auto it = j.find(key);
  if (it == j.end()) throw ParseError("missing field \"" + key + "\"");
  return *it;
}

}  // namespace

Matroid parse_matroid_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ParseError("matroid file must be a JSON object");
  const auto& type = require_field(j, "type");
  if (!type.is_string()) throw ParseError("\"type\" must be a string");
  std::string kind = type.get<std::string>();

  if (kind == "uniform") {
    auto elements = string_list(require_field(j, "elements"), "\"elements\"");
    const auto& rank = require_field(j, "rank");
    if (!rank.is_number_integer())
      throw ParseError("\"rank\" must be an integer");
    return Matroid::uniform(std::move(elements), rank.get<int>());
  }
  if (kind == "graphic") {
    auto vertices = string_list(require_field(j, "vertices"), "\"vertices\"");
    const auto& edges_json = require_field(j, "edges");
    if (!edges_json.is_array()) throw ParseError("\"edges\" must be an array");
    std::vector<GraphEdge> edges;
    for (const auto& e : edges_json) {
      if (!e.is_object()) throw ParseError("each edge must be an object");
      const auto& id = require_field(e, "id");
      if (!id.is_string()) throw ParseError("edge \"id\" must be a string");
      auto ends = string_list(require_field(e, "ends"), "edge \"ends\"");
      if (ends.size() != 2)
        throw ParseError("edge \"ends\" must list two vertices");
      edges.push_back(GraphEdge{id.get<std::string>(), ends[0], ends[1]});
    }
    return Matroid::graphic(std::move(vertices), std::move(edges));
  }
  if (kind == "bases") {
    auto elements = string_list(require_field(j, "elements"), "\"elements\"");
    const auto& bases_json = require_field(j, "bases");
    if (!bases_json.is_array()) throw ParseError("\"bases\" must be an array");
    std::vector<std::vector<std::string>> bases;
    for (const auto& b : bases_json)
      bases.push_back(string_list(b, "each basis"));
    return Matroid::from_bases(std::move(elements), bases);
  }
  throw ParseError("unknown matroid type \"" + kind +
                   "\" (expected uniform, graphic, or bases)");
}

Matroid load_matroid_file(const std::string& path) {
  return parse_matroid_json(read_file(path));
}

WeightVector parse_weights_csv(const std::string& text, const Matroid& m) {
  auto lines = split_lines(text);
  if (lines.empty() || split_fields(lines[0]) !=
                           std::vector<std::string>{"element", "weight"})
    throw ParseError("weight CSV must start with header \"element,weight\"");
  std::unordered_map<std::string, Rat> seen;
  for (std::size_t k = 1; k < lines.size(); ++k) {
    if (trim(lines[k]).empty()) continue;
    auto fields = split_fields(lines[k]);
    if (fields.size() != 2)
      throw ParseError("weight CSV row " + std::to_string(k + 1) +
                       " needs exactly two fields");
    if (!m.ground().index_of(fields[0]))
      throw ParseError("weight CSV names unknown element '" + fields[0] + "'");
    if (!seen.emplace(fields[0], parse_rat(fields[1])).second)
      throw ParseError("weight CSV repeats element '" + fields[0] + "'");
  }
  WeightVector w;
  for (const auto& label : m.ground().labels()) {
    auto it = seen.find(label);
    if (it == seen.end())
      throw ParseError("weight CSV is missing element '" + label + "'");
    w.push_back(it->second);
  }
  return w;
}

WeightVector load_weights_file(const std::string& path, const Matroid& m) {
  return parse_weights_csv(read_file(path), m);
}

void write_weights_csv(std::ostream& out, const Matroid& m,
                       const WeightVector& w) {
  m.check_weights(w);
  out << "element,weight\n";
  for (int e = 0; e < m.size(); ++e)
    out << m.ground().label(e) << "," << format_rat(w[e]) << "\n";
}

DissimilarityMap parse_distance_csv(const std::string& text) {
  auto lines = split_lines(text);
  if (lines.empty()) throw ParseError("distance CSV is empty");
  auto header = split_fields(lines[0]);
  if (header.size() < 2 || !header[0].empty())
    throw ParseError(
        "distance CSV header must be an empty corner cell followed by taxa");
  std::vector<std::string> taxa(header.begin() + 1, header.end());
  int n = static_cast<int>(taxa.size());
  if (static_cast<int>(lines.size()) != n + 1)
    throw ParseError("distance CSV needs one row per taxon");

  DissimilarityMap d(taxa);
  std::vector<std::vector<Rat>> cells(n, std::vector<Rat>(n));
  for (int i = 0; i < n; ++i) {
    auto fields = split_fields(lines[i + 1]);
    if (static_cast<int>(fields.size()) != n + 1)
      throw ParseError("distance CSV row '" + lines[i + 1] +
                       "' has the wrong number of cells");
    if (fields[0] != taxa[i])
      throw ParseError("distance CSV row labels must match the header order");
    for (int jj = 0; jj < n; ++jj) cells[i][jj] = parse_rat(fields[jj + 1]);
  }
  for (int i = 0; i < n; ++i) {
    if (cells[i][i] != 0)
      throw ValidationError("distance CSV has a nonzero diagonal entry for '" +
                            taxa[i] + "'");
    for (int jj = i + 1; jj < n; ++jj) {
      if (cells[i][jj] != cells[jj][i])
        throw ValidationError("distance CSV is not symmetric at ('" +
                              taxa[i] + "', '" + taxa[jj] + "')");
      d.set(i, jj, cells[i][jj]);
    }
  }
  return d;
}

DissimilarityMap load_distance_file(const std::string& path) {
  return parse_distance_csv(read_file(path));
}

void write_distance_csv(std::ostream& out, const DissimilarityMap& d) {
  for (const auto& t : d.taxa()) out << "," << t;
  out << "\n";
  for (int i = 0; i < d.size(); ++i) {
    out << d.taxa()[i];
    for (int j = 0; j < d.size(); ++j) out << "," << format_rat(d.at(i, j));
    out << "\n";
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace bergman
