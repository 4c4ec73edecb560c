#include "graph_document.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

#include "rph/error.hpp"

namespace rph::cli {

namespace {

using nlohmann::json;

[[noreturn]] void parse_error(const std::string& where, const std::string& what) {
  throw GraphError(ErrorKind::ParseError, what, {where});
}

void normalize(GraphDocument& doc) {
  std::set<std::string> seen;
  for (const auto& v : doc.vertices) {
    if (v.empty()) parse_error("vertices", "vertex names must be non-empty");
    if (!seen.insert(v).second) parse_error("vertices", "duplicate vertex name '" + v + "'");
  }
  if (!seen.contains(doc.origin)) parse_error("origin", "origin '" + doc.origin + "' is not a vertex");
  if (!seen.contains(doc.destination))
    parse_error("destination", "destination '" + doc.destination + "' is not a vertex");

  std::set<NamedEdge> edges;
  for (const auto& e : doc.edges) {
    if (!seen.contains(e.first) || !seen.contains(e.second))
      parse_error("edges", "edge " + e.first + "->" + e.second + " names an unknown vertex");
    if (e.first == e.second) throw GraphError(ErrorKind::SelfLoop, "self-loop", {e.first + "->" + e.second});
    if (!edges.insert(e).second)
      throw GraphError(ErrorKind::DuplicateEdge, "edge listed twice", {e.first + "->" + e.second});
  }
  std::sort(doc.vertices.begin(), doc.vertices.end());
  doc.edges.assign(edges.begin(), edges.end());
}

GraphDocument parse_json(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    parse_error("byte " + std::to_string(e.byte), e.what());
  }
  if (!j.is_object()) parse_error("$", "top level must be an object");
  GraphDocument doc;
  auto string_field = [&](const char* key) {
    if (!j.contains(key) || !j[key].is_string()) parse_error(key, std::string("missing or non-string field '") + key + "'");
    return j[key].get<std::string>();
  };
  doc.origin = string_field("origin");
  doc.destination = string_field("destination");
  if (!j.contains("vertices") || !j["vertices"].is_array()) parse_error("vertices", "missing or non-array field 'vertices'");
  for (std::size_t i = 0; i < j["vertices"].size(); ++i) {
    const auto& v = j["vertices"][i];
    if (!v.is_string()) parse_error("vertices[" + std::to_string(i) + "]", "vertex must be a string");
    doc.vertices.push_back(v.get<std::string>());
  }
  if (!j.contains("edges") || !j["edges"].is_array()) parse_error("edges", "missing or non-array field 'edges'");
  for (std::size_t i = 0; i < j["edges"].size(); ++i) {
    const auto& e = j["edges"][i];
    if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string())
      parse_error("edges[" + std::to_string(i) + "]", "edge must be a pair of strings");
    doc.edges.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
  }
  normalize(doc);
  return doc;
}

GraphDocument parse_edge_list(std::string_view text) {
  GraphDocument doc;
  std::set<std::string> names;
  bool have_origin = false, have_destination = false;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto where = "line " + std::to_string(line_no);
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream tokens(line);
    std::vector<std::string> words;
    for (std::string w; tokens >> w;) words.push_back(w);
    if (words.empty()) continue;
    if (words[0] == "@origin" || words[0] == "@destination") {
      if (words.size() != 2) parse_error(where, "directive takes exactly one vertex");
      auto& slot = words[0] == "@origin" ? doc.origin : doc.destination;
      auto& flag = words[0] == "@origin" ? have_origin : have_destination;
      if (flag) parse_error(where, "repeated " + words[0] + " directive");
      flag = true;
      slot = words[1];
      names.insert(words[1]);
      continue;
    }
    if (words[0].starts_with('@')) parse_error(where, "unknown directive " + words[0]);
    if (words.size() != 2) parse_error(where, "expected 'from to'");
    if (words[0] == words[1]) throw GraphError(ErrorKind::SelfLoop, "self-loop", {where, words[0] + "->" + words[1]});
    names.insert(words[0]);
    names.insert(words[1]);
    doc.edges.emplace_back(words[0], words[1]);
  }
  if (!have_origin) parse_error("@origin", "missing @origin directive");
  if (!have_destination) parse_error("@destination", "missing @destination directive");
  doc.vertices.assign(names.begin(), names.end());
  normalize(doc);
  return doc;
}

}  // namespace

GraphDocument parse_graph(std::string_view text, InputFormat format) {
  return format == InputFormat::Json ? parse_json(text) : parse_edge_list(text);
}

GraphDocument load_graph(const std::filesystem::path& path, InputFormat format) {
  std::ifstream in(path, std::ios::binary);
  if (!in) parse_error(path.string(), "cannot open file");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_graph(buffer.str(), format);
}

std::string serialize(const GraphDocument& doc, InputFormat format) {
  if (format == InputFormat::Json) {
    nlohmann::ordered_json j;
    j["vertices"] = doc.vertices;
    j["edges"] = nlohmann::ordered_json::array();
    for (const auto& [u, v] : doc.edges) j["edges"].push_back({u, v});
    j["origin"] = doc.origin;
    j["destination"] = doc.destination;
    return j.dump(2) + "\n";
  }
  std::string out = "@origin " + doc.origin + "\n@destination " + doc.destination + "\n";
  for (const auto& [u, v] : doc.edges) out += u + " " + v + "\n";
  return out;
}

GraphDocument document_of(const TwoTerminalDag& dag) {
  GraphDocument doc;
  doc.vertices = dag.names();
  doc.edges = dag.named_edges();
  doc.origin = dag.name(dag.origin());
  doc.destination = dag.name(dag.destination());
  std::sort(doc.vertices.begin(), doc.vertices.end());
  std::sort(doc.edges.begin(), doc.edges.end());
  return doc;
}

}  // namespace rph::cli
