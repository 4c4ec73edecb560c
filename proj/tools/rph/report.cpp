#include "report.hpp"

namespace rph::cli {

Json path_json(const TwoTerminalDag& dag, const VertexPath& path) {
  Json out = Json::array();
  for (auto v : path) out.push_back(dag.name(v));
  return out;
}

Json graph_json(const TwoTerminalDag& dag) {
  Json j;
  j["vertex_count"] = dag.vertex_count();
  j["edge_count"] = dag.edge_count();
  j["origin"] = dag.name(dag.origin());
  j["destination"] = dag.name(dag.destination());
  j["topological_order"] = dag.names();
  j["edges"] = Json::array();
  for (const auto& [u, v] : dag.named_edges()) j["edges"].push_back({u, v});
  return j;
}

Json routes_json(const ColoredRouteSimplex& simplex) {
  Json out = Json::array();
  for (std::size_t i = 0; i < simplex.routes().size(); ++i) {
    Json r;
    r["index"] = i;
    r["vertices"] = path_json(simplex.base(), simplex.routes()[i].vertices());
    out.push_back(std::move(r));
  }
  return out;
}

Json simplex_json(const ColoredRouteSimplex& simplex) {
  Json j;
  j["edge_count"] = simplex.edges().size();
  j["edges"] = Json::array();
  for (const auto& [edge, colors] : simplex.coloring()) {
    Json e;
    e["from"] = simplex.base().name(edge.from);
    e["to"] = simplex.base().name(edge.to);
    e["colors"] = colors;
    j["edges"].push_back(std::move(e));
  }
  return j;
}

Json robust_paths_json(const ColoredRouteSimplex& simplex, const std::vector<RobustPath>& paths) {
  Json out = Json::array();
  for (const auto& path : paths) {
    Json p;
    p["vertices"] = path_json(simplex.base(), path.vertices);
    p["witnesses"] = Json::array();
    for (const auto& w : path.witnesses) {
      Json wj;
      wj["triple"] = path_json(simplex.base(), {w.apex_path.begin(), w.apex_path.end()});
      wj["alpha"] = w.alpha;
      wj["beta"] = w.beta;
      p["witnesses"].push_back(std::move(wj));
    }
    out.push_back(std::move(p));
  }
  return out;
}

Json verification_json(const VerificationReport& report) {
  Json j;
  j["passed"] = report.passed;
  j["pmax"] = report.p_max;
  j["levels"] = Json::array();
  for (const auto& level : report.levels) {
    Json l;
    l["order"] = level.order;
    l["closure"] = level.closure;
    l["boundary_squared_zero"] = level.composition_zero;
    j["levels"].push_back(std::move(l));
  }
  j["counterexample"] = report.counterexample ? Json(*report.counterexample) : Json(nullptr);
  return j;
}

Json tree_json(const DecompositionTree& tree) {
  Json j;
  switch (tree.kind) {
    case DecompositionTree::Kind::Edge: j["kind"] = "edge"; break;
    case DecompositionTree::Kind::Series: j["kind"] = "series"; break;
    case DecompositionTree::Kind::Parallel: j["kind"] = "parallel"; break;
  }
  j["from"] = tree.from;
  j["to"] = tree.to;
  if (!tree.children.empty()) {
    j["children"] = Json::array();
    for (const auto& c : tree.children) j["children"].push_back(tree_json(c));
  }
  return j;
}

Json sites_json(const ColoredRouteSimplex& simplex, const std::vector<BraessSite>& sites) {
  Json out = Json::array();
  for (const auto& s : sites) {
    Json j;
    j["tuple"] = path_json(simplex.base(), {s.tuple.begin(), s.tuple.end()});
    j["source_path"] = path_json(simplex.base(), s.source_path);
    j["case"] = std::string(to_string(s.case_label));
    j["verified"] = s.verified;
    out.push_back(std::move(j));
  }
  return out;
}

Json law_report_json(const LawReport& report) {
  Json j;
  j["all_asserted_hold"] = report.all_asserted_hold();
  j["checks"] = Json::array();
  for (const auto& c : report.checks) {
    Json cj;
    cj["law"] = c.law;
    cj["order"] = c.order;
    cj["relation"] = c.relation == LawCheck::Relation::Equal ? "equal" : "contains";
    cj["combined"] = c.combined;
    cj["expected"] = c.expected;
    cj["holds"] = c.holds;
    cj["asserted"] = c.asserted;
    if (c.relation == LawCheck::Relation::Contains) cj["strict"] = c.strict;
    j["checks"].push_back(std::move(cj));
  }
  return j;
}

}  // namespace rph::cli
