#include "app.hpp"

#include <CLI11.hpp>

namespace rph::cli {

std::string_view command_name(Command command) {
  switch (command) {
    case Command::Validate: return "validate";
    case Command::Routes: return "routes";
    case Command::Simplex: return "simplex";
    case Command::Robust: return "robust";
    case Command::Chains: return "chains";
    case Command::VerifyComplex: return "verify-complex";
    case Command::SpCheck: return "sp-check";
    case Command::Braess: return "braess";
    case Command::Compose: return "compose";
    case Command::Analyze: return "analyze";
  }
  return "unknown";
}

namespace {

struct Built {
  TwoTerminalDag dag;
  Json warnings = Json::array();
};

Built build_document(const GraphDocument& doc, BuildMode mode) {
  auto result = build_two_terminal(doc.vertices, doc.edges, doc.origin, doc.destination, mode);
  Built built{std::move(result.dag)};
  for (const auto& v : result.pruned_vertices) built.warnings.push_back("pruned vertex " + v);
  for (const auto& [u, v] : result.pruned_edges) built.warnings.push_back("pruned edge " + u + "->" + v);
  return built;
}

Json chains_section(const ColoredRouteSimplex& simplex, std::size_t p_max, TriangleSemantics semantics) {
  const auto dims = chain_dimensions(simplex, p_max, semantics);
  const auto betti = betti_numbers(simplex, p_max, semantics);
  long long chi_chains = 0, chi_betti = 0;
  for (std::size_t p = 0; p <= p_max; ++p) {
    const long long sign = p % 2 == 0 ? 1 : -1;
    chi_chains += sign * static_cast<long long>(dims[p]);
    chi_betti += sign * static_cast<long long>(betti[p]);
  }
  Json j;
  j["pmax"] = p_max;
  j["dimensions"] = dims;
  j["betti"] = betti;
  j["euler_characteristic"] = {{"chains", chi_chains}, {"betti", chi_betti}};
  return j;
}

struct SpVerdict {
  Json json;
  bool agree = true;
};

SpVerdict sp_section(const TwoTerminalDag& dag, const ColoredRouteSimplex& simplex, const Options& options) {
  const auto tree = recognize_series_parallel(dag, options.route_cap);
  const bool homology = is_sp_via_homology(simplex, options.semantics);
  SpVerdict v;
  v.agree = homology == tree.has_value();
  v.json["sp_verdict"] = homology && tree.has_value();
  v.json["homology_verdict"] = homology;
  v.json["reduction_verdict"] = tree.has_value();
  v.json["agree"] = v.agree;
  v.json["decomposition"] = tree ? tree_json(*tree) : Json(nullptr);
  if (tree) v.json["decomposition_depth"] = tree->depth();
  return v;
}

RunResult execute(const Request& request, const GraphDocument& document, const GraphDocument* second) {
  RunResult result;
  auto& report = result.report;
  report["command"] = std::string(command_name(request.command));
  report["status"] = "ok";
  const auto& opt = request.options;

  if (request.command == Command::Compose) {
    if (!second) throw GraphError(ErrorKind::InvalidInput, "compose needs two graphs");
    const auto left = build_document(document, opt.mode);
    const auto right = build_document(*second, opt.mode);
    Json warnings = left.warnings;
    for (const auto& w : right.warnings) warnings.push_back(w);
    const bool series = request.op == ComposeOp::Series;
    const auto combined = series ? series_combine(left.dag, right.dag) : parallel_combine(left.dag, right.dag);
    const auto laws = series ? check_series_dimension_laws(left.dag, right.dag, opt.route_cap, opt.semantics)
                             : check_parallel_dimension_laws(left.dag, right.dag, opt.route_cap, opt.semantics);
    report["operation"] = series ? "series" : "parallel";
    report["graph"] = graph_json(combined);
    report["document"] = Json::parse(serialize(document_of(combined), InputFormat::Json));
    report["laws"] = law_report_json(laws);
    for (const auto& c : laws.checks) {
      if (!c.asserted)
        warnings.push_back("observation " + c.law + ": dim Omega_" + std::to_string(c.order) + " of the combination is " +
                           std::to_string(c.combined) + ", component sum is " + std::to_string(c.expected));
    }
    report["warnings"] = warnings;
    if (!laws.all_asserted_hold()) result.exit_code = kExitInvariant;
    return result;
  }

  const auto built = build_document(document, opt.mode);
  const auto& dag = built.dag;
  Json warnings = built.warnings;

  if (request.command == Command::Validate) {
    report["graph"] = graph_json(dag);
    report["warnings"] = warnings;
    return result;
  }

  const auto simplex = colored_route_simplex(dag, opt.route_cap);
  auto p_max_or_top = [&] { return request.p_max ? *request.p_max : max_robust_order(simplex, opt.semantics); };

  switch (request.command) {
    case Command::Routes:
      report["route_count"] = simplex.routes().size();
      report["routes"] = routes_json(simplex);
      break;
    case Command::Simplex:
      report["routes"] = routes_json(simplex);
      report["simplex"] = simplex_json(simplex);
      break;
    case Command::Robust: {
      const auto paths = robust_paths(simplex, request.p, opt.semantics);
      report["order"] = request.p;
      report["count"] = paths.size();
      report["robust_paths"] = robust_paths_json(simplex, paths);
      break;
    }
    case Command::Chains:
      report["chains"] = chains_section(simplex, p_max_or_top(), opt.semantics);
      break;
    case Command::VerifyComplex: {
      const auto v = verify_complex(simplex, p_max_or_top(), opt.semantics);
      report["verification"] = verification_json(v);
      if (!v.passed) result.exit_code = kExitInvariant;
      break;
    }
    case Command::SpCheck: {
      auto sp = sp_section(dag, simplex, opt);
      report["series_parallel"] = sp.json;
      if (!sp.agree) result.exit_code = kExitInvariant;
      break;
    }
    case Command::Braess: {
      const auto sites = braess_sites(simplex, opt.semantics);
      report["braess_sites"] = sites_json(simplex, sites);
      for (const auto& s : sites)
        if (!s.verified) warnings.push_back("braess site " + path_json(dag, {s.tuple.begin(), s.tuple.end()}).dump() +
                                            " failed embedding verification");
      break;
    }
    case Command::Analyze: {
      const auto top = max_robust_order(simplex, opt.semantics);
      const auto p_max = request.p_max.value_or(top);
      report["graph"] = graph_json(dag);
      report["routes"] = routes_json(simplex);
      report["simplex"] = simplex_json(simplex);
      report["max_robust_order"] = top;
      Json robust = Json::array();
      const auto levels = robust_levels(simplex, top, opt.semantics);
      for (std::size_t p = 2; p < levels.size(); ++p) {
        if (levels[p].empty()) continue;
        Json level;
        level["order"] = p;
        level["count"] = levels[p].size();
        level["paths"] = robust_paths_json(simplex, levels[p]);
        robust.push_back(std::move(level));
      }
      report["robust_paths"] = robust;
      report["chains"] = chains_section(simplex, p_max, opt.semantics);
      const auto v = verify_complex(simplex, p_max, opt.semantics);
      report["verification"] = verification_json(v);
      auto sp = sp_section(dag, simplex, opt);
      report["series_parallel"] = sp.json;
      const auto sites = braess_sites(simplex, opt.semantics);
      report["braess_sites"] = sites_json(simplex, sites);
      for (const auto& s : sites)
        if (!s.verified) warnings.push_back("braess site " + path_json(dag, {s.tuple.begin(), s.tuple.end()}).dump() +
                                            " failed embedding verification");
      if (!sp.agree) warnings.push_back("series-parallel verdicts disagree");
      if (!v.passed || !sp.agree) result.exit_code = kExitInvariant;
      break;
    }
    case Command::Validate:
    case Command::Compose:
      break;
  }
  report["warnings"] = warnings;
  return result;
}

}  // namespace

RunResult run(const Request& request, const GraphDocument& document, const GraphDocument* second) {
  try {
    return execute(request, document, second);
  } catch (const GraphError& e) {
    RunResult failed;
    failed.report["command"] = std::string(command_name(request.command));
    failed.report["status"] = "error";
    failed.report["error"] = {{"kind", std::string(to_string(e.kind()))}, {"message", e.what()}, {"items", e.items()}};
    failed.exit_code = e.kind() == ErrorKind::ClosureViolation ? kExitInvariant : kExitValidation;
    return failed;
  }
}

int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Robust-path chain complexes and series-parallel analysis of two-terminal DAGs", "rph"};
  app.require_subcommand(1);
  app.fallthrough();

  Request request;
  std::string mode = "strict", format = "json", semantics = "literal";
  app.add_option("--mode", mode, "strict rejects vertices/edges off every route; prune drops them")
      ->check(CLI::IsMember({"strict", "prune"}));
  app.add_option("--route-cap", request.options.route_cap, "maximum number of routes to enumerate")
      ->check(CLI::PositiveNumber);
  app.add_option("--format", format, "input format")->check(CLI::IsMember({"json", "edgelist"}));
  app.add_option("--triangle-semantics", semantics, "evading test against all of beta or beta's segment")
      ->check(CLI::IsMember({"literal", "segment"}));

  std::string file, second_file;
  std::string op = "series";
  std::size_t p = 2, p_max = 0;

  auto add = [&](Command c, const std::string& help) {
    auto* sub = app.add_subcommand(std::string(command_name(c)), help);
    sub->callback([&request, c] { request.command = c; });
    if (c != Command::Compose) sub->add_option("file", file, "graph file")->required();
    return sub;
  };
  add(Command::Validate, "validate the graph and print its canonical form");
  add(Command::Routes, "enumerate origin-destination routes");
  add(Command::Simplex, "colored route simplex");
  add(Command::Robust, "robust p-paths with witnesses")->add_option("--p", p, "path order (>= 2)")->required();
  CLI::Option* pmax_chains = add(Command::Chains, "chain dimensions and Betti numbers")->add_option("--pmax", p_max);
  CLI::Option* pmax_verify = add(Command::VerifyComplex, "check closure and boundary-squared-zero")->add_option("--pmax", p_max);
  add(Command::SpCheck, "series-parallel verdict by homology and by decomposition");
  add(Command::Braess, "Braess-susceptible sites");
  auto* compose = add(Command::Compose, "series or parallel combination of two graphs with dimension laws");
  compose->add_option("--op", op, "series | parallel")->required()->check(CLI::IsMember({"series", "parallel"}));
  compose->add_option("first", file, "first graph file")->required();
  compose->add_option("second", second_file, "second graph file")->required();
  CLI::Option* pmax_analyze = add(Command::Analyze, "run the whole pipeline")->add_option("--pmax", p_max);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitValidation;
  }

  request.options.mode = mode == "prune" ? BuildMode::Prune : BuildMode::Strict;
  request.options.format = format == "edgelist" ? InputFormat::EdgeList : InputFormat::Json;
  request.options.semantics = semantics == "segment" ? TriangleSemantics::Segment : TriangleSemantics::Literal;
  request.p = p;
  request.op = op == "parallel" ? ComposeOp::Parallel : ComposeOp::Series;
  for (auto* o : {pmax_chains, pmax_verify, pmax_analyze})
    if (o->count() > 0) request.p_max = p_max;

  RunResult result;
  try {
    const auto doc = load_graph(file, request.options.format);
    std::optional<GraphDocument> other;
    if (request.command == Command::Compose) other = load_graph(second_file, request.options.format);
    result = run(request, doc, other ? &*other : nullptr);
  } catch (const GraphError& e) {
    result.report["command"] = std::string(command_name(request.command));
    result.report["status"] = "error";
    result.report["error"] = {{"kind", std::string(to_string(e.kind()))}, {"message", e.what()}, {"items", e.items()}};
    result.exit_code = kExitValidation;
  }
  out << result.report.dump(2) << "\n";
  if (result.report["status"] == "error") err << "rph: " << result.report["error"]["message"].get<std::string>() << "\n";
  else if (result.exit_code == kExitInvariant) err << "rph: internal invariant violated; see report\n";
  return result.exit_code;
}

}  // namespace rph::cli
