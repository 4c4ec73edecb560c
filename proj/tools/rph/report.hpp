#pragma once

#include <optional>
#include <vector>

#include "json.hpp"
#include "rph/rph.hpp"

namespace rph::cli {

using Json = nlohmann::ordered_json;

Json graph_json(const TwoTerminalDag& dag);
Json routes_json(const ColoredRouteSimplex& simplex);
Json simplex_json(const ColoredRouteSimplex& simplex);
Json robust_paths_json(const ColoredRouteSimplex& simplex, const std::vector<RobustPath>& paths);
Json verification_json(const VerificationReport& report);
Json tree_json(const DecompositionTree& tree);
Json sites_json(const ColoredRouteSimplex& simplex, const std::vector<BraessSite>& sites);
Json law_report_json(const LawReport& report);
Json path_json(const TwoTerminalDag& dag, const VertexPath& path);

}  // namespace rph::cli
