#include "rph/route_simplex.hpp"

#include <algorithm>

namespace rph {

std::vector<SimplexEdge> route_simplex_of(const Route& route) {
  const auto& vs = route.vertices();
  std::vector<SimplexEdge> edges;
  edges.reserve(vs.size() * (vs.size() - 1) / 2);
  for (std::size_t a = 0; a < vs.size(); ++a)
    for (std::size_t b = a + 1; b < vs.size(); ++b) edges.push_back({vs[a], vs[b]});
  std::sort(edges.begin(), edges.end());
  return edges;
}

ColoredRouteSimplex::ColoredRouteSimplex(TwoTerminalDag base, std::vector<Route> routes)
    : base_(std::move(base)), routes_(std::move(routes)), successors_(base_.vertex_count()) {
  for (RouteIndex c = 0; c < routes_.size(); ++c) {
    const auto& vs = routes_[c].vertices();
    for (std::size_t a = 0; a < vs.size(); ++a)
      for (std::size_t b = a + 1; b < vs.size(); ++b) coloring_[{vs[a], vs[b]}].push_back(c);
  }
  edges_.reserve(coloring_.size());
  for (const auto& [edge, colors] : coloring_) {
    edges_.push_back(edge);
    successors_[edge.from].push_back(edge.to);
  }
}

const std::vector<RouteIndex>& ColoredRouteSimplex::color_of(VertexIndex from, VertexIndex to) const {
  static const std::vector<RouteIndex> kNone;
  auto it = coloring_.find({from, to});
  return it == coloring_.end() ? kNone : it->second;
}

ColoredRouteSimplex colored_route_simplex(const TwoTerminalDag& dag, std::size_t route_cap) {
  return ColoredRouteSimplex(dag, enumerate_routes(dag, route_cap));
}

}  // namespace rph
