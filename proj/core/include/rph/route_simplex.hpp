#pragma once

#include <compare>
#include <map>
#include <vector>

#include "rph/dag.hpp"
#include "rph/route.hpp"

namespace rph {

struct SimplexEdge {
  VertexIndex from;
  VertexIndex to;
  friend auto operator<=>(const SimplexEdge&, const SimplexEdge&) = default;
};

// All forward pairs of a route: L(L+1)/2 edges for L+1 vertices, sorted.
std::vector<SimplexEdge> route_simplex_of(const Route& route);

// The union of all route simplices of a graph, each edge colored with the
// sorted indices of the routes whose simplex contains it.
class ColoredRouteSimplex {
 public:
  ColoredRouteSimplex(TwoTerminalDag base, std::vector<Route> routes);

  const TwoTerminalDag& base() const noexcept { return base_; }
  const std::vector<Route>& routes() const noexcept { return routes_; }
  std::size_t vertex_count() const noexcept { return base_.vertex_count(); }

  // Sorted.
  const std::vector<SimplexEdge>& edges() const noexcept { return edges_; }
  const std::map<SimplexEdge, std::vector<RouteIndex>>& coloring() const noexcept { return coloring_; }

  bool contains(VertexIndex from, VertexIndex to) const { return coloring_.contains({from, to}); }
  // Empty when (from, to) is not a simplex edge.
  const std::vector<RouteIndex>& color_of(VertexIndex from, VertexIndex to) const;
  // Heads of simplex edges leaving v, ascending.
  const std::vector<VertexIndex>& successors(VertexIndex v) const { return successors_.at(v); }

 private:
  TwoTerminalDag base_;
  std::vector<Route> routes_;
  std::map<SimplexEdge, std::vector<RouteIndex>> coloring_;
  std::vector<SimplexEdge> edges_;
  std::vector<std::vector<VertexIndex>> successors_;
};

// Enumerates routes (subject to `route_cap`) and builds R(G).
ColoredRouteSimplex colored_route_simplex(const TwoTerminalDag& dag, std::size_t route_cap = kDefaultRouteCap);

inline const std::vector<RouteIndex>& color_of(const ColoredRouteSimplex& simplex, VertexIndex from,
                                               VertexIndex to) {
  return simplex.color_of(from, to);
}

}  // namespace rph
