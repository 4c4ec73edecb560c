#include "rph/route.hpp"

#include <string>

#include "rph/error.hpp"

namespace rph {

Route::Route(std::vector<VertexIndex> vertices, std::size_t vertex_count)
    : vertices_(std::move(vertices)), rank_(vertex_count, -1), mask_((vertex_count + 63) / 64, 0) {
  if (vertices_.empty()) throw GraphError(ErrorKind::InvalidInput, "a route needs at least one vertex");
  for (std::size_t pos = 0; pos < vertices_.size(); ++pos) {
    const auto v = vertices_[pos];
    if (v >= vertex_count)
      throw GraphError(ErrorKind::InvalidInput, "route vertex out of range", {std::to_string(v)});
    if (rank_[v] >= 0) throw GraphError(ErrorKind::InvalidInput, "route repeats a vertex", {std::to_string(v)});
    rank_[v] = static_cast<std::int32_t>(pos);
    mask_[v / 64] |= std::uint64_t{1} << (v % 64);
  }
}

std::vector<Route> enumerate_routes(const TwoTerminalDag& dag, std::size_t cap) {
  const auto n = dag.vertex_count();
  const auto target = dag.destination();
  std::vector<Route> routes;

  // Iterative DFS; successors are visited in ascending index order, which
  // yields routes in lexicographic order.
  std::vector<VertexIndex> path{dag.origin()};
  std::vector<std::size_t> next_child{0};
  while (!path.empty()) {
    const auto u = path.back();
    if (u == target) {
      if (routes.size() == cap)
        throw GraphError(ErrorKind::RouteExplosion, "route count exceeds cap", {std::to_string(cap)});
      routes.emplace_back(path, n);
      path.pop_back();
      next_child.pop_back();
      continue;
    }
    const auto& succ = dag.successors(u);
    auto& child = next_child.back();
    if (child == succ.size()) {
      path.pop_back();
      next_child.pop_back();
      continue;
    }
    path.push_back(succ[child++]);
    next_child.push_back(0);
  }
  return routes;
}

Route route_segment(const Route& route, VertexIndex i, VertexIndex j) {
  auto ri = route.rank(i);
  auto rj = route.rank(j);
  if (!ri || !rj) {
    std::vector<std::string> absent;
    if (!ri) absent.push_back(std::to_string(i));
    if (!rj) absent.push_back(std::to_string(j));
    throw GraphError(ErrorKind::NotOnRoute, "segment endpoint not on route", absent);
  }
  if (*ri > *rj)
    throw GraphError(ErrorKind::OrderViolation, "segment start comes after its end",
                     {std::to_string(i), std::to_string(j)});
  const auto& vs = route.vertices();
  return Route({vs.begin() + static_cast<std::ptrdiff_t>(*ri), vs.begin() + static_cast<std::ptrdiff_t>(*rj) + 1},
               route.vertex_count());
}

IntersectionDecomposition intersect_routes(const Route& first, const Route& second) {
  IntersectionDecomposition result;
  std::optional<std::size_t> prev_first, prev_second;
  for (std::size_t pos = 0; pos < first.size(); ++pos) {
    const auto v = first.vertices()[pos];
    auto other = second.rank(v);
    if (!other) continue;
    if (prev_second && *other <= *prev_second)
      throw GraphError(ErrorKind::InconsistentOrder, "routes order a shared vertex pair oppositely",
                       {std::to_string(first.vertices()[*prev_first]), std::to_string(v)});
    const bool extends = prev_first && *prev_first + 1 == pos && *prev_second + 1 == *other;
    if (extends)
      result.segments.back().exit = v;
    else
      result.segments.push_back({v, v});
    prev_first = pos;
    prev_second = other;
  }
  return result;
}

}  // namespace rph
