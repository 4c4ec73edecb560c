#include "rph/robust_paths.hpp"

#include <algorithm>
#include <iterator>
#include <string>

#include "rph/error.hpp"

namespace rph {

std::vector<VertexPath> allowed_paths(const ColoredRouteSimplex& simplex, std::size_t p) {
  std::vector<VertexPath> out;
  const auto n = simplex.vertex_count();
  VertexPath path;
  path.reserve(p + 1);
  // Depth-first over simplex edges; successor lists are ascending so the
  // output is lexicographic.
  auto grow = [&](auto&& self) -> void {
    if (path.size() == p + 1) {
      out.push_back(path);
      return;
    }
    for (auto next : simplex.successors(path.back())) {
      path.push_back(next);
      self(self);
      path.pop_back();
    }
  };
  for (VertexIndex v = 0; v < n; ++v) {
    path.assign(1, v);
    grow(grow);
  }
  return out;
}

namespace {

bool evades(const Route& alpha, const Route& beta, VertexIndex i0, VertexIndex i2, TriangleSemantics semantics) {
  const auto from = *alpha.rank(i0);
  const auto to = *alpha.rank(i2);
  const auto& vs = alpha.vertices();
  if (semantics == TriangleSemantics::Literal) {
    for (auto pos = from + 1; pos < to; ++pos)
      if (beta.contains(vs[pos])) return false;
    return true;
  }
  const auto lo = *beta.rank(i0);
  const auto hi = *beta.rank(i2);
  for (auto pos = from + 1; pos < to; ++pos) {
    auto r = beta.rank(vs[pos]);
    if (r && *r > lo && *r < hi) return false;
  }
  return true;
}

std::vector<RouteIndex> sorted_intersection(const std::vector<RouteIndex>& a, const std::vector<RouteIndex>& b) {
  std::vector<RouteIndex> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::optional<TriangleWitness> search_witness(const ColoredRouteSimplex& simplex, VertexIndex i0, VertexIndex i1,
                                              VertexIndex i2, TriangleSemantics semantics) {
  const auto& alphas = simplex.color_of(i0, i2);
  const auto betas = sorted_intersection(simplex.color_of(i0, i1), simplex.color_of(i1, i2));
  const auto& routes = simplex.routes();
  for (auto alpha : alphas) {
    for (auto beta : betas) {
      if (evades(routes[alpha], routes[beta], i0, i2, semantics))
        return TriangleWitness{{i0, i1, i2}, alpha, beta};
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<TriangleWitness> find_triangle_witness(const ColoredRouteSimplex& simplex, VertexIndex i0,
                                                     VertexIndex i1, VertexIndex i2, TriangleSemantics semantics) {
  if (!simplex.contains(i0, i1) || !simplex.contains(i1, i2))
    throw GraphError(ErrorKind::NotAllowed, "triple is not an allowed 2-path",
                     {std::to_string(i0), std::to_string(i1), std::to_string(i2)});
  return search_witness(simplex, i0, i1, i2, semantics);
}

TriangleTable::TriangleTable(const ColoredRouteSimplex& simplex, TriangleSemantics semantics) {
  for (VertexIndex a = 0; a < simplex.vertex_count(); ++a) {
    for (auto b : simplex.successors(a)) {
      for (auto c : simplex.successors(b)) {
        auto witness = search_witness(simplex, a, b, c, semantics);
        if (!witness) continue;
        triangles_.push_back(RobustPath{{a, b, c}, {*witness}});
        by_prefix_[{a, b}].emplace_back(c, *witness);
      }
    }
  }
}

std::span<const std::pair<VertexIndex, TriangleWitness>> TriangleTable::closing(VertexIndex a, VertexIndex b) const {
  auto it = by_prefix_.find({a, b});
  if (it == by_prefix_.end()) return {};
  return it->second;
}

std::optional<TriangleWitness> TriangleTable::lookup(VertexIndex a, VertexIndex b, VertexIndex c) const {
  for (const auto& [third, witness] : closing(a, b))
    if (third == c) return witness;
  return std::nullopt;
}

std::vector<RobustPath> extend_robust_paths(const TriangleTable& table, const std::vector<RobustPath>& level) {
  std::vector<RobustPath> next;
  for (const auto& path : level) {
    const auto& vs = path.vertices;
    for (const auto& [third, witness] : table.closing(vs[vs.size() - 2], vs.back())) {
      RobustPath longer = path;
      longer.vertices.push_back(third);
      longer.witnesses.push_back(witness);
      next.push_back(std::move(longer));
    }
  }
  return next;
}

std::vector<std::vector<RobustPath>> robust_levels(const ColoredRouteSimplex& simplex, std::size_t p_max,
                                                   TriangleSemantics semantics) {
  std::vector<std::vector<RobustPath>> levels(std::min<std::size_t>(p_max + 1, 2));
  if (p_max < 2) return levels;
  TriangleTable table(simplex, semantics);
  levels.push_back(table.triangles());
  while (levels.size() <= p_max && !levels.back().empty())
    levels.push_back(extend_robust_paths(table, levels.back()));
  return levels;
}

std::vector<RobustPath> robust_paths(const ColoredRouteSimplex& simplex, std::size_t p, TriangleSemantics semantics) {
  if (p < 2) throw GraphError(ErrorKind::InvalidInput, "robust paths are defined for p >= 2", {std::to_string(p)});
  auto levels = robust_levels(simplex, p, semantics);
  if (levels.size() <= p) return {};
  return std::move(levels[p]);
}

std::size_t max_robust_order(const ColoredRouteSimplex& simplex, TriangleSemantics semantics) {
  if (simplex.edges().empty()) return 0;
  TriangleTable table(simplex, semantics);
  std::size_t order = 1;
  auto level = table.triangles();
  while (!level.empty()) {
    ++order;
    level = extend_robust_paths(table, level);
  }
  return order;
}

}  // namespace rph
