#include "rph/dimension_laws.hpp"

#include <algorithm>
#include <set>

#include "rph/chain_complex.hpp"

namespace rph {

bool LawReport::all_asserted_hold() const {
  return std::all_of(checks.begin(), checks.end(), [](const LawCheck& c) { return !c.asserted || c.holds; });
}

namespace {

struct Profile {
  ColoredRouteSimplex simplex;
  std::size_t top;  // max robust order
  std::vector<std::size_t> dims;
};

Profile profile(const TwoTerminalDag& dag, std::size_t route_cap, TriangleSemantics semantics) {
  auto simplex = colored_route_simplex(dag, route_cap);
  auto top = max_robust_order(simplex, semantics);
  return Profile{simplex, top, {}};
}

void fill_dims(Profile& p, std::size_t p_max, TriangleSemantics semantics) {
  p.dims = chain_dimensions(p.simplex, p_max, semantics);
}

LawCheck equality(std::string law, std::size_t order, std::size_t combined, std::int64_t expected,
                  bool asserted = true) {
  LawCheck c;
  c.law = std::move(law);
  c.order = order;
  c.combined = static_cast<std::int64_t>(combined);
  c.expected = expected;
  c.holds = c.combined == expected;
  c.asserted = asserted;
  return c;
}

std::set<std::vector<std::string>> named_triangles(const ColoredRouteSimplex& simplex, TriangleSemantics semantics) {
  std::set<std::vector<std::string>> out;
  for (const auto& t : robust_paths(simplex, 2, semantics)) {
    std::vector<std::string> names;
    for (auto v : t.vertices) names.push_back(simplex.base().name(v));
    out.insert(std::move(names));
  }
  return out;
}

}  // namespace

LawReport check_parallel_dimension_laws(const TwoTerminalDag& first, const TwoTerminalDag& second,
                                        std::size_t route_cap, TriangleSemantics semantics) {
  const auto combined_dag = parallel_combine(first, second);
  auto g = profile(combined_dag, route_cap, semantics);
  auto g1 = profile(first, route_cap, semantics);
  auto g2 = profile(second, route_cap, semantics);
  const auto p_max = std::max({g.top, g1.top, g2.top, std::size_t{2}}) + 1;
  for (auto* p : {&g, &g1, &g2}) fill_dims(*p, p_max, semantics);

  auto sum = [&](std::size_t p) { return static_cast<std::int64_t>(g1.dims[p] + g2.dims[p]); };

  LawReport report;
  report.checks.push_back(equality("parallel.i", 0, g.dims[0], sum(0) - 2));
  report.checks.push_back(equality("parallel.ii", 1, g.dims[1], sum(1) - 1));

  {
    const auto whole = named_triangles(g.simplex, semantics);
    auto parts = named_triangles(g1.simplex, semantics);
    const auto more = named_triangles(g2.simplex, semantics);
    parts.insert(more.begin(), more.end());
    LawCheck c;
    c.law = "parallel.iii";
    c.order = 2;
    c.relation = LawCheck::Relation::Contains;
    c.combined = static_cast<std::int64_t>(whole.size());
    c.expected = static_cast<std::int64_t>(parts.size());
    c.holds = std::includes(whole.begin(), whole.end(), parts.begin(), parts.end());
    c.strict = c.holds && whole.size() > parts.size();
    report.checks.push_back(c);
  }

  for (std::size_t p = 3; p <= p_max; ++p) report.checks.push_back(equality("parallel.iv", p, g.dims[p], sum(p)));
  return report;
}

LawReport check_series_dimension_laws(const TwoTerminalDag& first, const TwoTerminalDag& second,
                                      std::size_t route_cap, TriangleSemantics semantics) {
  const auto combined_dag = series_combine(first, second);
  auto g = profile(combined_dag, route_cap, semantics);
  auto g1 = profile(first, route_cap, semantics);
  auto g2 = profile(second, route_cap, semantics);
  const auto p_max = std::max({g.top, g1.top, g2.top, std::size_t{1}}) + 1;
  for (auto* p : {&g, &g1, &g2}) fill_dims(*p, p_max, semantics);

  auto sum = [&](std::size_t p) { return static_cast<std::int64_t>(g1.dims[p] + g2.dims[p]); };

  LawReport report;
  report.checks.push_back(equality("series.i", 0, g.dims[0], sum(0) - 1));
  report.checks.push_back(equality("series.p1", 1, g.dims[1], sum(1), /*asserted=*/false));
  for (std::size_t p = 2; p <= p_max; ++p) report.checks.push_back(equality("series.ii", p, g.dims[p], sum(p)));
  return report;
}

}  // namespace rph
