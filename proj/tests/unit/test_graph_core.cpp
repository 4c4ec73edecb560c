#include <doctest.h>

#include "support/corpus.hpp"
#include "support/fixtures.hpp"
#include "support/oracle.hpp"

using namespace rph;
using namespace rph::test;

namespace {

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const GraphError& e) {
    return e.kind();
  }
  FAIL("expected GraphError");
  return ErrorKind::InvalidInput;
}

std::vector<std::vector<std::string>> route_names(const TwoTerminalDag& dag, const std::vector<Route>& routes) {
  std::vector<std::vector<std::string>> out;
  for (const auto& r : routes) out.push_back(names_of(dag, r.vertices()));
  return out;
}

}  // namespace

TEST_SUITE("graph_core") {

TEST_CASE("K12 builds as the edge graph") {
  const auto dag = build(k12());
  CHECK(dag.vertex_count() == 2);
  CHECK(dag.edge_count() == 1);
  CHECK(dag == edge_graph("1", "2"));
  CHECK(dag.name(dag.origin()) == "1");
  CHECK(dag.name(dag.destination()) == "2");
}

TEST_CASE("four_route graph has 7 vertices and 9 edges in canonical order") {
  const auto dag = build(four_route());
  CHECK(dag.vertex_count() == 7);
  CHECK(dag.edge_count() == 9);
  CHECK(dag.names() == std::vector<std::string>{"o", "1", "2", "3", "4", "5", "d"});
  CHECK(dag.has_edge(dag.index_of("2"), dag.index_of("4")));
  CHECK_FALSE(dag.has_edge(dag.index_of("4"), dag.index_of("2")));
  CHECK(dag.successors(dag.index_of("o")) == std::vector<VertexIndex>{1, 3});
  CHECK(dag.predecessors(dag.index_of("d")) == std::vector<VertexIndex>{2, 4, 5});
}

TEST_CASE("canonical form ignores input ordering") {
  auto g = four_route();
  std::reverse(g.vertices.begin(), g.vertices.end());
  std::reverse(g.edges.begin(), g.edges.end());
  CHECK(build(g) == build(four_route()));
}

TEST_CASE("construction errors") {
  const std::vector<std::string> oad{"o", "a", "d"};
  CHECK(kind_of([&] {
          std::vector<NamedEdge> e{{"o", "a"}, {"a", "o"}, {"a", "d"}};
          build_two_terminal(oad, e, "o", "d");
        }) == ErrorKind::CycleDetected);
  CHECK(kind_of([&] {
          std::vector<NamedEdge> e{{"o", "o"}, {"o", "d"}};
          build_two_terminal(oad, e, "o", "d");
        }) == ErrorKind::SelfLoop);
  CHECK(kind_of([&] {
          std::vector<NamedEdge> e{{"o", "a"}, {"o", "a"}, {"a", "d"}};
          build_two_terminal(oad, e, "o", "d");
        }) == ErrorKind::DuplicateEdge);
  CHECK(kind_of([&] {
          std::vector<NamedEdge> e{{"o", "a"}, {"a", "d"}};
          build_two_terminal(oad, e, "o", "z");
        }) == ErrorKind::MissingTerminal);
  CHECK(kind_of([&] {
          std::vector<NamedEdge> e{{"o", "a"}, {"a", "x"}};
          build_two_terminal(oad, e, "o", "d");
        }) == ErrorKind::InvalidInput);
}

TEST_CASE("strict mode lists every stray element, prune mode drops them") {
  const std::vector<std::string> v{"s", "a", "b", "t", "x", "y"};
  const std::vector<NamedEdge> e{{"s", "a"}, {"a", "t"}, {"s", "b"}, {"b", "t"}, {"a", "x"}, {"y", "b"}};
  try {
    build_two_terminal(v, e, "s", "t");
    FAIL("strict build accepted stray vertices");
  } catch (const GraphError& err) {
    CHECK(err.kind() == ErrorKind::NotTwoTerminal);
    CHECK(err.items() == std::vector<std::string>{"x", "y", "a->x", "y->b"});
  }
  const auto pruned = build_two_terminal(v, e, "s", "t", BuildMode::Prune);
  CHECK(pruned.dag.vertex_count() == 4);
  CHECK(pruned.dag.edge_count() == 4);
  CHECK(pruned.pruned_vertices == std::vector<std::string>{"x", "y"});
  CHECK(pruned.pruned_edges.size() == 2);
}

TEST_CASE("a cycle off every route is still reported as a cycle") {
  const std::vector<std::string> v{"o", "d", "x", "y"};
  const std::vector<NamedEdge> e{{"o", "d"}, {"x", "y"}, {"y", "x"}};
  CHECK(kind_of([&] { build_two_terminal(v, e, "o", "d", BuildMode::Prune); }) == ErrorKind::CycleDetected);
}

TEST_CASE("route enumeration") {
  const auto k = build(k12());
  CHECK(route_names(k, enumerate_routes(k)) == std::vector<std::vector<std::string>>{{"1", "2"}});

  const auto dag = build(four_route());
  const auto routes = enumerate_routes(dag);
  CHECK(route_names(dag, routes) == std::vector<std::vector<std::string>>{
                                        {"o", "1", "2", "4", "d"},
                                        {"o", "1", "2", "d"},
                                        {"o", "3", "4", "d"},
                                        {"o", "3", "5", "d"},
                                    });
  CHECK(enumerate_routes(build(braess())).size() == 3);
  CHECK(enumerate_routes(build(skip_ladder(6))).size() == 13);
}

TEST_CASE("route enumeration agrees with plain DFS") {
  for (auto n : {3u, 4u, 5u}) {
    for (const auto& g : exhaustive_two_terminal(n)) {
      const auto dag = build(g);
      auto mine = route_names(dag, enumerate_routes(dag));
      auto theirs = oracle::routes(g);
      std::sort(mine.begin(), mine.end());
      std::sort(theirs.begin(), theirs.end());
      CHECK(mine == theirs);
    }
  }
}

TEST_CASE("route cap") {
  const auto dag = build(skip_ladder(6));
  CHECK(enumerate_routes(dag, 13).size() == 13);
  CHECK(kind_of([&] { enumerate_routes(dag, 12); }) == ErrorKind::RouteExplosion);
}

TEST_CASE("route segments") {
  const auto dag = build(four_route());
  const Route r(path_of(dag, {"o", "1", "2", "4", "d"}), dag.vertex_count());
  const auto idx = [&](const char* n) { return dag.index_of(n); };
  CHECK(names_of(dag, route_segment(r, idx("1"), idx("4")).vertices()) == std::vector<std::string>{"1", "2", "4"});
  const Route s(path_of(dag, {"o", "1", "2", "d"}), dag.vertex_count());
  CHECK(names_of(dag, route_segment(s, idx("2"), idx("2")).vertices()) == std::vector<std::string>{"2"});
  CHECK(kind_of([&] { route_segment(s, idx("2"), idx("1")); }) == ErrorKind::OrderViolation);
  CHECK(kind_of([&] { route_segment(s, idx("3"), idx("d")); }) == ErrorKind::NotOnRoute);
}

TEST_CASE("route intersections") {
  const auto dag = build(four_route());
  const auto n = dag.vertex_count();
  const auto seg = [&](const char* a, const char* b) {
    return IntersectionDecomposition::Segment{dag.index_of(a), dag.index_of(b)};
  };
  const Route r1(path_of(dag, {"o", "1", "2", "d"}), n);
  const Route r2(path_of(dag, {"o", "1", "2", "4", "d"}), n);
  CHECK(intersect_routes(r1, r2).segments == std::vector{seg("o", "2"), seg("d", "d")});
  const Route r3(path_of(dag, {"o", "3", "4", "d"}), n);
  const Route r4(path_of(dag, {"o", "3", "5", "d"}), n);
  CHECK(intersect_routes(r3, r4).segments == std::vector{seg("o", "3"), seg("d", "d")});
  CHECK(intersect_routes(r4, r4).segments == std::vector{seg("o", "d")});

  const Route forward({0, 1, 2}, 3), backward({0, 2, 1}, 3);
  CHECK(kind_of([&] { intersect_routes(forward, backward); }) == ErrorKind::InconsistentOrder);
}

TEST_CASE("series combination") {
  const auto path = series_combine(edge_graph("o", "h"), edge_graph("h", "d"));
  CHECK(path == build(two_edge_path()));
  const auto left = series_combine(edge_graph("i0", "i1"), edge_graph("i1", "i3"));
  CHECK(left.edge_count() == 2);
  CHECK(kind_of([&] { series_combine(edge_graph("o", "h"), edge_graph("x", "d")); }) == ErrorKind::HingeMismatch);
  CHECK(kind_of([&] { series_combine(path, series_combine(edge_graph("d", "h"), edge_graph("h", "z"))); }) ==
        ErrorKind::VertexOverlap);
}

TEST_CASE("parallel combination") {
  const auto oad = series_combine(edge_graph("o", "a"), edge_graph("a", "d"));
  const auto obd = series_combine(edge_graph("o", "b"), edge_graph("b", "d"));
  CHECK(parallel_combine(oad, obd) == build(diamond()));
  const auto expected_tree = parallel_combine(series_combine(edge_graph("i0", "i1"), edge_graph("i1", "i3")),
                                    series_combine(edge_graph("i0", "i2"), edge_graph("i2", "i3")));
  CHECK(expected_tree == build(square()));
  CHECK(kind_of([&] { parallel_combine(edge_graph("o", "d"), edge_graph("o", "d")); }) == ErrorKind::DuplicateEdge);
  CHECK(kind_of([&] { parallel_combine(oad, oad); }) == ErrorKind::VertexOverlap);
  CHECK(kind_of([&] { parallel_combine(oad, edge_graph("o", "x")); }) == ErrorKind::TerminalMismatch);
}

}  // TEST_SUITE
