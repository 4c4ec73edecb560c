#include <benchmark/benchmark.h>

#include <cstdio>

#include "rph/rph.hpp"

namespace {

// Chain v0 -> ... -> v_len with skip edges v_k -> v_{k+2}: Fibonacci many
// routes and robust paths of every order up to len.
rph::TwoTerminalDag skip_ladder(std::size_t len) {
  auto name = [](std::size_t k) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "v%03zu", k);
    return std::string(buf);
  };
  std::vector<std::string> vertices;
  std::vector<rph::NamedEdge> edges;
  for (std::size_t k = 0; k <= len; ++k) vertices.push_back(name(k));
  for (std::size_t k = 0; k < len; ++k) edges.emplace_back(name(k), name(k + 1));
  for (std::size_t k = 0; k + 2 <= len; ++k) edges.emplace_back(name(k), name(k + 2));
  return rph::build_two_terminal(vertices, edges, name(0), name(len)).dag;
}

void BM_EnumerateRoutes(benchmark::State& state) {
  const auto dag = skip_ladder(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(rph::enumerate_routes(dag, 1'000'000));
  state.counters["routes"] = static_cast<double>(rph::enumerate_routes(dag, 1'000'000).size());
}
BENCHMARK(BM_EnumerateRoutes)->DenseRange(8, 16, 4);

void BM_RobustLevels(benchmark::State& state) {
  const auto simplex = rph::colored_route_simplex(skip_ladder(static_cast<std::size_t>(state.range(0))), 1'000'000);
  std::size_t total = 0;
  for (auto _ : state) {
    const auto levels = rph::robust_levels(simplex, simplex.vertex_count());
    total = 0;
    for (const auto& l : levels) total += l.size();
    benchmark::DoNotOptimize(total);
  }
  state.counters["robust_paths"] = static_cast<double>(total);
}
BENCHMARK(BM_RobustLevels)->DenseRange(6, 12, 2)->Unit(benchmark::kMillisecond);

void BM_BoundaryRank(benchmark::State& state) {
  const auto simplex = rph::colored_route_simplex(skip_ladder(10));
  const auto matrix = rph::boundary_matrix(simplex, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(rph::boundary_rank(matrix));
  state.counters["cols"] = static_cast<double>(matrix.cols);
}
BENCHMARK(BM_BoundaryRank)->DenseRange(2, 6, 2)->Unit(benchmark::kMillisecond);

void BM_Analysis(benchmark::State& state) {
  const auto dag = skip_ladder(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    const auto simplex = rph::colored_route_simplex(dag);
    benchmark::DoNotOptimize(rph::betti_numbers(simplex, rph::max_robust_order(simplex)));
    benchmark::DoNotOptimize(rph::recognize_series_parallel(dag));
    benchmark::DoNotOptimize(rph::braess_sites(simplex));
  }
}
BENCHMARK(BM_Analysis)->DenseRange(4, 8, 2)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
