#include <benchmark/benchmark.h>

#include "monideal/closure.hpp"
#include "monideal/graph.hpp"
#include "monideal/graph_ideals.hpp"

using namespace monideal;

static void BM_NormalityCycleDominating(benchmark::State& state) {
  const auto I = di_ideal(cycle(static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(is_normal(I).normal);
}
BENCHMARK(BM_NormalityCycleDominating)->DenseRange(4, 7)->Unit(benchmark::kMillisecond);

static void BM_NormalityBipartiteNeighbourhood(benchmark::State& state) {
  const auto I = ni_ideal(complete_bipartite(static_cast<std::size_t>(state.range(0)),
                                             static_cast<std::size_t>(state.range(1))));
  for (auto _ : state) benchmark::DoNotOptimize(is_normal(I).normal);
}
BENCHMARK(BM_NormalityBipartiteNeighbourhood)
    ->Args({2, 2})
    ->Args({2, 3})
    ->Args({3, 3})
    ->Unit(benchmark::kMillisecond);

// One membership query against a fresh polyhedron, so cut caching is not measured.
static void BM_NewtonMembership(benchmark::State& state) {
  const auto I = power(di_ideal(cycle(6)), 2);
  const Monomial a{2, 1, 2, 1, 2, 1};
  for (auto _ : state) benchmark::DoNotOptimize(np_contains(I, a));
}
BENCHMARK(BM_NewtonMembership);
