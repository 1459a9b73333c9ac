#include <benchmark/benchmark.h>

#include "monideal/graph.hpp"
#include "monideal/graph_ideals.hpp"

using namespace monideal;

static void BM_MinimalDominatingSetsCycle(benchmark::State& state) {
  const auto G = cycle(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(minimal_dominating_sets(G));
}
BENCHMARK(BM_MinimalDominatingSetsCycle)->RangeMultiplier(2)->Range(4, 16);

// Includes the cross-check against the Alexander dual of NI(G).
static void BM_DominatingIdealCycle(benchmark::State& state) {
  const auto G = cycle(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(di_ideal(G));
}
BENCHMARK(BM_DominatingIdealCycle)->RangeMultiplier(2)->Range(4, 16);
