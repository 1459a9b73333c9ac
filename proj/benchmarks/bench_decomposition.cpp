#include <benchmark/benchmark.h>

#include "monideal/decomposition.hpp"
#include "monideal/graph.hpp"
#include "monideal/graph_ideals.hpp"

using namespace monideal;

namespace {

MonomialIdeal sample(int which) {
  return which == 0 ? power(ni_ideal(complete_bipartite(2, 3)), 3)
                    : power(di_ideal(cycle(6)), 2);
}

}  // namespace

static void BM_DecomposeSplitting(benchmark::State& state) {
  const auto I = sample(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(irreducible_decomposition(I, DecompositionMethod::splitting));
  }
}
BENCHMARK(BM_DecomposeSplitting)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

static void BM_DecomposeCorners(benchmark::State& state) {
  const auto I = sample(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(irreducible_decomposition(I, DecompositionMethod::corners));
  }
}
BENCHMARK(BM_DecomposeCorners)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

static void BM_AssociatedPrimes(benchmark::State& state) {
  const auto I = sample(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(associated_primes(I));
}
BENCHMARK(BM_AssociatedPrimes)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
