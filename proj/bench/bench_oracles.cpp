// Serial reference scan vs the OpenMP scan on graphs where every half-set
// must be visited (the property holds, so there is no early exit).

#include <benchmark/benchmark.h>

#include "eqlab/families.hpp"
#include "eqlab/oracles.hpp"

using namespace eqlab;

static void BM_DegreeEquipartiteCrown(benchmark::State& state) {
  const Graph g = generate({FamilyKind::CROWN_KNN_MINUS_NK2, static_cast<unsigned>(state.range(0))});
  const OracleOptions opts{.jobs = static_cast<unsigned>(state.range(1))};
  for (auto _ : state) benchmark::DoNotOptimize(is_degree_equipartite(g, opts).holds);
  state.counters["halfsets/s"] =
      benchmark::Counter(static_cast<double>(is_degree_equipartite(g, opts).subsets_examined),
                         benchmark::Counter::kIsIterationInvariantRate);
}
BENCHMARK(BM_DegreeEquipartiteCrown)
    ->ArgsProduct({{8, 10, 11}, {1, 2, 4}})
    ->Unit(benchmark::kMillisecond)
    ->UseRealTime();

static void BM_EquipartiteTwoCliques(benchmark::State& state) {
  const Graph g = generate({FamilyKind::TWO_KN, static_cast<unsigned>(state.range(0))});
  const OracleOptions opts{.jobs = static_cast<unsigned>(state.range(1))};
  for (auto _ : state) benchmark::DoNotOptimize(is_equipartite(g, opts).holds);
}
BENCHMARK(BM_EquipartiteTwoCliques)->ArgsProduct({{7, 8}, {1, 4}})->Unit(benchmark::kMillisecond)->UseRealTime();

static void BM_SpectralEquipartiteCrown(benchmark::State& state) {
  const Graph g = generate({FamilyKind::CROWN_KNN_MINUS_NK2, static_cast<unsigned>(state.range(0))});
  const OracleOptions opts{.jobs = static_cast<unsigned>(state.range(1))};
  for (auto _ : state) benchmark::DoNotOptimize(is_spectral_equipartite(g, opts).holds);
}
BENCHMARK(BM_SpectralEquipartiteCrown)->ArgsProduct({{7, 8}, {1, 4}})->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
