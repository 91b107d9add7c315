// Serial vs OpenMP-parallel paths for the two data-parallel kernels: Monte
// Carlo trajectory scoring and the continuous backward-induction sweep.

#include <benchmark/benchmark.h>

#include "stopmax/distribution.hpp"
#include "stopmax/game_alpha.hpp"
#include "stopmax/game_max.hpp"
#include "stopmax/sim.hpp"

using namespace stopmax;

static void BM_simulate(benchmark::State& state) {
  const bool parallel = state.range(0) != 0;
  const auto d = Distribution::uniform(0.0, 1.0);
  const auto pol = gm_policy(5);
  for (auto _ : state) {
    auto r = simulate(d, pol, Game::Max, 0.0, 500000, 1, parallel);
    benchmark::DoNotOptimize(r.estimate);
  }
}
BENCHMARK(BM_simulate)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

static void BM_solve_continuous(benchmark::State& state) {
  const bool parallel = state.range(0) != 0;
  const auto d = Distribution::spread(0.5, 20);
  for (auto _ : state) {
    auto sol = solve_continuous(d, {4, 0.5}, 2048, parallel);
    benchmark::DoNotOptimize(sol.optimal_value);
  }
}
BENCHMARK(BM_solve_continuous)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
