#include <benchmark/benchmark.h>

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "nlse/generators.hpp"
#include "nlse/grid.hpp"
#include "nlse/ranking.hpp"

namespace {

using namespace nlse;

void BM_ScoreAll(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Graph g = generators::erdos_renyi(n, 8.0 / static_cast<double>(n), 1);
  for (auto _ : state) benchmark::DoNotOptimize(score_all(g, EntropicIndex(2.0), Parallelism{1}));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(n));
}
BENCHMARK(BM_ScoreAll)->Arg(1000)->Arg(10000)->Arg(100000);

void BM_SweepDefaultGrid(benchmark::State& state) {
  const Graph g = generators::erdos_renyi(1000, 0.01, 2);
  const auto grid = default_grid();
  const Parallelism par{static_cast<unsigned>(state.range(0))};
  for (auto _ : state) benchmark::DoNotOptimize(sweep(g, grid, par));
}
BENCHMARK(BM_SweepDefaultGrid)->Arg(1)->Arg(0)->Unit(benchmark::kMillisecond);

void BM_KendallTau(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::vector<std::string> a(n);
  for (std::size_t i = 0; i < n; ++i) a[i] = std::to_string(i);
  std::vector<std::string> b = a;
  std::shuffle(b.begin(), b.end(), std::mt19937_64(3));
  for (auto _ : state) benchmark::DoNotOptimize(compare_rankings(a, b));
}
BENCHMARK(BM_KendallTau)->Arg(1000)->Arg(100000);

}  // namespace

BENCHMARK_MAIN();
