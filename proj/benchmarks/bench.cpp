#include <benchmark/benchmark.h>

#include "stratifold/canonical.hpp"
#include "stratifold/census.hpp"
#include "stratifold/classify.hpp"
#include "stratifold/tree_enum.hpp"

namespace {

using namespace stratifold;

void BM_CanonicalCode(benchmark::State& state) {
  const auto trees = enum_rooted(static_cast<int>(state.range(0)));
  const StratGraph g = rooted_to_collapsible(trees[trees.size() / 2]);
  for (auto _ : state) {
    benchmark::DoNotOptimize(canonical_code(g));
  }
}
BENCHMARK(BM_CanonicalCode)->Arg(8)->Arg(12)->Arg(15);

void BM_EnumRooted(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(count_rooted(static_cast<int>(state.range(0))));
  }
}
BENCHMARK(BM_EnumRooted)->Arg(10)->Arg(12)->Arg(15);

void BM_EnumBirooted(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(enum_birooted(static_cast<int>(state.range(0))));
  }
}
BENCHMARK(BM_EnumBirooted)->Arg(6)->Arg(8)->Arg(10);

void BM_IsSimplyConnected(benchmark::State& state) {
  const auto graphs = brute_force_census_graphs(7);
  std::vector<StratGraph> sample;
  for (const auto& [b, list] : graphs)
    for (const auto& [code, g] : list) sample.push_back(g);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(is_simply_connected(sample[i]));
    i = (i + 1) % sample.size();
  }
}
BENCHMARK(BM_IsSimplyConnected);

void BM_BruteForceCensus(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(brute_force_census(static_cast<int>(state.range(0))));
  }
}
BENCHMARK(BM_BruteForceCensus)->Arg(5)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);

void BM_ConstructiveCensus(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(constructive_census(static_cast<int>(state.range(0)), 2));
  }
}
BENCHMARK(BM_ConstructiveCensus)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);

void BM_CountB1(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(count_b1(static_cast<int>(state.range(0))));
  }
}
BENCHMARK(BM_CountB1)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
