#include <benchmark/benchmark.h>

#include "ivnsoft/levels.hpp"
#include "support/generators.hpp"

namespace {

using namespace ivnsoft;

// Objects per parameter; the parameter count is the benchmark range.
constexpr std::size_t kObjects = 256;

IvnSoftSet make_set(std::size_t parameters, std::uint64_t seed) {
  testing::Rng rng(seed);
  return testing::random_set(rng, {testing::names('u', kObjects), testing::names('x', parameters)});
}

Execution exec_of(const benchmark::State& state) {
  return state.range(1) == 0 ? Execution::serial : Execution::parallel;
}

void label(benchmark::State& state) {
  state.SetLabel(state.range(1) == 0 ? "serial" : "parallel");
  state.SetItemsProcessed(state.iterations() * state.range(0) * static_cast<std::int64_t>(kObjects));
}

void BM_Union(benchmark::State& state) {
  const IvnSoftSet a = make_set(state.range(0), 1), b = make_set(state.range(0), 2);
  for (auto _ : state) benchmark::DoNotOptimize(soft_union(a, b, exec_of(state)));
  label(state);
}

void BM_Add(benchmark::State& state) {
  const IvnSoftSet a = make_set(state.range(0), 1), b = make_set(state.range(0), 2);
  for (auto _ : state) benchmark::DoNotOptimize(add(a, b, exec_of(state)));
  label(state);
}

void BM_AvgThreshold(benchmark::State& state) {
  const IvnSoftSet a = make_set(state.range(0), 1);
  for (auto _ : state) benchmark::DoNotOptimize(avg_threshold(a, exec_of(state)));
  label(state);
}

void BM_LevelSet(benchmark::State& state) {
  const IvnSoftSet a = make_set(state.range(0), 1);
  const ThresholdSet t = avg_threshold(a);
  for (auto _ : state) benchmark::DoNotOptimize(level_soft_set(a, t, ComparisonMode::dominance, exec_of(state)));
  label(state);
}

void args(benchmark::internal::Benchmark* b) {
  for (int parameters : {8, 64, 256})
    for (int parallel : {0, 1}) b->Args({parameters, parallel});
  b->Unit(benchmark::kMillisecond);
}

BENCHMARK(BM_Union)->Apply(args);
BENCHMARK(BM_Add)->Apply(args);
BENCHMARK(BM_AvgThreshold)->Apply(args);
BENCHMARK(BM_LevelSet)->Apply(args);

}  // namespace

BENCHMARK_MAIN();
