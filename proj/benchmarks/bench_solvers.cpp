#include <benchmark/benchmark.h>

#include <atomsched/generator.hpp>
#include <atomsched/oracle.hpp>
#include <atomsched/relaxed_solver.hpp>
#include <atomsched/scr.hpp>

namespace {

using namespace atomsched;

void BM_RelaxedCost(benchmark::State& state) {
  const auto instance = generate_instance(static_cast<int>(state.range(0)), 7);
  for (auto _ : state) benchmark::DoNotOptimize(solve_relaxed_cost(instance, DropSet{}));
}
BENCHMARK(BM_RelaxedCost)->Arg(5)->Arg(10)->Arg(20)->Unit(benchmark::kMillisecond);

void BM_RelaxedPar(benchmark::State& state) {
  const auto instance = generate_instance(static_cast<int>(state.range(0)), 7);
  for (auto _ : state) benchmark::DoNotOptimize(solve_relaxed_par(instance, DropSet{}));
}
BENCHMARK(BM_RelaxedPar)->Arg(5)->Arg(10)->Arg(20)->Unit(benchmark::kMillisecond);

void BM_Scr(benchmark::State& state) {
  const auto instance = generate_instance(10, 11);
  ScrConfig config;
  config.n_d = static_cast<int>(state.range(1));
  const auto kind = state.range(0) == 0 ? ObjectiveKind::Cost : ObjectiveKind::Par;
  for (auto _ : state) benchmark::DoNotOptimize(successive_convex_relaxation(instance, kind, config));
}
BENCHMARK(BM_Scr)->Args({0, 1})->Args({0, 10})->Args({1, 1})->Args({1, 10})->Unit(benchmark::kMillisecond);

void BM_Oracle(benchmark::State& state) {
  const auto instance = generate_instance(4, 3);
  for (auto _ : state) benchmark::DoNotOptimize(brute_force(instance, ObjectiveKind::Cost, kDefaultEnumerationLimit, 1));
}
BENCHMARK(BM_Oracle)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
