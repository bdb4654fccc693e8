#include <benchmark/benchmark.h>

#include "hartree/dynamics.hpp"
#include "hartree/picard_lab.hpp"

using namespace hartree;

static void BM_Forward(benchmark::State& state) {
  const int dim = static_cast<int>(state.range(0));
  const Grid g(dim, static_cast<std::size_t>(state.range(1)), 40.0);
  const Field u = gaussian(g);
  for (auto _ : state) benchmark::DoNotOptimize(forward(u));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(g.size()));
}
BENCHMARK(BM_Forward)->Args({1, 1024})->Args({1, 8192})->Args({2, 128})->Args({3, 32});

static void BM_HartreeRhs(benchmark::State& state) {
  const Grid g(1, static_cast<std::size_t>(state.range(0)), 40.0);
  const Kernel k = materialize(Homogeneous{1.0, 0.4}, g);
  const Field u = gaussian(g);
  for (auto _ : state) benchmark::DoNotOptimize(hartree_rhs(u, k));
}
BENCHMARK(BM_HartreeRhs)->Arg(1024)->Arg(4096);

static void BM_SplitStep(benchmark::State& state) {
  const Grid g(1, 1024, 40.0);
  const Kernel k = materialize(Homogeneous{1.0, 0.4}, g);
  const Field u = gaussian(g);
  for (auto _ : state) benchmark::DoNotOptimize(splitstep_solve(u, k, 0.5, 1e-3, 100));
}
BENCHMARK(BM_SplitStep)->Unit(benchmark::kMillisecond);

static void BM_SecondIterate(benchmark::State& state) {
  const Grid g(1, 2048, 40.0);
  const Kernel k = materialize(Homogeneous{1.0, 0.4}, g);
  const Field f = gaussian(g);
  for (auto _ : state) benchmark::DoNotOptimize(second_iterate(f, k, 0.05, static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_SecondIterate)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);

static void BM_Picard(benchmark::State& state) {
  const Grid g(1, 1024, 40.0);
  const Kernel k = materialize(Homogeneous{1.0, 0.4}, g);
  const Field u = gaussian(g);
  for (auto _ : state) benchmark::DoNotOptimize(picard_solve(u, k, PicardConfig{}));
}
BENCHMARK(BM_Picard)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
