// Serial reference stencils against the row-parallel kernels, plus one full
// step. Thread count for the kernels comes from the benchmark argument.
//
//   ./build/bench/nsch_bench --benchmark_filter=Laplacian

#include <benchmark/benchmark.h>

#include <random>

#include "nsch/cases.hpp"
#include "nsch/operators.hpp"
#include "nsch/parallel.hpp"
#include "nsch/stepper.hpp"

namespace {

using namespace nsch;

ScalarField noise(const Grid& g, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  ScalarField f(g);
  for (double& v : f.values()) v = u(rng);
  return f;
}

Grid grid_for(const benchmark::State& st) { return default_grid(static_cast<int>(st.range(0)), static_cast<int>(st.range(0)) / 2); }

void BM_LaplacianReference(benchmark::State& st) {
  const ScalarField f = noise(grid_for(st), 1);
  for (auto _ : st) benchmark::DoNotOptimize(reference::laplacian(f));
  st.SetItemsProcessed(st.iterations() * static_cast<std::int64_t>(f.size()));
}

void BM_Laplacian(benchmark::State& st) {
  parallel::set_threads(static_cast<int>(st.range(1)));
  const ScalarField f = noise(grid_for(st), 1);
  for (auto _ : st) benchmark::DoNotOptimize(laplacian(f));
  st.SetItemsProcessed(st.iterations() * static_cast<std::int64_t>(f.size()));
  parallel::set_threads(1);
}

void BM_DivCoefGradReference(benchmark::State& st) {
  const Grid g = grid_for(st);
  const ScalarField a = noise(g, 2), f = noise(g, 3);
  for (auto _ : st) benchmark::DoNotOptimize(reference::div_coef_grad(a, f));
  st.SetItemsProcessed(st.iterations() * static_cast<std::int64_t>(f.size()));
}

void BM_DivCoefGrad(benchmark::State& st) {
  parallel::set_threads(static_cast<int>(st.range(1)));
  const Grid g = grid_for(st);
  const ScalarField a = noise(g, 2), f = noise(g, 3);
  for (auto _ : st) benchmark::DoNotOptimize(div_coef_grad(a, f));
  st.SetItemsProcessed(st.iterations() * static_cast<std::int64_t>(f.size()));
  parallel::set_threads(1);
}

void BM_GradientReference(benchmark::State& st) {
  const ScalarField f = noise(grid_for(st), 4);
  for (auto _ : st) benchmark::DoNotOptimize(reference::gradient(f));
  st.SetItemsProcessed(st.iterations() * static_cast<std::int64_t>(f.size()));
}

void BM_Gradient(benchmark::State& st) {
  parallel::set_threads(static_cast<int>(st.range(1)));
  const ScalarField f = noise(grid_for(st), 4);
  for (auto _ : st) benchmark::DoNotOptimize(gradient(f));
  st.SetItemsProcessed(st.iterations() * static_cast<std::int64_t>(f.size()));
  parallel::set_threads(1);
}

void BM_Step(benchmark::State& st) {
  parallel::set_threads(static_cast<int>(st.range(1)));
  const CaseSpec spec = case_params("B");
  const State s0 = init_state(spec, grid_for(st));
  for (auto _ : st) benchmark::DoNotOptimize(step(s0, spec.params, StepConfig{}));
  parallel::set_threads(1);
}

void sizes(benchmark::internal::Benchmark* b) {
  for (int n : {128, 512}) b->Args({n, 0});
}

void sizes_threads(benchmark::internal::Benchmark* b) {
  for (int n : {128, 512}) {
    for (int t : {1, 2, 4}) b->Args({n, t});
  }
}

}  // namespace

BENCHMARK(BM_LaplacianReference)->Apply(sizes);
BENCHMARK(BM_Laplacian)->Apply(sizes_threads);
BENCHMARK(BM_DivCoefGradReference)->Apply(sizes);
BENCHMARK(BM_DivCoefGrad)->Apply(sizes_threads);
BENCHMARK(BM_GradientReference)->Apply(sizes);
BENCHMARK(BM_Gradient)->Apply(sizes_threads);
BENCHMARK(BM_Step)->Apply(sizes_threads)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
