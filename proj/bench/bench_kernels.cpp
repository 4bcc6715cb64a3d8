#include <benchmark/benchmark.h>

#include <random>

#include "iet/kernels.hpp"

namespace {

std::vector<iet::SuspensionDiagram> random_diagrams(int count, int d) {
  std::mt19937_64 gen(7);
  std::uniform_int_distribution<int> len(1, 20), height(-20, 20);
  std::vector<iet::SuspensionDiagram> out;
  for (int k = 0; k < count; ++k) {
    std::vector<iet::Scalar> a(d), b(d);
    for (int i = 0; i < d; ++i) {
      a[i] = iet::Scalar(len(gen), 7);
      b[i] = iet::Scalar(height(gen), 5);
    }
    out.emplace_back(iet::random_irreducible(d, gen()), a, b);
  }
  return out;
}

void BM_SelfIntersectsBatch(benchmark::State& state) {
  const auto diagrams = random_diagrams(512, static_cast<int>(state.range(1)));
  const iet::ExecutionPolicy policy{state.range(0) ? iet::Execution::Parallel : iet::Execution::Serial};
  for (auto _ : state) benchmark::DoNotOptimize(iet::self_intersects_batch(diagrams, policy));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(diagrams.size()));
}
BENCHMARK(BM_SelfIntersectsBatch)->ArgsProduct({{0, 1}, {4, 8, 16}})->ArgNames({"parallel", "d"});

void BM_MahlerScan(benchmark::State& state) {
  const int d = static_cast<int>(state.range(1));
  const auto spec = iet::CurveSpec::mahler(d);
  const auto sigma = iet::Permutation::reversal(d);
  const auto grid = iet::uniform_grid(0.1, 10.0, 256);
  const iet::ExecutionPolicy policy{state.range(0) ? iet::Execution::Parallel : iet::Execution::Serial};
  for (auto _ : state) benchmark::DoNotOptimize(iet::scan_curve(spec, sigma, grid, policy));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(grid.size()));
}
BENCHMARK(BM_MahlerScan)->ArgsProduct({{0, 1}, {4, 8}})->ArgNames({"parallel", "d"});

}  // namespace

BENCHMARK_MAIN();
