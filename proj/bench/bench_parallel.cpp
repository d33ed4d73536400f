// Serial reference vs OpenMP kernels.
#include <benchmark/benchmark.h>

#include <cmath>
#include <vector>

#include "ibs/parallel.hpp"
#include "ibs/polylog.hpp"
#include "ibs/quadrature.hpp"
#include "ibs/verify.hpp"

namespace {

std::vector<ibs::SeriesParams> grid(int n, int points) {
  std::vector<ibs::SeriesParams> g;
  for (int i = 0; i < points; ++i) g.push_back({n, 1, -6.5 + 13.0 * i / (points - 1)});
  return g;
}

void BM_grid_serial(benchmark::State& state) {
  const auto g = grid(static_cast<int>(state.range(0)), 256);
  for (auto _ : state) benchmark::DoNotOptimize(ibs::evaluate_grid_serial(g, {}));
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(g.size()));
}

void BM_grid_parallel(benchmark::State& state) {
  const auto g = grid(static_cast<int>(state.range(0)), 256);
  for (auto _ : state) benchmark::DoNotOptimize(ibs::evaluate_grid(g, {}));
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(g.size()));
}

// Li_3 integrand at the edge of the disk: costly enough per node to amortize threads.
ibs::cplx integrand(double t) { return ibs::li(3, std::polar(0.999, 2.0) * t) / (1.0 + t); }

void BM_composite_serial(benchmark::State& state) {
  const int panels = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(ibs::integrate_composite_serial(integrand, 0.0, 1.0, panels));
}

void BM_composite_parallel(benchmark::State& state) {
  const int panels = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(ibs::integrate_composite(integrand, 0.0, 1.0, panels));
}

void BM_verify_all(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(ibs::run_all());
}

}  // namespace

BENCHMARK(BM_grid_serial)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_grid_parallel)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_composite_serial)->Arg(64)->Arg(1024)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_composite_parallel)->Arg(64)->Arg(1024)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_verify_all)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
