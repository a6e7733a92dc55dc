// Serial reference vs OpenMP kernels.

#include <benchmark/benchmark.h>

#include <vector>

#include "hkzeta/counting.hpp"
#include "hkzeta/graph.hpp"
#include "hkzeta/heat_graph.hpp"

using namespace hkzeta;

namespace {

Exec mode(const benchmark::State& state) {
  return state.range(0) == 0 ? Exec::serial : Exec::parallel;
}

void BM_LoopTotals(benchmark::State& state) {
  const Graph g = hypercube_graph(8);
  for (auto _ : state) benchmark::DoNotOptimize(geodesic_loop_totals(g, 24, mode(state)));
  state.SetLabel(state.range(0) == 0 ? "serial" : "parallel");
}
BENCHMARK(BM_LoopTotals)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_EnumerateClosed(benchmark::State& state) {
  const Graph g = petersen_graph();
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerate_closed_geodesics(g, 0, 12, 12, mode(state)));
  }
  state.SetLabel(state.range(0) == 0 ? "serial" : "parallel");
}
BENCHMARK(BM_EnumerateClosed)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_HeatTable(benchmark::State& state) {
  const Graph g = hypercube_graph(8);
  const HeatSeries series(g, 0, 4.0);
  std::vector<double> ts;
  for (int i = 1; i <= 40; ++i) ts.push_back(0.1 * i);
  for (auto _ : state) benchmark::DoNotOptimize(heat_kernel_table(series, ts, mode(state)));
  state.SetLabel(state.range(0) == 0 ? "serial" : "parallel");
}
BENCHMARK(BM_HeatTable)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
