// Serial reference sweeps against the OpenMP ones.
#include <benchmark/benchmark.h>

#include <numbers>

#include "wgm/oracle.hpp"
#include "wgm/sweep.hpp"

namespace {

const wgm::SystemParams kBase({3.8, 1.0, 1.0, 2.0, 3.5, 0.2, std::numbers::pi});

wgm::AxisSpec delta_axis(int count) { return {wgm::Parameter::delta, -6.0, 6.0, count}; }

void BM_Sweep1dSerial(benchmark::State& state) {
  const auto axis = delta_axis(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(wgm::sweep1d_serial(kBase, axis));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_Sweep1dParallel(benchmark::State& state) {
  const auto axis = delta_axis(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(wgm::sweep1d(kBase, axis));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_Sweep2dSerial(benchmark::State& state) {
  const auto n = static_cast<int>(state.range(0));
  const wgm::AxisSpec theta{wgm::Parameter::theta, 0.0, 2 * std::numbers::pi, n};
  for (auto _ : state) benchmark::DoNotOptimize(wgm::sweep2d_serial(kBase, delta_axis(n), theta, wgm::Quantity::R_f));
  state.SetItemsProcessed(state.iterations() * n * n);
}

void BM_Sweep2dParallel(benchmark::State& state) {
  const auto n = static_cast<int>(state.range(0));
  const wgm::AxisSpec theta{wgm::Parameter::theta, 0.0, 2 * std::numbers::pi, n};
  for (auto _ : state) benchmark::DoNotOptimize(wgm::sweep2d(kBase, delta_axis(n), theta, wgm::Quantity::R_f));
  state.SetItemsProcessed(state.iterations() * n * n);
}

// Cost of one oracle point next to one closed-form point.
void BM_OracleSolve(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(wgm::oracle::compare(kBase, -2.0));
}

void BM_ClosedForm(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(wgm::evaluate(kBase, -2.0));
}

}  // namespace

BENCHMARK(BM_Sweep1dSerial)->Arg(601)->Arg(100001);
BENCHMARK(BM_Sweep1dParallel)->Arg(601)->Arg(100001)->UseRealTime();
BENCHMARK(BM_Sweep2dSerial)->Arg(101)->Arg(601);
BENCHMARK(BM_Sweep2dParallel)->Arg(101)->Arg(601)->UseRealTime();
BENCHMARK(BM_OracleSolve);
BENCHMARK(BM_ClosedForm);

BENCHMARK_MAIN();
