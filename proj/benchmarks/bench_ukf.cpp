#include <benchmark/benchmark.h>

#include "rtmbe/cstr_filter.hpp"
#include "rtmbe/simulation.hpp"

namespace {

using namespace rtmbe;

void BM_CstrDerivative(benchmark::State& state) {
  const auto p = cstr_default_parameters();
  const auto x = cstr_steady_state();
  const auto u = cstr_nominal_input();
  for (auto _ : state) benchmark::DoNotOptimize(cstr_derivative(x, u, p, 0.0));
}
BENCHMARK(BM_CstrDerivative);

void BM_SigmaPoints(benchmark::State& state) {
  const auto b = default_initial_belief();
  for (auto _ : state) benchmark::DoNotOptimize(sigma_points(b, UtConfig{}));
}
BENCHMARK(BM_SigmaPoints);

void BM_UkfPredictCorrect(benchmark::State& state) {
  auto kf = make_cstr_filter();
  const auto u = cstr_nominal_input();
  const MeasurementVector y = cstr_steady_state();
  for (auto _ : state) {
    benchmark::DoNotOptimize(kf.correct(u, y));
    kf.predict(u);
  }
}
BENCHMARK(BM_UkfPredictCorrect);

void BM_ForwardTrajectory(benchmark::State& state) {
  SimulationConfig cfg;
  cfg.n = static_cast<std::size_t>(state.range(0));
  cfg.seed = 42;
  const auto data = simulate_cstr(cfg);
  const auto kf = make_cstr_filter();
  for (auto _ : state) benchmark::DoNotOptimize(kf.forward_trajectory(data.us, data.ys).ll);
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_ForwardTrajectory)->Arg(1000)->Unit(benchmark::kMicrosecond);

}  // namespace
