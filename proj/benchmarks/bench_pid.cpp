#include <benchmark/benchmark.h>

#include "rtmbe/pid.hpp"

namespace {

void BM_PidCalculateControl(benchmark::State& state) {
  auto p = rtmbe::default_pid_parameters();
  p.Td = 0.2;
  p.umin = -1.0;
  p.umax = 1.0;
  rtmbe::PidController pid(p);
  double y = 0.0;
  for (auto _ : state) {
    const double u = pid.calculate_control(1.0, y, 0.0);
    y += 0.01 * (u - y);
    benchmark::DoNotOptimize(u);
  }
}
BENCHMARK(BM_PidCalculateControl);

void BM_PidSetK(benchmark::State& state) {
  rtmbe::PidController pid(rtmbe::default_pid_parameters());
  double K = 1.0;
  for (auto _ : state) {
    K = K == 1.0 ? 2.0 : 1.0;
    benchmark::DoNotOptimize(pid.try_set_K(K, 1.0, 0.5));
  }
}
BENCHMARK(BM_PidSetK);

}  // namespace
