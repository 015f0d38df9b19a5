#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "rtmbe/cstr_filter.hpp"

namespace rtmbe {

struct SimulationConfig {
  std::size_t n = 0;
  std::uint64_t seed = 0;
  double Ts = kDefaultSampleTime;
  int substeps = kDefaultSubsteps;
  ModelParameters params = cstr_default_parameters();
  StateVector x0 = cstr_steady_state();
  InputVector u_nominal = cstr_nominal_input();
  MeasurementVector noise_std = default_measurement_std();

  // Piecewise-constant excitation: every `hold` samples, F and Qdot are
  // redrawn uniformly within these multiples of their nominal values.
  std::size_t hold = 50;
  double F_low = 0.85;
  double F_high = 1.15;
  double Q_low = 0.9;
  double Q_high = 1.1;
};

/// xs[k] is the true state at t = k Ts, us[k] the input held over
/// [k Ts, (k+1) Ts), ys[k] = xs[k] + noise.
struct SimulatedData {
  std::vector<InputVector> us;
  std::vector<MeasurementVector> ys;
  std::vector<StateVector> xs;
};

/// Deterministic in cfg. Draw order per sample: (F, Qdot) factors when the
/// hold period starts, then four measurement-noise normals.
SimulatedData simulate_cstr(const SimulationConfig& cfg);

}  // namespace rtmbe
