#pragma once

#include "rtmbe/dynamics.hpp"
#include "rtmbe/integrator.hpp"
#include "rtmbe/ukf.hpp"

namespace rtmbe {

/// Default filter and simulation sample time [h].
inline constexpr double kDefaultSampleTime = 0.005;
inline constexpr int kDefaultSubsteps = 1;

/// RK4-discretized CSTR bound to a parameter set: x(t + Ts) = F(x(t), u, t).
struct CstrDiscreteModel {
  DiscreteDynamics<CstrRhs> step;
  ModelParameters params;

  StateVector operator()(const StateVector& x, const InputVector& u, double t) const {
    return step(x, u, params, t);
  }
};

struct CstrMeasurementMap {
  MeasurementVector operator()(const StateVector& x, const InputVector&) const {
    return cstr_measurement(x);
  }
};

using CstrFilter =
    UnscentedKalmanFilter<kStateDim, kInputDim, kMeasurementDim, CstrDiscreteModel,
                          CstrMeasurementMap>;

/// Sensor standard deviations (0.05, 0.05, 0.5, 0.5) in model units.
MeasurementVector default_measurement_std();
/// R = diag(default_measurement_std()^2).
MeasurementMatrix default_measurement_noise();
/// Q = diag(1e-4, 1e-4, 1e-2, 1e-2): 1e-4 scaled by the squared magnitude
/// of each state's units (concentrations ~1, temperatures ~10).
StateMatrix default_process_noise();
/// Mean at the steady-state fixture, cov = diag(0.1^2, 0.1^2, 1, 1).
GaussianBelief<kStateDim> default_initial_belief();

struct CstrFilterConfig {
  ModelParameters params = cstr_default_parameters();
  double Ts = kDefaultSampleTime;
  int substeps = kDefaultSubsteps;
  UtConfig ut{};
  GaussianBelief<kStateDim> initial = default_initial_belief();
  StateMatrix Q = default_process_noise();
  MeasurementMatrix R = default_measurement_noise();
};

CstrFilter make_cstr_filter(const CstrFilterConfig& cfg = {});

}  // namespace rtmbe
