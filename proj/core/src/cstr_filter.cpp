#include "rtmbe/cstr_filter.hpp"

namespace rtmbe {

MeasurementVector default_measurement_std() { return MeasurementVector(0.05, 0.05, 0.5, 0.5); }

MeasurementMatrix default_measurement_noise() {
  return default_measurement_std().array().square().matrix().asDiagonal();
}

StateMatrix default_process_noise() {
  return StateVector(1e-4, 1e-4, 1e-2, 1e-2).asDiagonal();
}

GaussianBelief<kStateDim> default_initial_belief() {
  GaussianBelief<kStateDim> b;
  b.mean = cstr_steady_state();
  b.cov = StateVector(0.1 * 0.1, 0.1 * 0.1, 1.0, 1.0).asDiagonal();
  return b;
}

CstrFilter make_cstr_filter(const CstrFilterConfig& cfg) {
  validate(cfg.params);
  CstrDiscreteModel model{discretize(CstrRhs{}, cfg.Ts, cfg.substeps), cfg.params};
  return CstrFilter(std::move(model), CstrMeasurementMap{}, cfg.Ts, cfg.Q, cfg.R, cfg.initial,
                    cfg.ut);
}

}  // namespace rtmbe
