#include "rtmbe/simulation.hpp"

#include "rtmbe/errors.hpp"
#include "rtmbe/rng.hpp"

namespace rtmbe {

SimulatedData simulate_cstr(const SimulationConfig& cfg) {
  validate(cfg.params);
  if (cfg.hold == 0) throw InvalidParameter("excitation hold period must be positive");
  if ((cfg.noise_std.array() < 0.0).any()) {
    throw InvalidParameter("noise standard deviations must be non-negative");
  }
  const auto step = discretize(CstrRhs{}, cfg.Ts, cfg.substeps);

  SimulatedData out;
  out.us.reserve(cfg.n);
  out.ys.reserve(cfg.n);
  out.xs.reserve(cfg.n);

  SplitMix64 rng(cfg.seed);
  StateVector x = cfg.x0;
  InputVector u = cfg.u_nominal;
  for (std::size_t k = 0; k < cfg.n; ++k) {
    if (k % cfg.hold == 0) {
      u[0] = cfg.u_nominal[0] * rng.uniform(cfg.F_low, cfg.F_high);
      u[1] = cfg.u_nominal[1] * rng.uniform(cfg.Q_low, cfg.Q_high);
    }
    MeasurementVector y = cstr_measurement(x);
    for (int i = 0; i < kMeasurementDim; ++i) y[i] += cfg.noise_std[i] * rng.normal();

    out.xs.push_back(x);
    out.us.push_back(u);
    out.ys.push_back(y);
    x = step(x, u, cfg.params, static_cast<double>(k) * cfg.Ts);
  }
  return out;
}

}  // namespace rtmbe
