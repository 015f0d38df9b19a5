#pragma once

#include <cmath>
#include <filesystem>
#include <iosfwd>
#include <string>

#include "rtmbe/types.hpp"

namespace rtmbe {

/// Physical constants of the exothermic CSTR with reactions A->B->C and
/// 2A->D. Rate constants follow k_i = k_i0 * exp(E_i / (TR + 273.15)), so the
/// activation coefficients E_i carry their own sign (negative for the usual
/// Arrhenius form).
struct ModelParameters {
  double k10 = 0.0;   ///< [1/h]
  double k20 = 0.0;   ///< [1/h]
  double k30 = 0.0;   ///< [L/(mol h)]
  double E1 = 0.0;    ///< [K]
  double E2 = 0.0;    ///< [K]
  double E3 = 0.0;    ///< [K]
  double dH1 = 0.0;   ///< [kJ/mol]
  double dH2 = 0.0;   ///< [kJ/mol]
  double dH3 = 0.0;   ///< [kJ/mol]
  double rho = 0.0;   ///< [kg/L]
  double Cp = 0.0;    ///< [kJ/(kg K)]
  double kwAR = 0.0;  ///< [kJ/(h K)]
  double VR = 0.0;    ///< [L]
  double mK = 0.0;    ///< [kg]
  double CpK = 0.0;   ///< [kJ/(kg K)]
  double cA0 = 0.0;   ///< [mol/L]
  double Tin = 0.0;   ///< [degC]

  friend bool operator==(const ModelParameters&, const ModelParameters&) = default;
};

/// Benchmark parameter set. Mirrors data/cstr_default.conf.
ModelParameters cstr_default_parameters();

/// Nominal operating input u* = (F, Qdot) of the benchmark.
InputVector cstr_nominal_input();

/// Steady state x* of the default model under cstr_nominal_input(), frozen
/// from an offline Newton solve (tests/oracles/cstr_steady_state.py).
StateVector cstr_steady_state();

/// Throws InvalidParameter if a field that must be positive is not, or any
/// field is non-finite.
void validate(const ModelParameters& p);

/// Continuous-time right-hand side dx/dt = f(x, u, p, t). Time is unused (the
/// model is autonomous) but kept for the generic dynamics signature.
inline StateVector cstr_derivative(const StateVector& x, const InputVector& u,
                                   const ModelParameters& p, double /*t*/) {
  const double cA = x[0];
  const double cB = x[1];
  const double TR = x[2];
  const double TK = x[3];
  const double F = u[0];
  const double Qdot = u[1];

  const double T_abs = TR + 273.15;
  const double k1 = p.k10 * std::exp(p.E1 / T_abs);
  const double k2 = p.k20 * std::exp(p.E2 / T_abs);
  const double k3 = p.k30 * std::exp(p.E3 / T_abs);

  const double r1 = k1 * cA;
  const double r2 = k2 * cB;
  const double r3 = k3 * cA * cA;

  StateVector dx;
  dx[0] = F * (p.cA0 - cA) - r1 - r3;
  dx[1] = -F * cB + r1 - r2;
  dx[2] = F * (p.Tin - TR) + (p.kwAR / (p.rho * p.Cp * p.VR)) * (TK - TR) -
          (r1 * p.dH1 + r2 * p.dH2 + r3 * p.dH3) / (p.rho * p.Cp);
  dx[3] = (Qdot + p.kwAR * (TR - TK)) / (p.mK * p.CpK);
  return dx;
}

/// All four states are measured directly.
inline MeasurementVector cstr_measurement(const StateVector& x) { return x; }

/// Adapter with the generic (x, u, p, t) signature used by the integrator.
struct CstrRhs {
  StateVector operator()(const StateVector& x, const InputVector& u,
                         const ModelParameters& p, double t) const {
    return cstr_derivative(x, u, p, t);
  }
};

// Config file: one `name = value` per line, `#` starts a comment. Keys not
// present keep their value from `base`; unknown or repeated keys are errors.

ModelParameters parse_parameters(std::istream& in,
                                 const ModelParameters& base = cstr_default_parameters());
ModelParameters load_parameters(const std::filesystem::path& path,
                                const ModelParameters& base = cstr_default_parameters());
/// Writes every field with round-trip precision; parse_parameters inverts it.
std::string format_parameters(const ModelParameters& p);

}  // namespace rtmbe
