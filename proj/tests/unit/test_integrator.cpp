#include <gtest/gtest.h>

#include <cmath>
#include <cstring>

#include "rtmbe/cstr_filter.hpp"
#include "rtmbe/integrator.hpp"

namespace rtmbe {
namespace {

struct NoParams {};

const auto decay = [](double x, double, NoParams, double) { return -x; };

// Degree-4 Taylor polynomial of exp(-h): what RK4 produces on x' = -x.
double taylor4(double h) { return 1.0 - h + h * h / 2.0 - h * h * h / 6.0 + h * h * h * h / 24.0; }

TEST(Rk4Step, ZeroFieldIsIdentity) {
  const auto zero = [](const Vector<4>&, double, NoParams, double) -> Vector<4> {
    return Vector<4>::Zero();
  };
  const Vector<4> x(1, 2, 3, 4);
  EXPECT_EQ(rk4_step(zero, x, 0.0, NoParams{}, 0.0, 0.1), x);
}

TEST(Rk4Step, LinearDecayMatchesTaylorPolynomial) {
  const double x1 = rk4_step(decay, 1.0, 0.0, NoParams{}, 0.0, 0.1);
  EXPECT_NEAR(x1, taylor4(0.1), 1e-15);
  EXPECT_NEAR(x1, 0.90483750, 1e-10);
}

TEST(Rk4Step, ExactForPolynomialTimeDependence) {
  const auto ramp = [](double, double, NoParams, double t) { return t; };
  EXPECT_DOUBLE_EQ(rk4_step(ramp, 0.0, 0.0, NoParams{}, 0.0, 1.0), 0.5);
  const auto cubic = [](double, double, NoParams, double t) { return 4.0 * t * t * t; };
  EXPECT_DOUBLE_EQ(rk4_step(cubic, 0.0, 0.0, NoParams{}, 0.0, 1.0), 1.0);
  const auto constant = [](double, double, NoParams, double) { return 3.0; };
  EXPECT_DOUBLE_EQ(rk4_step(constant, 1.0, 0.0, NoParams{}, 0.0, 0.25), 1.75);
}

TEST(Rk4Step, FourthOrderConvergence) {
  const double horizon = 1.0;
  std::vector<double> hs{0.1, 0.05, 0.025, 0.0125};
  std::vector<double> errors;
  for (double h : hs) {
    const int steps = static_cast<int>(std::lround(horizon / h));
    double x = 1.0;
    for (int i = 0; i < steps; ++i) x = rk4_step(decay, x, 0.0, NoParams{}, i * h, h);
    errors.push_back(std::abs(x - std::exp(-horizon)));
  }
  // Least-squares slope of log(error) against log(h).
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < hs.size(); ++i) {
    mx += std::log(hs[i]) / hs.size();
    my += std::log(errors[i]) / hs.size();
  }
  double sxy = 0, sxx = 0;
  for (std::size_t i = 0; i < hs.size(); ++i) {
    sxy += (std::log(hs[i]) - mx) * (std::log(errors[i]) - my);
    sxx += (std::log(hs[i]) - mx) * (std::log(hs[i]) - mx);
  }
  EXPECT_NEAR(sxy / sxx, 4.0, 0.2);
}

TEST(Discretize, SingleSubstepOnZeroFieldIsIdentity) {
  const auto zero = [](double, double, NoParams, double) { return 0.0; };
  const auto step = discretize(zero, 0.3, 1);
  EXPECT_EQ(step(2.5, 0.0, NoParams{}, 0.0), 2.5);
}

TEST(Discretize, TwoSubstepsComposeSingleStepOracle) {
  const auto step = discretize(decay, 0.2, 2);
  const double x = step(1.0, 0.0, NoParams{}, 0.0);
  EXPECT_NEAR(x, taylor4(0.1) * taylor4(0.1), 1e-15);
  EXPECT_NEAR(x, 0.8187309014, 1e-10);
  // Within RK4 truncation of the exact exp(-0.2).
  EXPECT_NEAR(x, std::exp(-0.2), 2e-7);
}

TEST(Discretize, EqualsCompositionOfSingleSubsteps) {
  const auto p = cstr_default_parameters();
  const StateVector x0(2.3, 1.0, 118.0, 111.0);
  const InputVector u(15.0, -1200.0);
  for (int m : {1, 2, 3, 7}) {
    const double Ts = 0.01;
    const auto whole = discretize(CstrRhs{}, Ts, m);
    const auto part = discretize(CstrRhs{}, Ts / m, 1);
    StateVector x = x0;
    double t = 0.25;
    for (int i = 0; i < m; ++i) {
      x = part(x, u, p, t);
      t += Ts / m;
    }
    const StateVector y = whole(x0, u, p, 0.25);
    EXPECT_EQ(0, std::memcmp(x.data(), y.data(), sizeof(double) * 4)) << "m = " << m;
  }
}

// Gap between one RK4 step and four substeps over one sample, starting 4 degC
// off the steady state. One-step truncation is O(Ts^5), so the gap stays
// below C Ts^4 and drops ~32x when Ts halves.
double substep_gap(double Ts) {
  const auto p = cstr_default_parameters();
  const StateVector x0 = cstr_steady_state() + StateVector(0.3, -0.2, 4.0, -3.0);
  const InputVector u = cstr_nominal_input();
  const auto coarse = discretize(CstrRhs{}, Ts, 1)(x0, u, p, 0.0);
  const auto fine = discretize(CstrRhs{}, Ts, 4)(x0, u, p, 0.0);
  return (coarse - fine).cwiseAbs().maxCoeff();
}

TEST(Discretize, CstrSubstepGapIsFourthOrderSmall) {
  const double Ts = 1e-3;
  constexpr double C = 1e6;  // stiffest mode ~118/h sets the scale
  EXPECT_LE(substep_gap(Ts), C * std::pow(Ts, 4));
  EXPECT_GE(substep_gap(Ts) / substep_gap(Ts / 2), 16.0);
}

TEST(Discretize, FourSubstepsAreCloserToReference) {
  const auto p = cstr_default_parameters();
  const StateVector x0 = cstr_steady_state() + StateVector(0.3, -0.2, 4.0, -3.0);
  const InputVector u = cstr_nominal_input();
  const double Ts = 1e-3;
  const auto coarse = discretize(CstrRhs{}, Ts, 1)(x0, u, p, 0.0);
  const auto fine = discretize(CstrRhs{}, Ts, 4)(x0, u, p, 0.0);
  const auto reference = discretize(CstrRhs{}, Ts, 512)(x0, u, p, 0.0);
  EXPECT_LT((fine - reference).cwiseAbs().maxCoeff(), (coarse - reference).cwiseAbs().maxCoeff());
}

TEST(Discretize, DefaultSampleTimeErrorIsBelowSensorNoise) {
  const auto p = cstr_default_parameters();
  const StateVector x0 = cstr_steady_state() + StateVector(0.3, -0.2, 4.0, -3.0);
  const InputVector u = cstr_nominal_input();
  const auto one = discretize(CstrRhs{}, kDefaultSampleTime, 1)(x0, u, p, 0.0);
  const auto four = discretize(CstrRhs{}, kDefaultSampleTime, 4)(x0, u, p, 0.0);
  const auto noise = default_measurement_std();
  for (int i = 0; i < kStateDim; ++i) {
    EXPECT_LE(std::abs(one[i] - four[i]), 0.01 * noise[i]) << "state " << i;
  }
}

TEST(Discretize, RejectsBadConfiguration) {
  EXPECT_THROW(discretize(decay, 0.0, 1), InvalidParameter);
  EXPECT_THROW(discretize(decay, 0.1, 0), InvalidParameter);
}

}  // namespace
}  // namespace rtmbe
