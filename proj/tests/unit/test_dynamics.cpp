#include <gtest/gtest.h>

#include <sstream>

#include <Eigen/Dense>

#include "rtmbe/dynamics.hpp"
#include "rtmbe/errors.hpp"
#include "rtmbe/integrator.hpp"

namespace rtmbe {
namespace {

// Independent steady-state solve: settle by integration, then damped Newton
// with a central-difference Jacobian.
StateVector solve_steady_state(const ModelParameters& p, const InputVector& u) {
  StateVector x(2.0, 1.0, 110.0, 110.0);
  for (int i = 0; i < 20000; ++i) x = rk4_step(CstrRhs{}, x, u, p, 0.0, 1e-4);

  for (int it = 0; it < 50; ++it) {
    const StateVector r = cstr_derivative(x, u, p, 0.0);
    StateMatrix J;
    for (int j = 0; j < 4; ++j) {
      const double h = 1e-6 * std::max(1.0, std::abs(x[j]));
      StateVector e = StateVector::Zero();
      e[j] = h;
      J.col(j) = (cstr_derivative(x + e, u, p, 0.0) - cstr_derivative(x - e, u, p, 0.0)) / (2 * h);
    }
    const StateVector dx = J.partialPivLu().solve(-r);
    double step = 1.0;
    while (cstr_derivative(x + step * dx, u, p, 0.0).norm() > r.norm() && step > 1e-6) step *= 0.5;
    x += step * dx;
  }
  return x;
}

TEST(CstrDerivative, VanishesAtSteadyStateFixture) {
  const auto f = cstr_derivative(cstr_steady_state(), cstr_nominal_input(),
                                 cstr_default_parameters(), 0.0);
  EXPECT_LE(f.cwiseAbs().maxCoeff(), 1e-8) << f.transpose();
}

TEST(CstrDerivative, FixtureMatchesNewtonSolve) {
  const auto x = solve_steady_state(cstr_default_parameters(), cstr_nominal_input());
  EXPECT_LE((x - cstr_steady_state()).cwiseAbs().maxCoeff(), 1e-9) << x.transpose();
}

TEST(CstrDerivative, ZeroWithoutReactionsExchangeOrFlow) {
  auto p = cstr_default_parameters();
  p.k10 = p.k20 = p.k30 = 0.0;
  p.kwAR = 0.0;
  const auto f = cstr_derivative(StateVector(1.3, 0.4, 90.0, 80.0), InputVector(0.0, 0.0), p, 0.0);
  EXPECT_EQ(f, StateVector::Zero());
}

TEST(CstrDerivative, ConcentrationRowsAffineInFlow) {
  const auto p = cstr_default_parameters();
  const StateVector x(1.7, 0.9, 105.0, 101.0);
  const double F = 12.0, Q = -900.0;
  const auto f = [&](double F_, double Q_) {
    return cstr_derivative(x, InputVector(F_, Q_), p, 0.0);
  };
  const StateVector lhs = f(2 * F, Q) - f(F, Q);
  const StateVector rhs = f(F, 0) - f(0, 0);
  EXPECT_NEAR(lhs[0], rhs[0], 1e-10);
  EXPECT_NEAR(lhs[1], rhs[1], 1e-10);
}

TEST(CstrDerivative, AffineInFlowThreePointCollinearity) {
  const auto p = cstr_default_parameters();
  const StateVector x = cstr_steady_state();
  for (double Q : {-1500.0, -1113.5, 0.0}) {
    const auto a = cstr_derivative(x, InputVector(5.0, Q), p, 0.0);
    const auto b = cstr_derivative(x, InputVector(10.0, Q), p, 0.0);
    const auto c = cstr_derivative(x, InputVector(20.0, Q), p, 0.0);
    // Equal F spacing 5 then 10: (c - b) = 2 (b - a).
    EXPECT_LE(((c - b) - 2.0 * (b - a)).cwiseAbs().maxCoeff(), 1e-9);
  }
}

TEST(CstrDerivative, DeterministicAndPure) {
  const auto p = cstr_default_parameters();
  const StateVector x(2.5, 0.7, 120.0, 115.0);
  const InputVector u(10.0, -500.0);
  const auto a = cstr_derivative(x, u, p, 0.3);
  const auto b = cstr_derivative(x, u, p, 0.3);
  EXPECT_EQ(0, std::memcmp(a.data(), b.data(), sizeof(double) * 4));
}

TEST(CstrMeasurement, IsIdentity) {
  for (const StateVector x : {StateVector(1, 2, 3, 4), cstr_steady_state(), StateVector::Zero().eval()}) {
    EXPECT_EQ(cstr_measurement(x), x);
  }
}

TEST(DefaultParameters, PositiveAndDeterministic) {
  const auto p = cstr_default_parameters();
  EXPECT_GT(p.VR, 0.0);
  EXPECT_EQ(p, cstr_default_parameters());
  EXPECT_NO_THROW(validate(p));
}

TEST(ParameterConfig, CommittedFileMatchesCompiledDefaults) {
  const auto p = load_parameters(RTMBE_DATA_DIR "/cstr_default.conf", ModelParameters{});
  EXPECT_EQ(p, cstr_default_parameters());
}

TEST(ParameterConfig, FormatParsesBack) {
  auto p = cstr_default_parameters();
  p.k10 *= 1.000000000000001;
  p.Tin = 97.125;
  std::istringstream in(format_parameters(p));
  EXPECT_EQ(parse_parameters(in, ModelParameters{}), p);
}

TEST(ParameterConfig, CommentsBlankLinesAndPartialOverride) {
  std::istringstream in("# header\n\n  VR = 12.5   # litres\nTin=100\n");
  const auto p = parse_parameters(in);
  EXPECT_EQ(p.VR, 12.5);
  EXPECT_EQ(p.Tin, 100.0);
  EXPECT_EQ(p.k10, cstr_default_parameters().k10);
}

TEST(ParameterConfig, RejectsUnknownKey) {
  std::istringstream in("VR = 10\nvolume = 3\n");
  EXPECT_THROW(parse_parameters(in), ConfigError);
}

TEST(ParameterConfig, RejectsMalformedLines) {
  for (const char* text : {"VR 10\n", "VR = ten\n", "VR = 10 L\n", "VR = 1\nVR = 2\n", "VR = -1\n"}) {
    std::istringstream in(text);
    EXPECT_THROW(parse_parameters(in), ConfigError) << text;
  }
}

TEST(ParameterConfig, SignFreeFieldsMayBeNegative) {
  std::istringstream in("E1 = -1\ndH1 = -3\n");
  EXPECT_NO_THROW(parse_parameters(in));
}

TEST(ParameterConfig, MissingFileIsFileError) {
  EXPECT_THROW(load_parameters("/nonexistent/params.conf"), FileError);
}

}  // namespace
}  // namespace rtmbe
