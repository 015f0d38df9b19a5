#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <span>
#include <utility>
#include <vector>

#include <Eigen/Cholesky>

#include "rtmbe/errors.hpp"
#include "rtmbe/types.hpp"

namespace rtmbe {

/// Gaussian state estimate.
template <int N>
struct GaussianBelief {
  Vector<N> mean = Vector<N>::Zero();
  Matrix<N, N> cov = Matrix<N, N>::Identity();
};

/// Merwe-scaled unscented transform settings. The defaults give zero weight
/// to the central point and 1/(2n) to the rest.
struct UtConfig {
  double alpha = 1.0;
  double beta = 0.0;
  double kappa = 0.0;

  double lambda(int n) const { return alpha * alpha * (n + kappa) - n; }
};

template <int N>
struct SigmaPointSet {
  static constexpr int kCount = 2 * N + 1;
  std::array<Vector<N>, kCount> points;
  std::array<double, kCount> wm;
  std::array<double, kCount> wc;
};

/// Diagonal jitter levels tried, in order, when the covariance factorization
/// fails.
inline constexpr std::array<double, 3> kCholeskyJitter{1e-12, 1e-10, 1e-8};

template <int N>
Matrix<N, N> symmetrized(const Matrix<N, N>& m) {
  return 0.5 * (m + m.transpose());
}

/// Symmetric 2n+1 sigma points: mean, mean +/- columns of L with
/// L L^T = (n + lambda) cov. Throws CholeskyFailure if cov is not PSD even
/// after jitter.
template <int N>
SigmaPointSet<N> sigma_points(const GaussianBelief<N>& belief, const UtConfig& cfg) {
  const double lambda = cfg.lambda(N);
  const double scale = N + lambda;
  if (!(scale > 0.0)) throw InvalidParameter("unscented transform needs n + lambda > 0");
  if (!belief.cov.allFinite() || !belief.mean.allFinite()) {
    throw CholeskyFailure("belief is not finite");
  }

  Eigen::LLT<Matrix<N, N>> llt(scale * belief.cov);
  for (std::size_t i = 0; llt.info() != Eigen::Success; ++i) {
    if (i == kCholeskyJitter.size()) {
      throw CholeskyFailure("covariance is not positive semidefinite");
    }
    llt.compute(scale * (belief.cov + kCholeskyJitter[i] * Matrix<N, N>::Identity()));
  }
  const Matrix<N, N> L = llt.matrixL();

  SigmaPointSet<N> s;
  s.points[0] = belief.mean;
  for (int i = 0; i < N; ++i) {
    s.points[1 + i] = belief.mean + L.col(i);
    s.points[1 + N + i] = belief.mean - L.col(i);
  }
  s.wm[0] = lambda / scale;
  s.wc[0] = s.wm[0] + (1.0 - cfg.alpha * cfg.alpha + cfg.beta);
  for (int i = 1; i < SigmaPointSet<N>::kCount; ++i) {
    s.wm[i] = 1.0 / (2.0 * scale);
    s.wc[i] = s.wm[i];
  }
  return s;
}

/// Weighted mean of a point set.
template <int N, int M>
Vector<M> weighted_mean(const std::array<Vector<M>, 2 * N + 1>& pts,
                        const std::array<double, 2 * N + 1>& w) {
  Vector<M> m = Vector<M>::Zero();
  for (std::size_t i = 0; i < pts.size(); ++i) m += w[i] * pts[i];
  return m;
}

/// Filter output over a whole trajectory. predicted[k] is the belief before
/// measurement k was applied, filtered[k] the belief after.
template <int N>
struct FilterSolution {
  std::vector<GaussianBelief<N>> filtered;
  std::vector<GaussianBelief<N>> predicted;
  double ll = 0.0;
};

/// Unscented Kalman filter with additive process and measurement noise.
///
/// `Dynamics` is the discrete-time map, called as f(x, u, t) and returning
/// the state one sample later. `Measurement` is called as h(x, u). Both must
/// operate on fixed-size vectors; predict() and correct() then perform no
/// dynamic allocation.
///
/// Not thread-safe: predict/correct mutate the carried belief.
template <int Nx, int Nu, int Ny, class Dynamics, class Measurement>
class UnscentedKalmanFilter {
 public:
  using State = Vector<Nx>;
  using Input = Vector<Nu>;
  using Output = Vector<Ny>;
  using Belief = GaussianBelief<Nx>;
  using Solution = FilterSolution<Nx>;

  UnscentedKalmanFilter(Dynamics dynamics, Measurement measurement, double Ts,
                        const Matrix<Nx, Nx>& Q, const Matrix<Ny, Ny>& R, Belief initial,
                        UtConfig ut = {}, double t0 = 0.0)
      : dynamics_(std::move(dynamics)),
        measurement_(std::move(measurement)),
        Ts_(Ts),
        Q_(Q),
        R_(R),
        ut_(ut),
        belief_(std::move(initial)),
        t_(t0) {
    if (!(Ts > 0.0)) throw InvalidParameter("sample time Ts must be positive");
    if (!(Nx + ut.lambda(Nx) > 0.0)) {
      throw InvalidParameter("unscented transform needs n + lambda > 0");
    }
    if ((Q - Q.transpose()).cwiseAbs().maxCoeff() > 1e-12) {
      throw InvalidParameter("process noise covariance Q must be symmetric");
    }
    if ((R - R.transpose()).cwiseAbs().maxCoeff() > 1e-12) {
      throw InvalidParameter("measurement noise covariance R must be symmetric");
    }
    if (Eigen::LLT<Matrix<Ny, Ny>>(R).info() != Eigen::Success) {
      throw InvalidParameter("measurement noise covariance R must be positive definite");
    }
  }

  /// Time update: propagate sigma points through the dynamics, add Q.
  void predict(const Input& u) {
    auto s = sigma_points(belief_, ut_);
    for (auto& p : s.points) p = dynamics_(static_cast<const State&>(p), u, t_);

    const State mean = weighted_mean<Nx, Nx>(s.points, s.wm);
    Matrix<Nx, Nx> cov = Q_;
    for (int i = 0; i < SigmaPointSet<Nx>::kCount; ++i) {
      const State d = s.points[i] - mean;
      cov.noalias() += s.wc[i] * d * d.transpose();
    }
    belief_.mean = mean;
    belief_.cov = symmetrized<Nx>(cov);
    t_ += Ts_;
  }

  /// Measurement update with y. Returns the log predictive density of y,
  /// -0.5 (v' S^-1 v + log det S + ny log 2 pi).
  double correct(const Input& u, const Output& y) {
    const auto s = sigma_points(belief_, ut_);
    std::array<Output, SigmaPointSet<Nx>::kCount> ys;
    for (int i = 0; i < SigmaPointSet<Nx>::kCount; ++i) ys[i] = measurement_(s.points[i], u);

    const Output y_hat = weighted_mean<Nx, Ny>(ys, s.wm);
    Matrix<Ny, Ny> S = R_;
    Matrix<Nx, Ny> C = Matrix<Nx, Ny>::Zero();
    for (int i = 0; i < SigmaPointSet<Nx>::kCount; ++i) {
      const Output dy = ys[i] - y_hat;
      const State dx = s.points[i] - belief_.mean;
      S.noalias() += s.wc[i] * dy * dy.transpose();
      C.noalias() += s.wc[i] * dx * dy.transpose();
    }
    S = symmetrized<Ny>(S);
    if (!S.allFinite()) throw SingularInnovation("innovation covariance is not finite");

    const Eigen::LLT<Matrix<Ny, Ny>> llt(S);
    if (llt.info() != Eigen::Success) {
      throw SingularInnovation("innovation covariance is not positive definite");
    }
    const Output innovation = y - y_hat;
    // K = C S^-1, computed as (S^-1 C^T)^T since S is symmetric.
    const Matrix<Nx, Ny> K = llt.solve(C.transpose()).transpose();

    belief_.mean += K * innovation;
    belief_.cov = symmetrized<Nx>(belief_.cov - K * S * K.transpose());

    const Output whitened = llt.matrixL().solve(innovation);
    const double logdet = 2.0 * llt.matrixLLT().diagonal().array().log().sum();
    return -0.5 * (whitened.squaredNorm() + logdet +
                   Ny * std::log(2.0 * std::numbers::pi));
  }

  /// Runs correct-then-predict over paired sequences, starting from a copy of
  /// this filter; the filter itself is left untouched.
  Solution forward_trajectory(std::span<const Input> us, std::span<const Output> ys) const {
    if (us.size() != ys.size()) {
      throw LengthMismatch("Data-length mismatch: " + std::to_string(us.size()) +
                           " inputs vs " + std::to_string(ys.size()) + " measurements");
    }
    UnscentedKalmanFilter kf = *this;
    Solution sol;
    sol.filtered.reserve(us.size());
    sol.predicted.reserve(us.size());
    for (std::size_t k = 0; k < us.size(); ++k) {
      try {
        sol.predicted.push_back(kf.belief_);
        sol.ll += kf.correct(us[k], ys[k]);
        sol.filtered.push_back(kf.belief_);
        kf.predict(us[k]);
      } catch (const CholeskyFailure&) {
        throw CholeskyFailure("covariance is not positive semidefinite", k);
      } catch (const SingularInnovation&) {
        throw SingularInnovation("innovation covariance is not positive definite", k);
      }
    }
    return sol;
  }

  const Belief& belief() const noexcept { return belief_; }
  void set_belief(const Belief& b) { belief_ = b; }
  double time() const noexcept { return t_; }
  double sample_time() const noexcept { return Ts_; }
  const Matrix<Nx, Nx>& process_noise() const noexcept { return Q_; }
  const Matrix<Ny, Ny>& measurement_noise() const noexcept { return R_; }
  const UtConfig& ut_config() const noexcept { return ut_; }

 private:
  Dynamics dynamics_;
  Measurement measurement_;
  double Ts_;
  Matrix<Nx, Nx> Q_;
  Matrix<Ny, Ny> R_;
  UtConfig ut_;
  Belief belief_;
  double t_;
};

template <int Nx, int Nu, int Ny, class Dynamics, class Measurement>
auto make_ukf(Dynamics dynamics, Measurement measurement, double Ts, const Matrix<Nx, Nx>& Q,
              const Matrix<Ny, Ny>& R, GaussianBelief<Nx> initial, UtConfig ut = {}) {
  return UnscentedKalmanFilter<Nx, Nu, Ny, Dynamics, Measurement>(
      std::move(dynamics), std::move(measurement), Ts, Q, R, std::move(initial), ut);
}

}  // namespace rtmbe
