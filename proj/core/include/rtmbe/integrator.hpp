#pragma once

#include <utility>

#include "rtmbe/errors.hpp"

namespace rtmbe {

/// One classical fourth-order Runge-Kutta step of size h with u held
/// constant. `State` may be a scalar or a fixed-size Eigen vector; `f` is
/// called as f(x, u, p, t).
template <class F, class State, class Input, class Params>
State rk4_step(const F& f, const State& x, const Input& u, const Params& p, double t,
               double h) {
  const double half = 0.5 * h;
  const State k1 = f(x, u, p, t);
  const State k2 = f(State(x + half * k1), u, p, t + half);
  const State k3 = f(State(x + half * k2), u, p, t + half);
  const State k4 = f(State(x + h * k3), u, p, t + h);
  return State(x + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4));
}

/// Zero-order-hold discretization of continuous dynamics: advancing by one
/// sample applies `substeps` RK4 steps of size Ts / substeps.
template <class F>
class DiscreteDynamics {
 public:
  DiscreteDynamics(F f, double Ts, int substeps = 1) : f_(std::move(f)), Ts_(Ts), m_(substeps) {
    if (!(Ts > 0.0)) throw InvalidParameter("sample time Ts must be positive");
    if (substeps < 1) throw InvalidParameter("substep count must be at least 1");
  }

  template <class State, class Input, class Params>
  State operator()(const State& x, const Input& u, const Params& p, double t) const {
    const double h = Ts_ / m_;
    State next = x;
    for (int i = 0; i < m_; ++i) {
      next = rk4_step(f_, next, u, p, t, h);
      t += h;
    }
    return next;
  }

  double sample_time() const noexcept { return Ts_; }
  int substeps() const noexcept { return m_; }
  const F& continuous() const noexcept { return f_; }

 private:
  F f_;
  double Ts_;
  int m_;
};

template <class F>
DiscreteDynamics<F> discretize(F f, double Ts, int substeps = 1) {
  return DiscreteDynamics<F>(std::move(f), Ts, substeps);
}

}  // namespace rtmbe
