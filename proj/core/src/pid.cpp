#include "rtmbe/pid.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "rtmbe/errors.hpp"

namespace rtmbe {
namespace {

bool valid_Ti(double Ti) noexcept { return Ti > 0.0; }  // +inf allowed, NaN rejected
bool valid_Td(double Td) noexcept { return std::isfinite(Td) && Td >= 0.0; }

double default_tracking_time(const PidParameters& p) {
  if (std::isinf(p.Ti)) return kInf;
  if (p.Td == 0.0) return p.Ti;
  return std::sqrt(p.Ti * p.Td);
}

}  // namespace

PidParameters default_pid_parameters() {
  PidParameters p;
  p.K = 1.0;
  p.Ti = 1.0;
  p.Td = 0.0;
  p.Ts = 1.0;
  return p;
}

std::optional<std::string_view> check_parameters(const PidParameters& p) noexcept {
  if (!(std::isfinite(p.Ts) && p.Ts > 0.0)) return "Ts must be positive and finite";
  if (!std::isfinite(p.K)) return "K must be finite";
  if (!valid_Td(p.Td)) return "Td must be finite and non-negative";
  if (!valid_Ti(p.Ti)) return "Ti must be positive or +inf";
  if (!(std::isfinite(p.N) && p.N > 0.0)) return "N must be positive and finite";
  if (!(p.b >= 0.0 && p.b <= 1.0)) return "b must lie in [0, 1]";
  if (std::isnan(p.umin) || std::isnan(p.umax) || !(p.umin < p.umax)) {
    return "umin must be less than umax";
  }
  if (p.Tt && !(*p.Tt > 0.0)) return "Tt must be positive or +inf";
  return std::nullopt;
}

PidController::PidController(const PidParameters& params) : params_(params) {
  if (const auto err = check_parameters(params_)) {
    throw InvalidParameter("invalid PID parameters: " + std::string(*err));
  }
  if (!params_.Tt) params_.Tt = default_tracking_time(params_);
  update_coefficients();
}

void PidController::update_coefficients() noexcept {
  const auto& p = params_;
  coeffs_.bi = p.K * p.Ts / p.Ti;
  coeffs_.ad = p.Td / (p.Td + p.N * p.Ts);
  coeffs_.bd = p.K * p.N * coeffs_.ad;
  coeffs_.br = p.Ts / *p.Tt;
}

double PidController::calculate_control(double r, double y, double uff) noexcept {
  const auto& p = params_;
  const auto& c = coeffs_;
  auto& s = state_;

  const double P = p.K * (p.b * r - y);
  s.D = c.ad * s.D - c.bd * (y - s.y_old);
  const double v = P + s.I + s.D + uff;
  const double u = std::clamp(v, p.umin, p.umax);
  s.I = s.I + c.bi * (r - y) + c.br * (u - v);
  s.y_old = y;
  return u;
}

bool PidController::try_set_K(double K, double r, double y) noexcept {
  if (!std::isfinite(K)) return false;
  state_.I += (params_.K - K) * (params_.b * r - y);
  params_.K = K;
  update_coefficients();
  return true;
}

bool PidController::try_set_Ti(double Ti) noexcept {
  if (!valid_Ti(Ti)) return false;
  params_.Ti = Ti;
  update_coefficients();
  return true;
}

bool PidController::try_set_Td(double Td) noexcept {
  if (!valid_Td(Td)) return false;
  params_.Td = Td;
  update_coefficients();
  return true;
}

void PidController::set_K(double K, double r, double y) {
  if (!try_set_K(K, r, y)) throw InvalidParameter("K must be finite");
}

void PidController::set_Ti(double Ti) {
  if (!try_set_Ti(Ti)) throw InvalidParameter("Ti must be positive or +inf");
}

void PidController::set_Td(double Td) {
  if (!try_set_Td(Td)) throw InvalidParameter("Td must be finite and non-negative");
}

}  // namespace rtmbe
