#pragma once

#include <limits>
#include <optional>
#include <string_view>

namespace rtmbe {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

/// Tuning of a discrete PID controller.
///
/// Ti = +inf disables integral action, Td = 0 disables derivative action.
/// When Tt is left unset it is derived: inf if Ti is inf, Ti if Td is 0,
/// otherwise sqrt(Ti * Td).
struct PidParameters {
  double K = 1.0;
  double Ti = kInf;
  double Td = 0.0;
  std::optional<double> Tt;
  double N = 10.0;
  double b = 1.0;
  double umin = -kInf;
  double umax = kInf;
  double Ts = 1.0;
};

/// K = 1, Ti = 1, Td = 0, Ts = 1; everything else at its default.
PidParameters default_pid_parameters();

/// Returns a description of the first violated invariant, or nothing if the
/// parameters are usable. Never allocates.
std::optional<std::string_view> check_parameters(const PidParameters& p) noexcept;

struct PidState {
  double I = 0.0;      ///< integral term, control units
  double D = 0.0;      ///< filtered derivative term, control units
  double y_old = 0.0;  ///< previous measurement

  friend bool operator==(const PidState&, const PidState&) = default;
};

/// Coefficients precomputed from the parameters.
struct PidCoefficients {
  double bi = 0.0;  ///< K Ts / Ti
  double ad = 0.0;  ///< Td / (Td + N Ts)
  double bd = 0.0;  ///< K N ad
  double br = 0.0;  ///< Ts / Tt
};

/// Positional discrete PID with setpoint weighting on P, a first-order
/// filtered derivative acting on the measurement only, output clamping and
/// tracking anti-windup:
///
///   P = K (b r - y)
///   D = ad D - bd (y - y_old)
///   v = P + I + D + uff,  u = clamp(v, umin, umax)
///   I = I + bi (r - y) + br (u - v)
///
/// The integral is advanced after u is formed. Parameter setters keep the
/// output continuous (bumpless). calculate_control and the try_* setters
/// never allocate. Not thread-safe.
class PidController {
 public:
  /// Throws InvalidParameter naming the violated invariant.
  explicit PidController(const PidParameters& params);

  double calculate_control(double r, double y, double uff = 0.0) noexcept;

  /// Change the gain, shifting I so that P + I at (r, y) is unchanged.
  void set_K(double K, double r, double y);
  void set_Ti(double Ti);
  void set_Td(double Td);

  // Non-throwing variants; on an invalid value the controller is unchanged
  // and false is returned.
  [[nodiscard]] bool try_set_K(double K, double r, double y) noexcept;
  [[nodiscard]] bool try_set_Ti(double Ti) noexcept;
  [[nodiscard]] bool try_set_Td(double Td) noexcept;

  void reset_state() noexcept { state_ = {}; }

  const PidParameters& parameters() const noexcept { return params_; }
  const PidState& state() const noexcept { return state_; }
  const PidCoefficients& coefficients() const noexcept { return coeffs_; }
  /// Anti-windup tracking time actually in use.
  double tracking_time() const noexcept { return *params_.Tt; }

 private:
  void update_coefficients() noexcept;

  PidParameters params_;
  PidState state_;
  PidCoefficients coeffs_;
};

}  // namespace rtmbe
