/*
 * C interface to a single, library-global discrete PID controller.
 *
 * Call pid_init() once before anything else. The global controller starts with
 * K = 1, Ti = 1, Td = 0, Ts = 1 and no output limits.
 *
 * Symbol names are the controller operations without a trailing '!':
 *   calculate_control!  -> calculate_control
 *   set_K!              -> set_K
 *   set_Ti!, set_Td!    -> set_Ti, set_Td
 *   reset_state!        -> reset_state
 *
 * Errors never abort the host. A failing call sets an error code that
 * pid_last_error() returns (and clears):
 *   PID_OK                 0  no error
 *   PID_E_UNINITIALIZED    1  called before pid_init(); calculate_control
 *                             returns a quiet NaN, setters do nothing
 *   PID_E_INVALID_PARAM    2  rejected parameter value; the call is a no-op
 *
 * NOT thread-safe. All calls must come from one thread or be externally
 * serialized. No call allocates memory after pid_init().
 */
#ifndef RTMBE_PID_CONTROLLER_H
#define RTMBE_PID_CONTROLLER_H

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#  ifdef RTMBE_PID_BUILDING
#    define RTMBE_PID_API __declspec(dllexport)
#  else
#    define RTMBE_PID_API __declspec(dllimport)
#  endif
#else
#  define RTMBE_PID_API __attribute__((visibility("default")))
#endif

#define PID_OK 0
#define PID_E_UNINITIALIZED 1
#define PID_E_INVALID_PARAM 2

/* Construct the global controller. Idempotent: later calls return 0 and keep
 * the controller state. */
RTMBE_PID_API int pid_init(void);

/* One controller update with setpoint r, measurement y and feedforward uff. */
RTMBE_PID_API double calculate_control(double r, double y, double uff);

/* Bumpless gain change evaluated at the current (r, y). */
RTMBE_PID_API void set_K(double K, double r, double y);

/* Ti > 0, or +inf to disable integral action. */
RTMBE_PID_API void set_Ti(double Ti);

/* Td >= 0; 0 disables derivative action. */
RTMBE_PID_API void set_Td(double Td);

/* Zero the integral, derivative and previous-measurement state. */
RTMBE_PID_API void reset_state(void);

/* Most recent error code; reading it clears it. */
RTMBE_PID_API int pid_last_error(void);

#ifdef __cplusplus
}
#endif

#endif /* RTMBE_PID_CONTROLLER_H */
