#include "pid_controller.h"

#include <limits>
#include <new>

#include "rtmbe/pid.hpp"

namespace {

// Storage for the one controller of this library. Constructed in place by
// pid_init so that nothing runs at load time.
struct GlobalControllerSlot {
  alignas(rtmbe::PidController) unsigned char storage[sizeof(rtmbe::PidController)];
  bool initialized = false;
  int last_error = PID_OK;

  rtmbe::PidController& get() noexcept {
    return *std::launder(reinterpret_cast<rtmbe::PidController*>(storage));
  }
};

GlobalControllerSlot g_slot;

bool ready() noexcept {
  if (!g_slot.initialized) {
    g_slot.last_error = PID_E_UNINITIALIZED;
    return false;
  }
  return true;
}

void flag_if_rejected(bool accepted) noexcept {
  if (!accepted) g_slot.last_error = PID_E_INVALID_PARAM;
}

}  // namespace

extern "C" {

int pid_init(void) {
  if (!g_slot.initialized) {
    // Default parameters are valid, so this cannot throw.
    new (g_slot.storage) rtmbe::PidController(rtmbe::default_pid_parameters());
    g_slot.initialized = true;
  }
  return 0;
}

double calculate_control(double r, double y, double uff) {
  if (!ready()) return std::numeric_limits<double>::quiet_NaN();
  return g_slot.get().calculate_control(r, y, uff);
}

void set_K(double K, double r, double y) {
  if (ready()) flag_if_rejected(g_slot.get().try_set_K(K, r, y));
}

void set_Ti(double Ti) {
  if (ready()) flag_if_rejected(g_slot.get().try_set_Ti(Ti));
}

void set_Td(double Td) {
  if (ready()) flag_if_rejected(g_slot.get().try_set_Td(Td));
}

void reset_state(void) {
  if (ready()) g_slot.get().reset_state();
}

int pid_last_error(void) {
  const int err = g_slot.last_error;
  g_slot.last_error = PID_OK;
  return err;
}

}  // extern "C"
