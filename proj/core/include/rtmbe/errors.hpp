#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace rtmbe {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A parameter violates its documented invariant.
class InvalidParameter : public Error {
 public:
  using Error::Error;
};

/// Malformed parameter config file (syntax, unknown key, bad value).
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// Missing or unreadable/unwritable file.
class FileError : public Error {
 public:
  using Error::Error;
};

/// Trajectory file whose size is not a whole number of records.
class FormatError : public Error {
 public:
  using Error::Error;
};

/// Input and measurement sequences of different length.
class LengthMismatch : public Error {
 public:
  using Error::Error;
};

/// Numerical failure inside the filter. Carries the trajectory step index
/// when raised from a whole-trajectory run.
class NumericalError : public Error {
 public:
  explicit NumericalError(const std::string& what,
                          std::optional<std::size_t> step = std::nullopt)
      : Error(step ? what + " at step " + std::to_string(*step) : what),
        step_(step) {}

  std::optional<std::size_t> step() const noexcept { return step_; }

 private:
  std::optional<std::size_t> step_;
};

/// Covariance could not be factorized even after jitter; the filter diverged.
class CholeskyFailure : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

/// Innovation covariance is not positive definite.
class SingularInnovation : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

}  // namespace rtmbe
