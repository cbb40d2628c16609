#pragma once

#include <stdexcept>
#include <string>

namespace mtbench {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// A precondition on an argument was violated (non-finite, wrong sign, ...).
class InvalidInputError : public Error {
 public:
  using Error::Error;
};

/// The equilibrium solver did not converge; carries the last residual.
class SolverError : public Error {
 public:
  SolverError(const std::string& msg, double residual)
      : Error(msg), residual_(residual) {}
  double residual() const { return residual_; }

 private:
  double residual_;
};

/// A calibration target cannot be met; the message names the limiting stiffness.
class InfeasibleTargetError : public Error {
 public:
  using Error::Error;
};

/// A protocol constraint was violated (e.g. A/2 > d).
class ProtocolError : public Error {
 public:
  using Error::Error;
};

/// The stress-strain curve never intersects the offset line.
class NoYieldError : public Error {
 public:
  using Error::Error;
};

/// Not enough data to identify the requested model parameters.
class UnderdeterminedError : public Error {
 public:
  using Error::Error;
};

/// A hysteresis loop did not close; carries the gap magnitude in strain.
class OpenLoopError : public Error {
 public:
  OpenLoopError(const std::string& msg, double gap) : Error(msg), gap_(gap) {}
  double gap() const { return gap_; }

 private:
  double gap_;
};

/// Config file could not be parsed or validated; message carries line/field.
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// File could not be read or written.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace mtbench
