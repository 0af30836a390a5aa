#pragma once

#include <stdexcept>
#include <string>

namespace sunbloch {

// Base class for everything thrown by this library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Incompatible matrix/vector dimensions.
class DimensionError : public Error {
 public:
  explicit DimensionError(const std::string& msg) : Error(msg) {}
};

// An input violated a structural invariant (non-Hermitian matrix,
// imaginary residue above tolerance, invalid density matrix, ...).
class ValidationError : public Error {
 public:
  explicit ValidationError(const std::string& msg) : Error(msg) {}
};

// A method was invoked outside its domain of validity, e.g. the Magnus
// propagator on a generator family that does not commute with itself.
class PreconditionError : public Error {
 public:
  explicit PreconditionError(const std::string& msg) : Error(msg) {}
};

// Numerical failure during propagation: non-finite state, trace drift
// beyond the stability threshold.
class NumericalError : public Error {
 public:
  NumericalError(const std::string& msg, long step) : Error(msg), step_(step) {}
  long step() const { return step_; }

 private:
  long step_;
};

// det W = cos(upsilon2) fell below the singularity floor; the product-of-
// exponentials parametrization breaks down at this point.
class SingularityError : public Error {
 public:
  SingularityError(const std::string& msg, double upsilon2, double time)
      : Error(msg), upsilon2_(upsilon2), time_(time) {}
  double upsilon2() const { return upsilon2_; }
  double time() const { return time_; }

 private:
  double upsilon2_;
  double time_;
};

// Bad CLI configuration file or arguments.
class ConfigError : public Error {
 public:
  explicit ConfigError(const std::string& msg) : Error(msg) {}
};

}  // namespace sunbloch
