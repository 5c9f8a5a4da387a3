#pragma once

#include <stdexcept>
#include <string>

namespace erlangen {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands of incompatible dimension.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A documented precondition does not hold for the given input.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// The input is singular or degenerate for the requested construction.
class DegenerateError : public Error {
 public:
  using Error::Error;
};

/// A transformation kind cannot act on a configuration element.
class InapplicableError : public Error {
 public:
  using Error::Error;
};

/// Projective distance diverges (a point lies on the absolute).
class DivergentDistanceError : public Error {
 public:
  using Error::Error;
};

/// A chord lies in the quadric, so the measurement is indeterminate.
class GeneratorError : public Error {
 public:
  using Error::Error;
};

/// Iterative numerics did not converge.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

/// Configuration text could not be parsed or validated.
class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace erlangen
