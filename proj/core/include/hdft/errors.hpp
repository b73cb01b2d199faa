#pragma once

#include <stdexcept>
#include <string>

namespace hdft {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Thrown when a function carries too much mass near the truncation radius
/// for the forward transform to be trustworthy.
class BoundaryMassError : public Error {
 public:
  BoundaryMassError(double fraction, double limit)
      : Error("boundary mass fraction " + std::to_string(fraction) +
              " exceeds " + std::to_string(limit)),
        fraction(fraction) {}
  double fraction;
};

/// Thrown when the Plancherel calibration family disagrees with itself,
/// which indicates grids too coarse to trust.
class CalibrationError : public Error {
 public:
  using Error::Error;
};

/// Thrown when the sampling set does not determine the band-limited space.
class RankDeficientError : public Error {
 public:
  RankDeficientError(double a, double b)
      : Error("frame operator numerically singular: A=" + std::to_string(a) +
              " B=" + std::to_string(b)),
        A(a), B(b) {}
  double A, B;
};

/// Thrown when an iterative solve fails to reach the requested residual.
class SolverError : public Error {
 public:
  SolverError(double residual, int iterations)
      : Error("solver stalled at relative residual " + std::to_string(residual) +
              " after " + std::to_string(iterations) + " iterations"),
        residual(residual), iterations(iterations) {}
  double residual;
  int iterations;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

class IOError : public Error {
 public:
  using Error::Error;
};

}  // namespace hdft
