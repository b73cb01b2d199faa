#pragma once

#include <complex>

#include "hdft/errors.hpp"

namespace hdft {

using Complex = std::complex<double>;

/// Spectral shift of the hyperbolic plane at curvature -1 (half the volume
/// growth exponent). Laplace-Beltrami eigenvalues are -(lambda^2 + rho^2).
inline constexpr double kRho = 0.5;
inline constexpr double kRhoSq = 0.25;

/// mu(lambda) = lambda^2 + rho^2, the spectral parameter of -Delta.
inline double laplace_mu(double lambda) { return lambda * lambda + kRhoSq; }

/// Points with |z| beyond this bound are rejected at construction; all grids
/// live in a truncated geodesic ball well inside.
inline constexpr double kMaxAbsZ = 1.0 - 1e-12;

/// A point of the hyperbolic plane in the Poincare disk model, |z| < 1.
class DiskPoint {
 public:
  DiskPoint() : z_(0.0, 0.0) {}
  explicit DiskPoint(Complex z) : z_(z) {
    if (!(std::abs(z) <= kMaxAbsZ))
      throw Error("DiskPoint: |z| must be < 1 - 1e-12, got |z|=" +
                  std::to_string(std::abs(z)));
  }
  DiskPoint(double x, double y) : DiskPoint(Complex(x, y)) {}

  Complex z() const { return z_; }
  double x() const { return z_.real(); }
  double y() const { return z_.imag(); }

 private:
  Complex z_;
};

/// A point of the boundary circle, stored as an angle in [0, 2*pi).
class BoundaryPoint {
 public:
  explicit BoundaryPoint(double theta);
  double theta() const { return theta_; }
  Complex unit() const { return Complex(std::cos(theta_), std::sin(theta_)); }

 private:
  double theta_;
};

/// Hyperbolic distance for the metric 2|dz|/(1-|z|^2) (curvature -1).
double dist(const DiskPoint& p, const DiskPoint& q);

/// Monotone surrogate for dist: Q = 2|p-q|^2/((1-|p|^2)(1-|q|^2)), so that
/// dist = arccosh(1 + Q). Distance comparisons can be done on Q without the
/// arccosh.
double dist_surrogate(const DiskPoint& p, const DiskPoint& q);
inline double surrogate_of_dist(double d) { return std::cosh(d) - 1.0; }

/// Busemann function <z,b> = log((1-|z|^2)/|z-b|^2): the signed horocycle
/// distance from the origin to the horocycle through z tangent at b.
double busemann(const DiskPoint& p, const BoundaryPoint& b);

/// Busemann from raw parts; b given by its angle cosine/sine. Used by the
/// transform kernels which precompute trigonometry.
double busemann_raw(double zx, double zy, double bx, double by);

/// The disk automorphism p -> (p + a)/(1 + conj(a) p); an isometry taking
/// 0 to a.
DiskPoint mobius_translate(const DiskPoint& a, const DiskPoint& p);

/// Geodesic polar coordinates about the origin: |z| = tanh(r/2).
DiskPoint polar_to_point(double r, double theta);

/// Inverse of polar_to_point. Returns (r, theta); theta = 0 at the origin.
struct Polar {
  double r;
  double theta;
};
Polar point_to_polar(const DiskPoint& p);

/// Area of the geodesic ball of radius R: 2*pi*(cosh R - 1).
double ball_area(double R);

}  // namespace hdft
