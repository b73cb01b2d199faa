#pragma once

#include <memory>
#include <vector>

#include "hdft/geometry.hpp"

namespace hdft {

/// Product quadrature grid on a truncated geodesic ball: composite
/// Gauss-Legendre in the radius against sinh(r) dr, equispaced trapezoid in
/// the angle. Node (i, j) sits at polar (radii[i], thetas[j]) and carries
/// weight radial_w[i] * (2*pi/n_theta); the total weight reproduces the ball
/// area 2*pi*(cosh R - 1).
struct SpatialGrid {
  double R = 0.0;
  int n_r = 0;
  int n_theta = 0;
  std::vector<double> radii;     // ascending, in (0, R)
  std::vector<double> radial_w;  // GL weight times sinh(r)
  std::vector<double> thetas;    // 2*pi*j/n_theta
  std::vector<DiskPoint> points; // flattened, ring-major: i*n_theta + j
  std::vector<double> weights;   // flattened node weights

  int size() const { return n_r * n_theta; }
  double theta_weight() const;
  double total_weight() const;
};

SpatialGrid build_spatial_grid(double R, int n_r, int n_theta);

/// Discretization of the spectral half-line times the boundary circle.
/// lambda carries a composite Gauss-Legendre rule on [0, Lambda_max];
/// the circle carries n_b equispaced nodes of weight 1/n_b. The Plancherel
/// density is p(lambda) = c_P * lambda * tanh(pi*lambda).
struct SpectralGrid {
  double Lambda_max = 0.0;
  int n_lambda = 0;
  int n_b = 0;
  double c_P = 1.0;
  std::vector<double> lambda;    // ascending, strictly positive
  std::vector<double> q;         // lambda quadrature weights
  std::vector<double> p;         // c_P * lambda * tanh(pi*lambda)
  std::vector<double> thetas_b;  // 2*pi*k/n_b

  int size() const { return n_lambda * n_b; }
  /// Weight of the spectral node (i, k) in the Plancherel inner product.
  double node_weight(int i) const { return p[i] * q[i] / n_b; }
};

SpectralGrid build_spectral_grid(double Lambda_max, int n_lambda, int n_b,
                                 double c_P = 1.0);

/// Complex samples over a SpatialGrid.
struct SpatialFunction {
  std::shared_ptr<const SpatialGrid> grid;
  std::vector<Complex> values;  // ring-major, matches grid.points

  explicit SpatialFunction(std::shared_ptr<const SpatialGrid> g)
      : grid(std::move(g)), values(grid->size(), Complex(0.0, 0.0)) {}
  Complex& at(int i_r, int j) { return values[i_r * grid->n_theta + j]; }
  Complex at(int i_r, int j) const { return values[i_r * grid->n_theta + j]; }
};

/// Complex samples over a SpectralGrid, indexed (lambda i, boundary k).
struct SpectralFunction {
  std::shared_ptr<const SpectralGrid> grid;
  std::vector<Complex> values;  // row-major: i*n_b + k

  explicit SpectralFunction(std::shared_ptr<const SpectralGrid> g)
      : grid(std::move(g)), values(grid->size(), Complex(0.0, 0.0)) {}
  Complex& at(int i, int k) { return values[i * grid->n_b + k]; }
  Complex at(int i, int k) const { return values[i * grid->n_b + k]; }
};

/// ||f||^2 against the grid weights.
double l2_norm_sq(const SpatialFunction& f);
double l2_norm(const SpatialFunction& f);

/// ||F||^2 against the Plancherel measure p*q/n_b.
double plancherel_norm_sq(const SpectralFunction& F);
double plancherel_norm(const SpectralFunction& F);

/// Plancherel inner product <F, G>, conjugate-linear in F.
Complex plancherel_dot(const SpectralFunction& F, const SpectralFunction& G);

/// Energy fraction carried by the top boundary mode (the alternating mode
/// k -> (-1)^k), which the n_b-point circle cannot distinguish from its
/// alias. Honest inputs keep this negligible.
double top_boundary_mode_fraction(const SpectralFunction& F);

/// Same diagnostic for a spatial function: max over rings of the Nyquist
/// angular mode share.
double top_angular_mode_fraction(const SpatialFunction& f);

}  // namespace hdft
