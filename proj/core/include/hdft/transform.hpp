#pragma once

#include <functional>
#include <span>

#include "hdft/grid.hpp"

namespace hdft {

/// Discretized Helgason-Fourier transform between a SpatialGrid and a
/// SpectralGrid:
///
///   forward:  F(i,k) = sum_z f(z) e^{(-i lambda_i + 1/2) <z,b_k>} w_z
///   inverse:  f(x)   = sum_{i,k} F(i,k) e^{(i lambda_i + 1/2) <x,b_k>}
///                       p_i q_i / n_b
///
/// Node data on an n-point circle carries the harmonics |m| <= n/2 and
/// nothing else. On the grid the kernel is therefore applied per angular
/// mode with radial factors
///
///   Phi_m(lambda, r) = (1/2pi) int e^{(i lambda + 1/2) A(r, delta)}
///                      e^{i m delta} d delta,
///
/// computed once by dense quadrature. Near the rim the kernel holds angular
/// content up to lambda*sinh(r), far beyond n_b/2, so a plain trapezoid sum
/// over the b nodes aliases it; the mode form is the consistent completion
/// of the truncation (and makes forward and on-grid inverse exact mutual
/// adjoints under the grid inner products). Off-grid evaluation
/// (inverse_at) keeps the literal node sum: it is the definition of the
/// sampling functionals that the frame machinery builds on.
class Transform {
 public:
  Transform(std::shared_ptr<const SpatialGrid> spatial,
            std::shared_ptr<const SpectralGrid> spectral);

  const SpatialGrid& spatial() const { return *spatial_; }
  const SpectralGrid& spectral() const { return *spectral_; }
  std::shared_ptr<const SpatialGrid> spatial_ptr() const { return spatial_; }
  std::shared_ptr<const SpectralGrid> spectral_ptr() const { return spectral_; }

  /// Relative weight of |f|^2 on the outermost unit shell r > R - 1.
  double boundary_mass_fraction(const SpatialFunction& f) const;

  /// Forward transform. Throws BoundaryMassError when the input carries more
  /// than boundary_limit of its energy within distance 1 of the truncation
  /// radius (the truncated integral would be silently wrong).
  SpectralFunction forward(const SpatialFunction& f,
                           double boundary_limit = 1e-6) const;

  /// Inverse transform evaluated on the spatial grid nodes.
  SpatialFunction inverse_on_grid(const SpectralFunction& F) const;

  /// Inverse transform at arbitrary points by the plain node sum. This is
  /// how lattice samples are produced and what the analysis operator must
  /// reproduce entrywise.
  std::vector<Complex> inverse_at(const SpectralFunction& F,
                                  std::span<const DiskPoint> points) const;

 private:
  void ensure_table() const;

  std::shared_ptr<const SpatialGrid> spatial_;
  std::shared_ptr<const SpectralGrid> spectral_;
  // Phi table, layout [i_lambda][i_r][m], m = 0..n_b/2 (even in m).
  mutable std::vector<Complex> phi_;
  mutable bool table_ready_ = false;
};

/// Per-mode radial kernel values Phi_m(lambda, r) for m = 0..m_max, by
/// dense trapezoid over the angle (exact to roundoff for the returned
/// modes). Exposed for the frame assembly and for tests.
void phi_modes(double lambda, double r, int m_max, Complex* out);

/// Multiplier calculus: (mF)(i,k) = m(lambda_i) F(i,k).
SpectralFunction apply_multiplier(const SpectralFunction& F,
                                  const std::function<Complex(double)>& m);

/// Real-valued convenience overload.
SpectralFunction apply_multiplier_real(const SpectralFunction& F,
                                       const std::function<double(double)>& m);

struct CalibrationResult {
  double c_P = 0.0;       // minimizer of the max relative Plancherel mismatch
  double spread = 0.0;    // max |c_P(g)/c_P - 1| over the family
  std::vector<double> per_function;  // per-function optimal constants
};

/// Calibrates the Plancherel constant so that the inverse transform is an
/// isometry on the given family of spectral test functions. Throws
/// CalibrationError when the per-function constants disagree by more than
/// spread_limit, which indicates grids too coarse to trust.
CalibrationResult calibrate_plancherel(const Transform& t,
                                       const std::vector<SpectralFunction>& family,
                                       double spread_limit = 1e-4);

}  // namespace hdft
