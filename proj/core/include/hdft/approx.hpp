#pragma once

#include "hdft/frame.hpp"
#include "hdft/paley_wiener.hpp"

namespace hdft {

/// Best approximation by band-limited functions: the Plancherel norm of the
/// spectral tail above t, E(f,t) = ||F - chi_t F||.
double best_approx(const SpectralFunction& F, double t);

/// Jackson slack: E(f,t) (t^2+rho^2)^{r/2} / ||Delta^{r/2} f||, at most 1.
double jackson_check(const SpectralFunction& F, double t, int r);

/// Modulus of continuity Omega_r(f,s): sup over tau in (0,s] of
/// ||(I - e^{i tau sqrt(-Delta)})^r f||, the multiplier
/// (2 |sin(tau sqrt(mu)/2)|)^r. The sup runs over a 32-point geometric grid
/// ending at s.
double modulus(const SpectralFunction& F, int r, double s);

/// Smoothness parameters: 0 < alpha < r (q finite) or 0 < alpha <= r
/// (q infinite, pass q = infinity).
struct BesovParams {
  double alpha;
  double q;
  int r;
  BesovParams(double alpha, double q, int r);
};

/// ||f|| + (int (s^{-alpha} Omega_r(f,s))^q ds/s)^{1/q} with the integral on
/// a 64-point log grid over [1e-3, 10] (trapezoid in log s); q = infinity
/// takes the sup over the grid.
double besov_norm(const SpectralFunction& F, const BesovParams& params);

/// Options for the Besov s-grid, exposed for the stability checks.
double besov_norm_custom(const SpectralFunction& F, const BesovParams& params,
                         double s_lo, double s_hi, int n_s);

struct K2Result {
  double k2;      // quadratic surrogate, k2 <= K(f,t)
  double k_upper; // norm sum at the quadratic minimizer, <= sqrt(2) k2
};

/// Peetre K-functional surrogate for the couple (L2, H^r): the closed-form
/// quadratic value and the certified upper bound from the per-coefficient
/// shrinkage split.
K2Result k2_functional(const SpectralFunction& F, double t, int r);

/// The sampling-reconstruction error functional: project to the band,
/// sample on the lattice, reconstruct with the dual frame, and take the
/// Plancherel distance to the original.
double phi_error(const SpectralFunction& F, double omega,
                 const FrameSystem& fs);

struct RateFit {
  double alpha_hat;
  double residual;  // rms of the log-log fit residuals
};

/// Least-squares slope of log v against log omega; returns the negated
/// slope. Requires at least 4 points with positive values.
RateFit rate_fit(const std::vector<double>& omegas,
                 const std::vector<double>& values);

struct Theorem52Result {
  double lhs;   // (sum_m (omega_m^alpha Phi_m)^q ln 2)^{1/q}
  double rhs;   // Besov norm
  double C_hat; // lhs / rhs
  std::vector<double> phi;  // per-omega functional values
};

/// The dyadic form of the approximation functional inequality: evaluates
/// Phi at every omega in the grid and compares against the Besov norm.
Theorem52Result theorem52_functional(const SpectralFunction& F,
                                     const BesovParams& params,
                                     const std::vector<double>& omegas,
                                     const std::vector<const FrameSystem*>& frames);

}  // namespace hdft
