#pragma once

#include "hdft/transform.hpp"

namespace hdft {

/// The band Pi_omega = {(lambda, b) : lambda <= omega} as a 0/1 multiplier.
/// Nodes at lambda == omega are kept, so the best-approximation tail is
/// right-continuous in omega.
struct BandRegion {
  double omega;
  explicit BandRegion(double w);
  double chi(double lambda) const { return lambda <= omega ? 1.0 : 0.0; }
};

/// Energy of F strictly above the band, sum_{lambda_i > omega} |F|^2 p q / n_b.
double band_energy_above(const SpectralFunction& F, double omega);

/// True when F is numerically band limited to omega: tail energy at most
/// rel_tol times the total.
bool is_band_limited(const SpectralFunction& F, double omega,
                     double rel_tol = 1e-14);

/// Orthogonal projection onto PW_omega: multiplies by the indicator of the
/// band. Idempotent and norm contractive; throws when omega is outside
/// (0, Lambda_max].
SpectralFunction pw_project(const SpectralFunction& F, double omega);

/// ||Delta^s F|| / ((omega^2 + rho^2)^s ||F||) for F in PW_omega; at most 1.
double bernstein_ratio(const SpectralFunction& F, double s, double omega);

struct BandwidthEstimate {
  double omega_hat = 0.0;
  std::vector<double> ratios;  // ||Delta^{k+1}F|| / ||Delta^k F||, k = 0..k_max
};

/// Estimates the bandwidth from the growth of Laplacian power norms,
/// omega_hat = sqrt(r_{k_max} - rho^2). Norms are accumulated in the log
/// domain so k_max up to 40 and beyond cannot overflow.
BandwidthEstimate bandwidth_estimate(const SpectralFunction& F, int k_max);

/// Partial sum of the interpolation series at spectral value mu:
///   (sigma/pi^2) sum_{|k| <= K} (-1)^{k-1} (k-1/2)^{-2}
///       e^{-i (pi/sigma)(k-1/2) mu}.
/// The full series equals -i*mu for |mu| <= sigma; the truncation tail is
/// bounded by 2 sigma / (pi^2 (K-1)).
Complex riesz_scalar(double mu, double sigma, long K_terms);

/// Analytic tail bound for riesz_scalar truncated at K terms.
double riesz_tail_bound(double sigma, long K_terms);

struct RieszWeightSum {
  double partial;  // (sigma/pi^2) sum_{|k| <= K} (k-1/2)^{-2}
  double tail;     // remainder, by the trigamma asymptotic series
};

/// The weight identity: partial + tail equals sigma to roundoff.
RieszWeightSum riesz_weight_sum(double sigma, long K_terms);

/// Applies the interpolation operator as a multiplier in mu = lambda^2+rho^2.
SpectralFunction riesz_apply(const SpectralFunction& F, double sigma,
                             long K_terms);

struct SchrodingerResult {
  SpectralFunction u;
  double norm_ratio;    // ||u(z)|| / ||F||
  double growth_bound;  // e^{(omega^2 + rho^2) |Im z|}
  bool within_bound;
};

/// Time evolution u(z) = e^{-i z (lambda^2 + rho^2)} F for F in PW_omega,
/// with the growth certificate ||u(z)|| <= e^{(omega^2+rho^2)|Im z|} ||F||.
SchrodingerResult schrodinger_extend(const SpectralFunction& F, Complex z,
                                     double omega);

struct MomentCheck {
  double lhs;  // ||Delta^m F||
  double rhs;  // ||Delta^k F||^{m/k} ||F||^{1-m/k}
  bool holds;  // lhs <= rhs (+ roundoff slack)
};

/// Log-convexity of the Laplacian moments with constant one.
MomentCheck moment_logconvexity_check(const SpectralFunction& F, int m, int k);

}  // namespace hdft
