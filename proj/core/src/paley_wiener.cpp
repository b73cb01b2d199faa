#include "hdft/paley_wiener.hpp"

#include <algorithm>
#include <cmath>

namespace hdft {

namespace {

// log(sum_i e_i * mu_i^{2k}) given log e_i and log mu_i, overflow free.
double log_moment(const std::vector<double>& log_e,
                  const std::vector<double>& log_mu, double two_k) {
  double mx = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < log_e.size(); ++i)
    mx = std::max(mx, log_e[i] + two_k * log_mu[i]);
  if (!std::isfinite(mx)) return mx;
  double s = 0.0;
  for (std::size_t i = 0; i < log_e.size(); ++i)
    s += std::exp(log_e[i] + two_k * log_mu[i] - mx);
  return mx + std::log(s);
}

// Per-lambda energies e_i = sum_k |F(i,k)|^2 p_i q_i / n_b in log form.
void log_energies(const SpectralFunction& F, std::vector<double>& log_e,
                  std::vector<double>& log_mu) {
  const SpectralGrid& g = *F.grid;
  log_e.assign(g.n_lambda, -std::numeric_limits<double>::infinity());
  log_mu.resize(g.n_lambda);
  for (int i = 0; i < g.n_lambda; ++i) {
    double row = 0.0;
    for (int k = 0; k < g.n_b; ++k) row += std::norm(F.at(i, k));
    const double e = row * g.node_weight(i);
    if (e > 0.0) log_e[i] = std::log(e);
    log_mu[i] = std::log(laplace_mu(g.lambda[i]));
  }
}

}  // namespace

BandRegion::BandRegion(double w) : omega(w) {
  if (!(w > 0.0)) throw Error("BandRegion: omega must be positive");
}

double band_energy_above(const SpectralFunction& F, double omega) {
  const SpectralGrid& g = *F.grid;
  double s = 0.0;
  for (int i = 0; i < g.n_lambda; ++i) {
    if (g.lambda[i] <= omega) continue;
    double row = 0.0;
    for (int k = 0; k < g.n_b; ++k) row += std::norm(F.at(i, k));
    s += row * g.node_weight(i);
  }
  return s;
}

bool is_band_limited(const SpectralFunction& F, double omega, double rel_tol) {
  const double total = plancherel_norm_sq(F);
  if (total == 0.0) return true;
  return band_energy_above(F, omega) <= rel_tol * total;
}

SpectralFunction pw_project(const SpectralFunction& F, double omega) {
  if (!(omega > 0.0)) throw Error("pw_project: omega must be positive");
  if (omega > F.grid->Lambda_max)
    throw Error("pw_project: omega exceeds the represented spectrum");
  BandRegion band(omega);
  return apply_multiplier_real(F, [&band](double l) { return band.chi(l); });
}

double bernstein_ratio(const SpectralFunction& F, double s, double omega) {
  if (!(s >= 0.0)) throw Error("bernstein_ratio: s must be nonnegative");
  if (!is_band_limited(F, omega))
    throw Error("bernstein_ratio: input is not band limited to omega");
  const SpectralGrid& g = *F.grid;
  double num = 0.0, den = 0.0;
  for (int i = 0; i < g.n_lambda; ++i) {
    double row = 0.0;
    for (int k = 0; k < g.n_b; ++k) row += std::norm(F.at(i, k));
    const double e = row * g.node_weight(i);
    den += e;
    num += e * std::pow(laplace_mu(g.lambda[i]), 2.0 * s);
  }
  if (den == 0.0) throw Error("bernstein_ratio: zero function");
  return std::sqrt(num / den) / std::pow(laplace_mu(omega), s);
}

BandwidthEstimate bandwidth_estimate(const SpectralFunction& F, int k_max) {
  if (k_max < 4) throw Error("bandwidth_estimate: k_max must be >= 4");
  if (plancherel_norm_sq(F) == 0.0)
    throw Error("bandwidth_estimate: zero function");
  std::vector<double> log_e, log_mu;
  log_energies(F, log_e, log_mu);

  BandwidthEstimate est;
  est.ratios.resize(k_max + 1);
  double prev = log_moment(log_e, log_mu, 0.0);
  for (int k = 0; k <= k_max; ++k) {
    const double next = log_moment(log_e, log_mu, 2.0 * (k + 1));
    est.ratios[k] = std::exp(0.5 * (next - prev));
    prev = next;
  }
  const double top = est.ratios[k_max];
  est.omega_hat = top > kRhoSq ? std::sqrt(top - kRhoSq) : 0.0;
  return est;
}

Complex riesz_scalar(double mu, double sigma, long K_terms) {
  if (!(sigma > 0.0)) throw Error("riesz_scalar: sigma must be positive");
  if (K_terms < 100) throw Error("riesz_scalar: K_terms must be >= 100");
  const double step = M_PI / sigma;
  // The terms at k and 1-k pair into (-1)^{k-1} (-2i) sin(step (k-1/2) mu)
  // / (k-1/2)^2, so the sum is purely imaginary and vanishes at mu = 0.
  // Summed small-to-large for a stable tail.
  double si = 0.0;
  for (long k = K_terms; k >= 1; --k) {
    const double h = k - 0.5;
    const double sign = (k % 2 == 1) ? 1.0 : -1.0;
    si -= 2.0 * sign * std::sin(step * h * mu) / (h * h);
  }
  const double scale = sigma / (M_PI * M_PI);
  return Complex(0.0, scale * si);
}

double riesz_tail_bound(double sigma, long K_terms) {
  return 2.0 * sigma / (M_PI * M_PI * (K_terms - 1));
}

namespace {
// Trigamma psi'(x) for large x by the asymptotic series.
double trigamma_asymptotic(double x) {
  const double ix = 1.0 / x;
  const double ix2 = ix * ix;
  return ix + 0.5 * ix2 +
         ix * ix2 * (1.0 / 6.0 + ix2 * (-1.0 / 30.0 + ix2 * (1.0 / 42.0)));
}
}  // namespace

RieszWeightSum riesz_weight_sum(double sigma, long K_terms) {
  const double scale = sigma / (M_PI * M_PI);
  double s = 0.0;
  for (long k = K_terms; k >= 1; --k) {
    const double h = k - 0.5;
    s += 2.0 / (h * h);  // k and 1-k give equal weights
  }
  RieszWeightSum out;
  out.partial = scale * s;
  // Both half-tails equal sum_{k > K} (k-1/2)^{-2} = psi'(K + 1/2).
  out.tail = scale * 2.0 * trigamma_asymptotic(K_terms + 0.5);
  return out;
}

SpectralFunction riesz_apply(const SpectralFunction& F, double sigma,
                             long K_terms) {
  return apply_multiplier(F, [sigma, K_terms](double l) {
    return riesz_scalar(laplace_mu(l), sigma, K_terms);
  });
}

SchrodingerResult schrodinger_extend(const SpectralFunction& F, Complex z,
                                     double omega) {
  if (!is_band_limited(F, omega))
    throw Error("schrodinger_extend: input is not band limited to omega");
  const double nf = plancherel_norm(F);
  if (nf == 0.0) throw Error("schrodinger_extend: zero function");
  SpectralFunction u = apply_multiplier(F, [z](double l) {
    // e^{-i z mu} with z = x + i y has modulus e^{y mu}
    const double mu = laplace_mu(l);
    const double amp = std::exp(z.imag() * mu);
    const double ph = -z.real() * mu;
    return Complex(amp * std::cos(ph), amp * std::sin(ph));
  });
  SchrodingerResult res{std::move(u), 0.0, 0.0, false};
  res.norm_ratio = plancherel_norm(res.u) / nf;
  res.growth_bound = std::exp(laplace_mu(omega) * std::abs(z.imag()));
  res.within_bound = res.norm_ratio <= res.growth_bound * (1.0 + 1e-12);
  return res;
}

MomentCheck moment_logconvexity_check(const SpectralFunction& F, int m,
                                      int k) {
  if (m < 0 || k < m || k == 0)
    throw Error("moment_logconvexity_check: need 0 <= m <= k, k > 0");
  if (plancherel_norm_sq(F) == 0.0)
    throw Error("moment_logconvexity_check: zero function");
  std::vector<double> log_e, log_mu;
  log_energies(F, log_e, log_mu);
  const double lm = 0.5 * log_moment(log_e, log_mu, 2.0 * m);
  const double lk = 0.5 * log_moment(log_e, log_mu, 2.0 * k);
  const double l0 = 0.5 * log_moment(log_e, log_mu, 0.0);
  const double t = static_cast<double>(m) / k;
  MomentCheck res;
  res.lhs = std::exp(lm);
  res.rhs = std::exp(t * lk + (1.0 - t) * l0);
  res.holds = lm <= t * lk + (1.0 - t) * l0 + 1e-12;
  return res;
}

}  // namespace hdft
