#include "hdft/approx.hpp"

#include <cmath>
#include <limits>

namespace hdft {

namespace {

// Energy per lambda node, e_i = sum_k |F(i,k)|^2 p_i q_i / n_b.
std::vector<double> lambda_energies(const SpectralFunction& F) {
  const SpectralGrid& g = *F.grid;
  std::vector<double> e(g.n_lambda);
  for (int i = 0; i < g.n_lambda; ++i) {
    double row = 0.0;
    for (int k = 0; k < g.n_b; ++k) row += std::norm(F.at(i, k));
    e[i] = row * g.node_weight(i);
  }
  return e;
}

}  // namespace

double best_approx(const SpectralFunction& F, double t) {
  if (!(t > 0.0)) throw Error("best_approx: t must be positive");
  return std::sqrt(band_energy_above(F, t));
}

double jackson_check(const SpectralFunction& F, double t, int r) {
  if (!(t > 0.0) || r < 1) throw Error("jackson_check: need t > 0, r >= 1");
  const std::vector<double> e = lambda_energies(F);
  const SpectralGrid& g = *F.grid;
  double tail = 0.0, sob = 0.0;
  for (int i = 0; i < g.n_lambda; ++i) {
    const double mu = laplace_mu(g.lambda[i]);
    sob += e[i] * std::pow(mu, r);
    if (g.lambda[i] > t) tail += e[i];
  }
  if (!(sob > 0.0)) throw Error("jackson_check: zero Sobolev norm");
  return std::sqrt(tail) * std::pow(laplace_mu(t), 0.5 * r) / std::sqrt(sob);
}

double modulus(const SpectralFunction& F, int r, double s) {
  if (r < 1 || !(s > 0.0)) throw Error("modulus: need r >= 1, s > 0");
  const std::vector<double> e = lambda_energies(F);
  const SpectralGrid& g = *F.grid;
  std::vector<double> root_mu(g.n_lambda);
  for (int i = 0; i < g.n_lambda; ++i)
    root_mu[i] = std::sqrt(laplace_mu(g.lambda[i]));

  // 32 geometric points ending at tau = s; not monotone in tau, so a grid
  // sup is the computable surrogate.
  constexpr int kTauPoints = 32;
  constexpr double kSpanDecades = 3.0;
  double best = 0.0;
  for (int j = 0; j < kTauPoints; ++j) {
    const double tau = s * std::pow(10.0, -kSpanDecades * j / (kTauPoints - 1));
    double sum = 0.0;
    for (int i = 0; i < g.n_lambda; ++i) {
      const double d = 2.0 * std::abs(std::sin(0.5 * tau * root_mu[i]));
      sum += e[i] * std::pow(d, 2 * r);
    }
    best = std::max(best, sum);
  }
  return std::sqrt(best);
}

BesovParams::BesovParams(double alpha_, double q_, int r_)
    : alpha(alpha_), q(q_), r(r_) {
  const bool q_inf = std::isinf(q);
  if (!(alpha > 0.0)) throw Error("BesovParams: alpha must be positive");
  if (r < 1) throw Error("BesovParams: r must be a positive integer");
  if (!q_inf && !(q >= 1.0)) throw Error("BesovParams: q must be in [1, inf]");
  if (q_inf ? !(alpha <= r) : !(alpha < r))
    throw Error("BesovParams: need alpha < r (or alpha <= r when q = inf)");
}

double besov_norm_custom(const SpectralFunction& F, const BesovParams& params,
                         double s_lo, double s_hi, int n_s) {
  if (!(s_lo > 0.0) || !(s_hi > s_lo) || n_s < 8)
    throw Error("besov_norm: bad s-grid");
  const double norm = plancherel_norm(F);
  if (norm == 0.0) return 0.0;

  const double dls = std::log(s_hi / s_lo) / (n_s - 1);
  if (std::isinf(params.q)) {
    double sup = 0.0;
    for (int j = 0; j < n_s; ++j) {
      const double s = s_lo * std::exp(dls * j);
      sup = std::max(sup, std::pow(s, -params.alpha) * modulus(F, params.r, s));
    }
    return norm + sup;
  }
  double acc = 0.0;
  for (int j = 0; j < n_s; ++j) {
    const double s = s_lo * std::exp(dls * j);
    const double g = std::pow(std::pow(s, -params.alpha) * modulus(F, params.r, s),
                              params.q);
    const double w = (j == 0 || j == n_s - 1) ? 0.5 : 1.0;  // trapezoid in log s
    acc += w * g * dls;
  }
  return norm + std::pow(acc, 1.0 / params.q);
}

double besov_norm(const SpectralFunction& F, const BesovParams& params) {
  return besov_norm_custom(F, params, 1e-3, 10.0, 64);
}

K2Result k2_functional(const SpectralFunction& F, double t, int r) {
  if (!(t > 0.0) || r < 1) throw Error("k2_functional: need t > 0, r >= 1");
  const std::vector<double> e = lambda_energies(F);
  const SpectralGrid& g = *F.grid;
  double k2_sq = 0.0, f0_sq = 0.0, f1_sob_sq = 0.0;
  for (int i = 0; i < g.n_lambda; ++i) {
    const double mur = std::pow(laplace_mu(g.lambda[i]), r);
    const double t2m = t * t * mur;
    const double shrink = t2m / (1.0 + t2m);
    k2_sq += e[i] * shrink;
    // split at the quadratic minimizer: f1 = F/(1+t^2 mu^r), f0 = F - f1
    f0_sq += e[i] * shrink * shrink;
    f1_sob_sq += e[i] * mur / ((1.0 + t2m) * (1.0 + t2m));
  }
  K2Result res;
  res.k2 = std::sqrt(k2_sq);
  res.k_upper = std::sqrt(f0_sq) + t * std::sqrt(f1_sob_sq);
  return res;
}

double phi_error(const SpectralFunction& F, double omega,
                 const FrameSystem& fs) {
  if (F.grid.get() != fs.E.grid().get())
    throw Error("phi_error: function lives on a different grid");
  const SpectralFunction F_omega = pw_project(F, omega);
  const std::vector<Complex> samples = fs.sample(F_omega);
  const SpectralFunction rec = dual_apply(samples, fs);
  double acc = 0.0;
  const SpectralGrid& g = *F.grid;
  for (int i = 0; i < g.n_lambda; ++i) {
    const double w = g.node_weight(i);
    for (int k = 0; k < g.n_b; ++k) acc += std::norm(F.at(i, k) - rec.at(i, k)) * w;
  }
  return std::sqrt(acc);
}

RateFit rate_fit(const std::vector<double>& omegas,
                 const std::vector<double>& values) {
  if (omegas.size() != values.size() || omegas.size() < 4)
    throw Error("rate_fit: need at least 4 matching points");
  const std::size_t n = omegas.size();
  double sx = 0.0, sy = 0.0;
  std::vector<double> x(n), y(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!(omegas[i] > 0.0) || !(values[i] > 0.0))
      throw Error("rate_fit: omegas and values must be positive");
    x[i] = std::log(omegas[i]);
    y[i] = std::log(values[i]);
    sx += x[i];
    sy += y[i];
  }
  const double mx = sx / n, my = sy / n;
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  const double slope = sxy / sxx;
  double rss = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double fit = my + slope * (x[i] - mx);
    rss += (y[i] - fit) * (y[i] - fit);
  }
  return {-slope, std::sqrt(rss / n)};
}

Theorem52Result theorem52_functional(
    const SpectralFunction& F, const BesovParams& params,
    const std::vector<double>& omegas,
    const std::vector<const FrameSystem*>& frames) {
  if (omegas.size() != frames.size() || omegas.empty())
    throw Error("theorem52_functional: omega grid and frames must match");
  Theorem52Result res;
  res.phi.resize(omegas.size());
  for (std::size_t m = 0; m < omegas.size(); ++m)
    res.phi[m] = phi_error(F, omegas[m], *frames[m]);

  const double ln2 = std::log(2.0);
  if (std::isinf(params.q)) {
    res.lhs = 0.0;
    for (std::size_t m = 0; m < omegas.size(); ++m)
      res.lhs = std::max(res.lhs, std::pow(omegas[m], params.alpha) * res.phi[m]);
  } else {
    double acc = 0.0;
    for (std::size_t m = 0; m < omegas.size(); ++m)
      acc += std::pow(std::pow(omegas[m], params.alpha) * res.phi[m], params.q) * ln2;
    res.lhs = std::pow(acc, 1.0 / params.q);
  }
  res.rhs = besov_norm(F, params);
  res.C_hat = res.rhs > 0.0 ? res.lhs / res.rhs : 0.0;
  return res;
}

}  // namespace hdft
