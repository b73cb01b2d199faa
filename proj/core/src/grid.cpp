#include "hdft/grid.hpp"

#include <cmath>
#include <numeric>

#include "hdft/gauss.hpp"

namespace hdft {

namespace {
constexpr double kTwoPi = 6.283185307179586476925286766559;
}

double SpatialGrid::theta_weight() const { return kTwoPi / n_theta; }

double SpatialGrid::total_weight() const {
  double s = 0.0;
  for (double w : weights) s += w;
  return s;
}

SpatialGrid build_spatial_grid(double R, int n_r, int n_theta) {
  if (!(R > 0.0)) throw Error("build_spatial_grid: R must be positive");
  if (n_r < 8) throw Error("build_spatial_grid: n_r must be >= 8");
  if (n_theta < 8) throw Error("build_spatial_grid: n_theta must be >= 8");

  SpatialGrid g;
  g.R = R;
  g.n_r = n_r;
  g.n_theta = n_theta;

  const QuadNodes rq = composite_gauss_legendre(0.0, R, n_r);
  g.radii = rq.x;
  g.radial_w.resize(n_r);
  for (int i = 0; i < n_r; ++i) g.radial_w[i] = rq.w[i] * std::sinh(rq.x[i]);

  g.thetas.resize(n_theta);
  for (int j = 0; j < n_theta; ++j) g.thetas[j] = kTwoPi * j / n_theta;

  g.points.reserve(g.size());
  g.weights.reserve(g.size());
  const double tw = g.theta_weight();
  for (int i = 0; i < n_r; ++i) {
    const double t = std::tanh(0.5 * g.radii[i]);
    for (int j = 0; j < n_theta; ++j) {
      g.points.emplace_back(
          Complex(t * std::cos(g.thetas[j]), t * std::sin(g.thetas[j])));
      g.weights.push_back(g.radial_w[i] * tw);
    }
  }
  return g;
}

SpectralGrid build_spectral_grid(double Lambda_max, int n_lambda, int n_b,
                                 double c_P) {
  if (!(Lambda_max > 0.0))
    throw Error("build_spectral_grid: Lambda_max must be positive");
  if (n_lambda < 16) throw Error("build_spectral_grid: n_lambda must be >= 16");
  if (n_b < 8 || n_b % 2 != 0)
    throw Error("build_spectral_grid: n_b must be even and >= 8");
  if (!(c_P > 0.0)) throw Error("build_spectral_grid: c_P must be positive");

  SpectralGrid g;
  g.Lambda_max = Lambda_max;
  g.n_lambda = n_lambda;
  g.n_b = n_b;
  g.c_P = c_P;

  const QuadNodes lq = composite_gauss_legendre(0.0, Lambda_max, n_lambda);
  g.lambda = lq.x;
  g.q = lq.w;
  g.p.resize(n_lambda);
  for (int i = 0; i < n_lambda; ++i)
    g.p[i] = c_P * g.lambda[i] * std::tanh(M_PI * g.lambda[i]);

  g.thetas_b.resize(n_b);
  for (int k = 0; k < n_b; ++k) g.thetas_b[k] = kTwoPi * k / n_b;
  return g;
}

double l2_norm_sq(const SpatialFunction& f) {
  double s = 0.0;
  for (int n = 0; n < f.grid->size(); ++n) s += std::norm(f.values[n]) * f.grid->weights[n];
  return s;
}

double l2_norm(const SpatialFunction& f) { return std::sqrt(l2_norm_sq(f)); }

double plancherel_norm_sq(const SpectralFunction& F) {
  const SpectralGrid& g = *F.grid;
  double s = 0.0;
  for (int i = 0; i < g.n_lambda; ++i) {
    const double w = g.node_weight(i);
    double row = 0.0;
    for (int k = 0; k < g.n_b; ++k) row += std::norm(F.at(i, k));
    s += w * row;
  }
  return s;
}

double plancherel_norm(const SpectralFunction& F) {
  return std::sqrt(plancherel_norm_sq(F));
}

Complex plancherel_dot(const SpectralFunction& F, const SpectralFunction& G) {
  const SpectralGrid& g = *F.grid;
  Complex s(0.0, 0.0);
  for (int i = 0; i < g.n_lambda; ++i) {
    const double w = g.node_weight(i);
    Complex row(0.0, 0.0);
    for (int k = 0; k < g.n_b; ++k) row += std::conj(F.at(i, k)) * G.at(i, k);
    s += w * row;
  }
  return s;
}

double top_boundary_mode_fraction(const SpectralFunction& F) {
  const SpectralGrid& g = *F.grid;
  double top = 0.0, total = 0.0;
  for (int i = 0; i < g.n_lambda; ++i) {
    const double w = g.node_weight(i);
    Complex alt(0.0, 0.0);
    double row = 0.0;
    for (int k = 0; k < g.n_b; ++k) {
      const Complex v = F.at(i, k);
      row += std::norm(v);
      alt += (k % 2 == 0 ? v : -v);
    }
    // |coefficient of the Nyquist mode|^2 * n_b is its energy share of the row
    top += w * std::norm(alt) / g.n_b;
    total += w * row;
  }
  return total > 0.0 ? top / total : 0.0;
}

double top_angular_mode_fraction(const SpatialFunction& f) {
  const SpatialGrid& g = *f.grid;
  double worst = 0.0;
  for (int i = 0; i < g.n_r; ++i) {
    Complex alt(0.0, 0.0);
    double row = 0.0;
    for (int j = 0; j < g.n_theta; ++j) {
      const Complex v = f.at(i, j);
      row += std::norm(v);
      alt += (j % 2 == 0 ? v : -v);
    }
    if (row > 0.0) worst = std::max(worst, std::norm(alt) / g.n_theta / row);
  }
  return worst;
}

}  // namespace hdft
