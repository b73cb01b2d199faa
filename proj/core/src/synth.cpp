#include "hdft/synth.hpp"

#include <cmath>

#include "hdft/errors.hpp"

namespace hdft {

SpectralFunction bump_spectrum(std::shared_ptr<const SpectralGrid> grid,
                               const std::vector<BumpSpec>& bumps) {
  SpectralFunction F(std::move(grid));
  const SpectralGrid& g = *F.grid;
  for (const BumpSpec& b : bumps) {
    for (int i = 0; i < g.n_lambda; ++i) {
      const double u = (g.lambda[i] - b.mu) / b.s;
      const Complex radial = b.amp * std::exp(-u * u);
      for (int k = 0; k < g.n_b; ++k) {
        Complex prof(0.0, 0.0);
        for (std::size_t m = 0; m < b.modes.size(); ++m) {
          const double ang = g.thetas_b[k] * static_cast<double>(m);
          prof += b.modes[m] * Complex(std::cos(ang), std::sin(ang));
        }
        F.at(i, k) += radial * prof;
      }
    }
  }
  return F;
}

std::vector<SpectralFunction> calibration_family(
    std::shared_ptr<const SpectralGrid> grid) {
  // Centers several widths from both spectral edges: the truncated ball
  // cannot resolve content at scale pi/R near lambda = 0, and the grid stops
  // at Lambda_max.
  const double mus[5] = {5.2, 5.6, 6.0, 6.4, 6.8};
  const double ss[5] = {1.50, 1.55, 1.60, 1.50, 1.45};
  std::vector<SpectralFunction> fam;
  for (int n = 0; n < 5; ++n) {
    BumpSpec b;
    b.mu = mus[n];
    b.s = ss[n];
    b.modes.assign(n + 1, Complex(0.0, 0.0));
    b.modes[0] = Complex(1.0, 0.0);
    if (n > 0) b.modes[n] = Complex(0.4, 0.2);  // one nontrivial harmonic
    fam.push_back(bump_spectrum(grid, {b}));
  }
  return fam;
}

SpectralFunction random_smooth_spectrum(std::shared_ptr<const SpectralGrid> grid,
                                        Rng& rng) {
  std::uniform_real_distribution<double> mu_d(5.0, 6.4), s_d(1.35, 1.6),
      u01(0.0, 1.0);
  std::normal_distribution<double> gauss(0.0, 1.0);
  const int n_bumps = 2 + static_cast<int>(u01(rng) * 2.0);
  std::vector<BumpSpec> bumps;
  for (int b = 0; b < n_bumps; ++b) {
    BumpSpec spec;
    spec.mu = mu_d(rng);
    spec.s = s_d(rng);
    spec.amp = Complex(gauss(rng), gauss(rng));
    const int top = 1 + static_cast<int>(u01(rng) * 6.0);
    spec.modes.assign(top + 1, Complex(0.0, 0.0));
    for (int m = 0; m <= top; ++m) {
      const double decay = std::exp(-0.4 * m);
      spec.modes[m] = decay * Complex(gauss(rng), gauss(rng));
    }
    bumps.push_back(std::move(spec));
  }
  return bump_spectrum(std::move(grid), bumps);
}

SpectralFunction random_band_vector(std::shared_ptr<const SpectralGrid> grid,
                                    double omega, Rng& rng) {
  SpectralFunction F(std::move(grid));
  const SpectralGrid& g = *F.grid;
  std::normal_distribution<double> gauss(0.0, 1.0);
  for (int i = 0; i < g.n_lambda; ++i) {
    if (g.lambda[i] > omega) continue;
    for (int k = 0; k < g.n_b; ++k)
      F.at(i, k) = Complex(gauss(rng), gauss(rng));
  }
  return F;
}

SpectralFunction random_profile_spectrum(std::shared_ptr<const SpectralGrid> grid,
                                         Rng& rng) {
  SpectralFunction F(std::move(grid));
  const SpectralGrid& g = *F.grid;
  std::uniform_real_distribution<double> mu_d(0.5, 0.75 * g.Lambda_max),
      s_d(0.3, 2.0), u01(0.0, 1.0);
  std::normal_distribution<double> gauss(0.0, 1.0);
  const int n_bumps = 1 + static_cast<int>(u01(rng) * 3.0);
  std::vector<double> centers(n_bumps), widths(n_bumps);
  std::vector<Complex> amps(n_bumps);
  for (int b = 0; b < n_bumps; ++b) {
    centers[b] = mu_d(rng);
    widths[b] = s_d(rng);
    amps[b] = Complex(gauss(rng), gauss(rng));
  }
  const int top = 1 + static_cast<int>(u01(rng) * 5.0);
  std::vector<Complex> modes(top + 1);
  for (int m = 0; m <= top; ++m)
    modes[m] = std::exp(-0.5 * m) * Complex(gauss(rng), gauss(rng));
  for (int i = 0; i < g.n_lambda; ++i) {
    Complex radial(0.0, 0.0);
    for (int b = 0; b < n_bumps; ++b) {
      const double u = (g.lambda[i] - centers[b]) / widths[b];
      radial += amps[b] * std::exp(-u * u);
    }
    for (int k = 0; k < g.n_b; ++k) {
      Complex prof(0.0, 0.0);
      for (int m = 0; m <= top; ++m) {
        const double ang = g.thetas_b[k] * m;
        prof += modes[m] * Complex(std::cos(ang), std::sin(ang));
      }
      F.at(i, k) = radial * prof;
    }
  }
  return F;
}

SpectralFunction heat_kernel_spectrum(std::shared_ptr<const SpectralGrid> grid,
                                      double t) {
  if (!(t > 0.0)) throw Error("heat_kernel_spectrum: t must be positive");
  SpectralFunction F(std::move(grid));
  const SpectralGrid& g = *F.grid;
  for (int i = 0; i < g.n_lambda; ++i) {
    const Complex v(std::exp(-t * laplace_mu(g.lambda[i])), 0.0);
    for (int k = 0; k < g.n_b; ++k) F.at(i, k) = v;
  }
  return F;
}

SpectralFunction profile_from_masses(std::shared_ptr<const SpectralGrid> grid,
                                     const std::vector<double>& masses) {
  SpectralFunction F(std::move(grid));
  const SpectralGrid& g = *F.grid;
  if (static_cast<int>(masses.size()) != g.n_lambda)
    throw Error("profile_from_masses: size mismatch");
  for (int i = 0; i < g.n_lambda; ++i) {
    if (masses[i] < 0.0) throw Error("profile_from_masses: negative mass");
    const double v = std::sqrt(masses[i] / (g.p[i] * g.q[i]));
    for (int k = 0; k < g.n_b; ++k) F.at(i, k) = Complex(v, 0.0);
  }
  return F;
}

SpectralFunction prescribed_tail_profile(
    std::shared_ptr<const SpectralGrid> grid,
    const std::function<double(double)>& tail, double cut,
    const std::vector<double>& snap) {
  const SpectralGrid& g = *grid;
  // Node j carries the tail mass of a bin (e_{j-1}, e_j]. The edge between
  // nodes j and j+1 sits at the node itself unless a snap point falls in
  // [lambda_j, lambda_{j+1}), in which case the edge moves there; the
  // discrete tail above a snap point then equals tail(snap) exactly. The
  // far tail is lumped onto the top node.
  std::vector<double> edges(g.n_lambda);
  for (int j = 0; j < g.n_lambda; ++j) {
    edges[j] = g.lambda[j];
    const double next = (j + 1 < g.n_lambda)
                            ? g.lambda[j + 1]
                            : std::numeric_limits<double>::infinity();
    for (double sp : snap)
      if (sp >= g.lambda[j] && sp < next) edges[j] = sp;
  }
  std::vector<double> masses(g.n_lambda, 0.0);
  for (int j = 0; j < g.n_lambda; ++j) {
    if (g.lambda[j] <= cut) continue;
    const double lo = (j == 0 || g.lambda[j - 1] <= cut) ? cut : edges[j - 1];
    masses[j] = (j + 1 < g.n_lambda) ? tail(lo) - tail(edges[j]) : tail(lo);
    if (masses[j] < 0.0) masses[j] = 0.0;
  }
  return profile_from_masses(std::move(grid), masses);
}

SpectralFunction power_rate_profile(std::shared_ptr<const SpectralGrid> grid,
                                    double alpha,
                                    const std::vector<double>& snap) {
  if (!(alpha > 0.0)) throw Error("power_rate_profile: alpha must be positive");
  return prescribed_tail_profile(
      std::move(grid),
      [alpha](double l) { return std::pow(l, -2.0 * alpha) / (2.0 * alpha); },
      0.5, snap);
}

SpectralFunction shifted_rate_profile(std::shared_ptr<const SpectralGrid> grid,
                                      double alpha,
                                      const std::vector<double>& snap) {
  if (!(alpha > 0.0)) throw Error("shifted_rate_profile: alpha must be positive");
  return prescribed_tail_profile(
      std::move(grid),
      [alpha](double l) {
        return std::pow(1.0 + l, -2.0 * alpha) / (2.0 * alpha);
      },
      0.0, snap);
}

}  // namespace hdft
