#include <doctest.h>

#include <cmath>

#include "hdft/paley_wiener.hpp"
#include "hdft/synth.hpp"

using namespace hdft;

namespace {

std::shared_ptr<const SpectralGrid> grid() {
  static auto g =
      std::make_shared<SpectralGrid>(build_spectral_grid(16.0, 64, 32));
  return g;
}

}  // namespace

TEST_CASE("projection is idempotent and tail-exact") {
  Rng rng(41);
  const SpectralFunction F = random_profile_spectrum(grid(), rng);
  const double w = 5.0;
  const SpectralFunction P = pw_project(F, w);
  const SpectralFunction PP = pw_project(P, w);
  for (int n = 0; n < grid()->size(); ++n) CHECK(P.values[n] == PP.values[n]);

  // tail-sum identity, against a direct sum oracle
  double tail = 0.0;
  const SpectralGrid& g = *grid();
  for (int i = 0; i < g.n_lambda; ++i) {
    if (g.lambda[i] <= w) continue;
    for (int k = 0; k < g.n_b; ++k)
      tail += std::norm(F.at(i, k)) * g.node_weight(i);
  }
  double diff = 0.0;
  for (int i = 0; i < g.n_lambda; ++i)
    for (int k = 0; k < g.n_b; ++k)
      diff += std::norm(F.at(i, k) - P.at(i, k)) * g.node_weight(i);
  CHECK(diff == doctest::Approx(tail).epsilon(1e-14));
  CHECK(band_energy_above(F, w) == doctest::Approx(tail).epsilon(1e-14));

  // omega at the top leaves the function unchanged
  const SpectralFunction Q = pw_project(F, g.Lambda_max);
  for (int n = 0; n < g.size(); ++n) CHECK(Q.values[n] == F.values[n]);

  CHECK_THROWS_AS((void)pw_project(F, g.Lambda_max + 1.0), Error);
  CHECK_THROWS_AS((void)pw_project(F, 0.0), Error);

  // norms decrease monotonically as the band shrinks through node values
  double prev = plancherel_norm(F) + 1e-15;
  for (int i = g.n_lambda - 1; i >= 0; i -= 7) {
    const double cur = plancherel_norm(pw_project(F, g.lambda[i]));
    CHECK(cur <= prev * (1.0 + 1e-14));
    prev = cur;
  }
}

TEST_CASE("bernstein ratio on spikes and random band functions") {
  const SpectralGrid& g = *grid();
  const double w = 6.0;
  int i0 = 0;
  while (g.lambda[i0 + 1] < 3.0) ++i0;
  SpectralFunction spike(grid());
  spike.at(i0, 3) = Complex(1.0, 0.0);
  for (double s : {0.5, 1.0, 2.0}) {
    const double expect =
        std::pow(laplace_mu(g.lambda[i0]) / laplace_mu(w), s);
    CHECK(bernstein_ratio(spike, s, w) == doctest::Approx(expect).epsilon(1e-12));
  }
  // at the band edge the ratio saturates
  int itop = g.n_lambda - 1;
  while (g.lambda[itop] > w) --itop;
  SpectralFunction top(grid());
  top.at(itop, 0) = Complex(1.0, 0.0);
  CHECK(bernstein_ratio(top, 3.0, g.lambda[itop]) ==
        doctest::Approx(1.0).epsilon(1e-12));

  Rng rng(43);
  double worst = 0.0;
  for (int t = 0; t < 100; ++t) {
    const SpectralFunction F = random_band_vector(grid(), w, rng);
    for (double s : {0.5, 1.0, 2.0, 5.0})
      worst = std::max(worst, bernstein_ratio(F, s, w));
  }
  CHECK(worst <= 1.0 + 1e-12);

  const SpectralFunction full = random_band_vector(grid(), g.Lambda_max, rng);
  CHECK_THROWS_AS((void)bernstein_ratio(full, 1.0, 2.0), Error);
}

TEST_CASE("bandwidth estimation") {
  const SpectralGrid& g = *grid();
  int i0 = 0;
  while (g.lambda[i0] < 3.0) ++i0;
  SpectralFunction spike(grid());
  spike.at(i0, 1) = Complex(0.3, -0.4);
  const BandwidthEstimate e = bandwidth_estimate(spike, 8);
  const double mu0 = laplace_mu(g.lambda[i0]);
  for (double r : e.ratios) CHECK(r == doctest::Approx(mu0).epsilon(1e-12));
  CHECK(e.omega_hat == doctest::Approx(g.lambda[i0]).epsilon(1e-12));

  // heat-kernel spectrum projected to a band: the estimate converges to the
  // top retained node as the moment order grows
  const double w = 6.0;
  const SpectralFunction heat = pw_project(heat_kernel_spectrum(grid(), 0.3), w);
  const BandwidthEstimate he = bandwidth_estimate(heat, 40);
  double top = 0.0, spacing = 0.0;
  for (int i = 0; i + 1 < g.n_lambda && g.lambda[i + 1] <= w; ++i) {
    top = g.lambda[i + 1];
    spacing = std::max(spacing, g.lambda[i + 1] - g.lambda[i]);
  }
  CHECK(std::abs(he.omega_hat - w) <= spacing);
  CHECK(std::abs(he.omega_hat - top) <= spacing);

  Rng rng(47);
  for (int t = 0; t < 50; ++t) {
    const SpectralFunction F = random_profile_spectrum(grid(), rng);
    const BandwidthEstimate be = bandwidth_estimate(F, 12);
    for (std::size_t k = 1; k < be.ratios.size(); ++k)
      CHECK(be.ratios[k] >= be.ratios[k - 1] * (1.0 - 1e-12));
  }

  SpectralFunction zero(grid());
  CHECK_THROWS_AS((void)bandwidth_estimate(zero, 8), Error);
}

TEST_CASE("riesz series identities") {
  CHECK(std::abs(riesz_scalar(0.0, 4.0, 1000)) == 0.0);

  const double sigma = 9.25;
  const long K = 100000;
  const RieszWeightSum ws = riesz_weight_sum(sigma, K);
  CHECK(std::abs(ws.partial + ws.tail - sigma) <= 1e-12 * sigma);
  // partial sum alone misses sigma by the slow tail; the bound is honest
  CHECK(std::abs(ws.partial - sigma) > 1e-7 * sigma);

  const double mu = 0.5 * sigma;
  const Complex S = riesz_scalar(mu, sigma, K);
  CHECK(std::abs(S - Complex(0.0, -mu)) <= riesz_tail_bound(sigma, K) + 1e-9);

  // multiplier route equals i * Delta on band-limited functions
  Rng rng(53);
  const double w = 2.8;
  const SpectralFunction F = random_band_vector(grid(), w, rng);
  const double sig = laplace_mu(w);
  const SpectralFunction R = riesz_apply(F, sig, K);
  const SpectralFunction iD = apply_multiplier(F, [](double l) {
    return Complex(0.0, -laplace_mu(l));
  });
  double num = 0.0, den = 0.0;
  for (int n = 0; n < grid()->size(); ++n) {
    num += std::norm(R.values[n] - iD.values[n]);
    den += std::norm(iD.values[n]);
  }
  CHECK(std::sqrt(num / den) <= riesz_tail_bound(sig, K) / 0.2);
}

TEST_CASE("schrodinger growth certificate") {
  const SpectralGrid& g = *grid();
  Rng rng(59);
  const double w = 4.0;
  const SpectralFunction F = random_band_vector(grid(), w, rng);
  const SchrodingerResult real_time = schrodinger_extend(F, Complex(0.7, 0.0), w);
  CHECK(std::abs(real_time.norm_ratio - 1.0) <= 1e-14);
  CHECK(real_time.within_bound);

  int i0 = 0;
  while (g.lambda[i0] < 2.0) ++i0;
  SpectralFunction spike(grid());
  spike.at(i0, 0) = Complex(1.0, 0.0);
  const double s = 0.15;
  const SchrodingerResult imag_time = schrodinger_extend(spike, Complex(0.0, s), w);
  const double expect = std::exp(s * laplace_mu(g.lambda[i0]));
  CHECK(imag_time.norm_ratio == doctest::Approx(expect).epsilon(1e-12));
  CHECK(imag_time.within_bound);

  for (int t = 0; t < 50; ++t) {
    const SpectralFunction G = random_band_vector(grid(), w, rng);
    for (double re : {-1.0, -0.3, 0.4, 1.0})
      for (double im : {-0.2, -0.05, 0.1, 0.2}) {
        const SchrodingerResult r = schrodinger_extend(G, Complex(re, im), w);
        CHECK(r.within_bound);
      }
  }
}

TEST_CASE("moment log-convexity with constant one") {
  const SpectralGrid& g = *grid();
  Rng rng(61);
  const SpectralFunction F = random_profile_spectrum(grid(), rng);
  for (int k : {1, 3, 8}) {
    const MomentCheck edge0 = moment_logconvexity_check(F, 0, k);
    CHECK(edge0.lhs == doctest::Approx(edge0.rhs).epsilon(1e-12));
    const MomentCheck edgek = moment_logconvexity_check(F, k, k);
    CHECK(edgek.lhs == doctest::Approx(edgek.rhs).epsilon(1e-12));
  }
  SpectralFunction spike(grid());
  spike.at(5, 2) = Complex(1.0, 1.0);
  for (int m = 0; m <= 4; ++m) {
    const MomentCheck c = moment_logconvexity_check(spike, m, 4);
    CHECK(c.lhs == doctest::Approx(c.rhs).epsilon(1e-12));
  }
  for (int t = 0; t < 200; ++t) {
    const SpectralFunction G = random_profile_spectrum(grid(), rng);
    for (int k = 1; k <= 8; ++k)
      for (int m = 0; m <= k; ++m) CHECK(moment_logconvexity_check(G, m, k).holds);
  }
  (void)g;
}
