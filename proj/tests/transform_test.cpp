#include <doctest.h>

#include <cmath>
#include <random>

#include "hdft/synth.hpp"
#include "hdft/transform.hpp"

using namespace hdft;

namespace {

struct Fixture {
  std::shared_ptr<const SpatialGrid> sg;
  std::shared_ptr<const SpectralGrid> kg;
  std::unique_ptr<Transform> T;
  Fixture(double R = 5.0, int nr = 96, int nt = 64, double L = 12.0,
          int nl = 64, int nb = 64, double c_P = 0.15915494309189535) {
    sg = std::make_shared<SpatialGrid>(build_spatial_grid(R, nr, nt));
    kg = std::make_shared<SpectralGrid>(build_spectral_grid(L, nl, nb, c_P));
    T = std::make_unique<Transform>(sg, kg);
  }
};

// The plain node-sum inverse, written independently of the library loops.
Complex naive_inverse_at(const SpectralFunction& F, const DiskPoint& z) {
  const SpectralGrid& g = *F.grid;
  Complex acc(0.0, 0.0);
  for (int i = 0; i < g.n_lambda; ++i)
    for (int k = 0; k < g.n_b; ++k) {
      const double A = busemann(z, BoundaryPoint(g.thetas_b[k]));
      const Complex kernel =
          std::exp(Complex(0.5 * A, g.lambda[i] * A));
      acc += F.at(i, k) * kernel * (g.p[i] * g.q[i] / g.n_b);
    }
  return acc;
}

}  // namespace

TEST_CASE("zero maps to zero both ways") {
  Fixture fx;
  SpectralFunction F(fx.kg);
  const SpatialFunction f = fx.T->inverse_on_grid(F);
  for (const Complex& v : f.values) CHECK(std::abs(v) == 0.0);
  SpatialFunction g(fx.sg);
  const SpectralFunction G = fx.T->forward(g);
  for (const Complex& v : G.values) CHECK(std::abs(v) == 0.0);
}

TEST_CASE("forward is linear") {
  Fixture fx;
  Rng rng(5);
  const SpectralFunction A = random_smooth_spectrum(fx.kg, rng);
  const SpectralFunction B = random_smooth_spectrum(fx.kg, rng);
  const SpatialFunction fa = fx.T->inverse_on_grid(A);
  const SpatialFunction fb = fx.T->inverse_on_grid(B);
  const Complex alpha(0.7, -0.2), beta(-1.3, 0.4);
  SpatialFunction fc(fx.sg);
  for (int n = 0; n < fx.sg->size(); ++n)
    fc.values[n] = alpha * fa.values[n] + beta * fb.values[n];
  const SpectralFunction Fa = fx.T->forward(fa, 1.0);
  const SpectralFunction Fb = fx.T->forward(fb, 1.0);
  const SpectralFunction Fc = fx.T->forward(fc, 1.0);
  double worst = 0.0, scale = 0.0;
  for (int n = 0; n < fx.kg->size(); ++n) {
    worst = std::max(worst,
                     std::abs(Fc.values[n] - (alpha * Fa.values[n] +
                                              beta * Fb.values[n])));
    scale = std::max(scale, std::abs(Fc.values[n]));
  }
  CHECK(worst <= 1e-12 * scale);
}

TEST_CASE("round trip on a smooth bump") {
  Fixture fx;
  BumpSpec b;
  b.mu = 5.5;
  b.s = 1.5;
  b.modes = {Complex(1.0, 0.0), Complex(0.2, 0.1)};
  const SpectralFunction g = bump_spectrum(fx.kg, {b});
  const SpatialFunction f = fx.T->inverse_on_grid(g);
  CHECK(fx.T->boundary_mass_fraction(f) <= 1e-6);
  const SpectralFunction h = fx.T->forward(f);
  double num = 0.0, den = 0.0;
  for (int i = 0; i < fx.kg->n_lambda; ++i) {
    const double w = fx.kg->node_weight(i);
    for (int k = 0; k < fx.kg->n_b; ++k) {
      num += std::norm(h.at(i, k) - g.at(i, k)) * w;
      den += std::norm(g.at(i, k)) * w;
    }
  }
  CHECK(std::sqrt(num / den) <= 1e-6);
}

TEST_CASE("plancherel norm matches the spatial norm") {
  Fixture fx;
  Rng rng(29);
  for (int t = 0; t < 3; ++t) {
    const SpectralFunction g = random_smooth_spectrum(fx.kg, rng);
    const SpatialFunction f = fx.T->inverse_on_grid(g);
    const double mismatch =
        std::abs(plancherel_norm_sq(g) / l2_norm_sq(f) - 1.0);
    CHECK(mismatch <= 1e-5);
  }
}

TEST_CASE("inverse at the origin of a radial function is the plain sum") {
  Fixture fx;
  const SpectralFunction F = heat_kernel_spectrum(fx.kg, 0.5);
  double oracle = 0.0;
  for (int i = 0; i < fx.kg->n_lambda; ++i)
    oracle += std::exp(-0.5 * laplace_mu(fx.kg->lambda[i])) * fx.kg->p[i] *
              fx.kg->q[i];
  const std::vector<Complex> v =
      fx.T->inverse_at(F, std::vector<DiskPoint>{DiskPoint(0.0, 0.0)});
  CHECK(std::abs(v[0] - Complex(oracle, 0.0)) <= 1e-12 * std::abs(oracle));
}

TEST_CASE("inverse_at agrees with the naive double sum") {
  Fixture fx(4.0, 48, 32, 6.0, 32, 16);
  Rng rng(31);
  SpectralFunction F = random_band_vector(fx.kg, 5.0, rng);
  std::vector<DiskPoint> pts = {polar_to_point(0.3, 0.4),
                                polar_to_point(1.7, 2.0),
                                polar_to_point(3.4, 5.1)};
  const std::vector<Complex> got = fx.T->inverse_at(F, pts);
  for (std::size_t n = 0; n < pts.size(); ++n) {
    const Complex want = naive_inverse_at(F, pts[n]);
    CHECK(std::abs(got[n] - want) <= 1e-12 * std::max(1.0, std::abs(want)));
  }
}

TEST_CASE("on-grid inverse agrees with the node sum deep inside") {
  // Mode-exact and node-sum evaluations coincide where the kernel's angular
  // content fits the circle grid; that is the regime the double-sum oracle
  // pins down.
  Fixture fx(4.0, 48, 32, 6.0, 32, 32);
  BumpSpec b;
  b.mu = 3.0;
  b.s = 1.0;
  b.modes = {Complex(1.0, 0.0), Complex(0.3, 0.0), Complex(0.0, 0.2)};
  const SpectralFunction F = bump_spectrum(fx.kg, {b});
  const SpatialFunction f = fx.T->inverse_on_grid(F);
  double scale = 0.0;
  for (const Complex& v : f.values) scale = std::max(scale, std::abs(v));
  for (int i = 0; i < fx.sg->n_r && fx.sg->radii[i] < 0.6; ++i)
    for (int j = 0; j < fx.sg->n_theta; j += 7) {
      const Complex want = naive_inverse_at(F, fx.sg->points[i * fx.sg->n_theta + j]);
      CHECK(std::abs(f.at(i, j) - want) <= 1e-12 * scale);
    }
}

TEST_CASE("forward rejects boundary-heavy input") {
  Fixture fx;
  SpatialFunction f(fx.sg);
  for (int i = 0; i < fx.sg->n_r; ++i)
    if (fx.sg->radii[i] > 4.3)
      for (int j = 0; j < fx.sg->n_theta; ++j) f.at(i, j) = Complex(1.0, 0.0);
  CHECK_THROWS_AS((void)fx.T->forward(f), BoundaryMassError);
}

TEST_CASE("multiplier algebra") {
  Fixture fx;
  Rng rng(37);
  const SpectralFunction F = random_smooth_spectrum(fx.kg, rng);
  const SpectralFunction same = apply_multiplier_real(F, [](double) { return 1.0; });
  for (int n = 0; n < fx.kg->size(); ++n) CHECK(same.values[n] == F.values[n]);

  auto lap = [](double l) { return -laplace_mu(l); };
  const SpectralFunction twice =
      apply_multiplier_real(apply_multiplier_real(F, lap), lap);
  const SpectralFunction once = apply_multiplier_real(
      F, [](double l) { return laplace_mu(l) * laplace_mu(l); });
  for (int n = 0; n < fx.kg->size(); ++n)
    CHECK(std::abs(twice.values[n] - once.values[n]) <=
          1e-15 * std::abs(once.values[n]) + 1e-300);

  CHECK_THROWS_AS(
      (void)apply_multiplier_real(F, [](double) { return std::nan(""); }),
      Error);
}

TEST_CASE("plancherel calibration is stable under refinement") {
  Fixture coarse(5.0, 96, 64, 12.0, 64, 64, 1.0);
  Fixture fine(5.0, 192, 128, 12.0, 128, 128, 1.0);
  const CalibrationResult a =
      calibrate_plancherel(*coarse.T, calibration_family(coarse.kg));
  const CalibrationResult b =
      calibrate_plancherel(*fine.T, calibration_family(fine.kg));
  CHECK(a.c_P > 0.0);
  CHECK(std::abs(a.c_P / b.c_P - 1.0) <= 1e-6);
  CHECK(b.spread <= 1e-6);
  // the constant lands on 1/(2 pi) for this normalization
  CHECK(std::abs(b.c_P - 1.0 / (2.0 * M_PI)) <= 1e-4 * b.c_P);
}
