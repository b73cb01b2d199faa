#include <doctest.h>

#include <cmath>
#include <random>

#include "hdft/frame.hpp"
#include "hdft/synth.hpp"
#include "hdft/transform.hpp"

using namespace hdft;

namespace {

struct SmallFrame {
  std::shared_ptr<const SpectralGrid> grid;
  Lattice lattice;
  FrameSystem fs;
  static SmallFrame make(double omega = 3.0, double latt_R = 2.5,
                         double c = 2.2) {
    auto grid = std::make_shared<SpectralGrid>(build_spectral_grid(
        6.0, 16, 12, 0.15915494309189535));
    Lattice L = build_lattice(latt_R, nyquist_radius(omega, c), 0);
    FrameSystem fs = build_frame_system(L, omega, grid, 1e-11);
    return SmallFrame{grid, std::move(L), std::move(fs)};
  }
};

}  // namespace

TEST_CASE("orthonormal rows give unit frame bounds") {
  // Synthetic operator: rows e_c / sqrt(w_c) are orthonormal for <.,.>_W.
  const std::size_t n = 6;
  std::vector<double> w = {0.5, 1.0, 2.0, 0.7, 1.3, 0.9};
  std::vector<Complex> kernel(n * n, Complex(0.0, 0.0));
  for (std::size_t j = 0; j < n; ++j)
    kernel[j * n + j] = Complex(1.0 / std::sqrt(w[j]), 0.0);
  const AnalysisOperator E(std::move(kernel), std::move(w), n);
  const FrameBounds fb = frame_bounds(E);
  CHECK(fb.A == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(fb.B == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("analysis operator reproduces pointwise inversion") {
  const SmallFrame sf = SmallFrame::make();
  auto sg = std::make_shared<SpatialGrid>(build_spatial_grid(2.5, 16, 8));
  const Transform T(sg, sf.grid);
  Rng rng(67);
  const SpectralFunction F = random_band_vector(sf.grid, sf.fs.omega, rng);
  const std::vector<Complex> via_E = sf.fs.sample(F);
  const std::vector<Complex> via_inv = T.inverse_at(F, sf.lattice.points);
  double scale = 0.0;
  for (const Complex& v : via_inv) scale = std::max(scale, std::abs(v));
  for (std::size_t j = 0; j < via_E.size(); ++j)
    CHECK(std::abs(via_E[j] - via_inv[j]) <= 1e-14 * scale);

  CHECK(sf.fs.E.rows() == sf.lattice.points.size());
  std::size_t n_band = 0;
  for (int i = 0; i < sf.grid->n_lambda; ++i)
    if (sf.grid->lambda[i] <= sf.fs.omega) ++n_band;
  CHECK(sf.fs.E.cols() == n_band * sf.grid->n_b);
}

TEST_CASE("degenerate assemblies are rejected") {
  auto grid = std::make_shared<SpectralGrid>(build_spectral_grid(6.0, 16, 12));
  Lattice empty;
  empty.r = 0.5;
  empty.R = 1.0;
  CHECK_THROWS_AS((void)assemble_analysis(empty, 3.0, grid), Error);
  const Lattice L = build_lattice(1.0, 0.5, 0);
  CHECK_THROWS_AS((void)assemble_analysis(L, 0.01, grid), Error);
}

TEST_CASE("reconstruction from lattice samples") {
  const SmallFrame sf = SmallFrame::make();
  CHECK(sf.fs.bounds.cond() <= 100.0);
  Rng rng(71);
  for (int t = 0; t < 10; ++t) {
    const SpectralFunction F = random_band_vector(sf.grid, sf.fs.omega, rng);
    const std::vector<Complex> samples = sf.fs.sample(F);
    const SpectralFunction rec = dual_apply(samples, sf.fs);
    double num = 0.0, den = 0.0;
    for (int n = 0; n < sf.grid->size(); ++n) {
      num += std::norm(rec.values[n] - F.values[n]);
      den += std::norm(F.values[n]);
    }
    CHECK(std::sqrt(num / den) <= 1e-8 * sf.fs.bounds.cond());
  }
  // zero in, zero out
  const SpectralFunction zero =
      dual_apply(std::vector<Complex>(sf.fs.E.rows()), sf.fs);
  CHECK(plancherel_norm(zero) == 0.0);
}

TEST_CASE("frame inequality on random band functions") {
  const SmallFrame sf = SmallFrame::make();
  Rng rng(73);
  for (int t = 0; t < 100; ++t) {
    const SpectralFunction F = random_band_vector(sf.grid, sf.fs.omega, rng);
    double nf = 0.0;
    for (int i = 0; i < sf.grid->n_lambda; ++i) {
      if (sf.grid->lambda[i] > sf.fs.omega) continue;
      for (int k = 0; k < sf.grid->n_b; ++k)
        nf += std::norm(F.at(i, k)) * sf.grid->node_weight(i);
    }
    const std::vector<Complex> samples = sf.fs.sample(F);
    double energy = 0.0;
    for (const Complex& s : samples) energy += std::norm(s);
    CHECK(energy >= sf.fs.bounds.A * nf * (1.0 - 1e-10));
    CHECK(energy <= sf.fs.bounds.B * nf * (1.0 + 1e-10));
  }
}

TEST_CASE("noise amplification respects the lower bound") {
  const SmallFrame sf = SmallFrame::make();
  Rng rng(79);
  const SpectralFunction F = random_band_vector(sf.grid, sf.fs.omega, rng);
  std::vector<Complex> samples = sf.fs.sample(F);
  const SpectralFunction rec0 = dual_apply(samples, sf.fs);
  const double eps = 1e-4;
  std::uniform_real_distribution<double> pm(-1.0, 1.0);
  for (Complex& s : samples) s += eps * Complex(pm(rng), pm(rng)) / std::sqrt(2.0);
  const SpectralFunction rec1 = dual_apply(samples, sf.fs);
  double diff = 0.0;
  for (int i = 0; i < sf.grid->n_lambda; ++i) {
    const double w = sf.grid->node_weight(i);
    for (int k = 0; k < sf.grid->n_b; ++k)
      diff += std::norm(rec1.at(i, k) - rec0.at(i, k)) * w;
  }
  const double bound =
      eps * std::sqrt(double(sf.fs.E.rows())) / std::sqrt(sf.fs.bounds.A);
  CHECK(std::sqrt(diff) <= bound * (1.0 + 1e-6));
}

TEST_CASE("dual frame reproduces the sampling identity") {
  const SmallFrame sf = SmallFrame::make();
  const auto duals = dual_frame_functions(sf.fs);
  REQUIRE(duals.size() == sf.fs.E.rows());
  Rng rng(83);
  const SpectralFunction F = random_band_vector(sf.grid, sf.fs.omega, rng);
  const std::vector<Complex> samples = sf.fs.sample(F);
  std::vector<Complex> rec(sf.fs.E.cols(), Complex(0.0, 0.0));
  for (std::size_t j = 0; j < duals.size(); ++j)
    for (std::size_t c = 0; c < rec.size(); ++c)
      rec[c] += samples[j] * duals[j][c];
  const std::vector<Complex> want = sf.fs.E.band_restrict(F);
  double num = 0.0, den = 0.0;
  for (std::size_t c = 0; c < rec.size(); ++c) {
    num += std::norm(rec[c] - want[c]);
    den += std::norm(want[c]);
  }
  CHECK(std::sqrt(num / den) <= 1e-8);
}

TEST_CASE("condition number improves with density") {
  auto grid = std::make_shared<SpectralGrid>(build_spectral_grid(6.0, 16, 12));
  const double omega = 3.0;
  double prev = std::numeric_limits<double>::infinity();
  for (double c : {2.8, 2.4, 2.0, 1.6}) {
    const Lattice L = build_lattice(2.5, nyquist_radius(omega, c), 0);
    const FrameBounds fb = frame_bounds(assemble_analysis(L, omega, grid));
    CHECK(fb.cond() <= prev * (1.0 + 1e-9));
    prev = fb.cond();
  }
}

TEST_CASE("undersampling is flagged") {
  auto grid = std::make_shared<SpectralGrid>(build_spectral_grid(6.0, 16, 12));
  const double omega = 3.0;
  const double r = nyquist_radius(omega, 2.2);
  const Lattice L = build_lattice(2.5, 2.0 * r, 0);
  bool flagged = false;
  try {
    const FrameBounds fb = frame_bounds(assemble_analysis(L, omega, grid));
    flagged = fb.cond() > 1e4;
  } catch (const RankDeficientError&) {
    flagged = true;
  }
  CHECK(flagged);
}

TEST_CASE("classical oversampled reconstruction on the circle") {
  // Trigonometric polynomials of degree M sampled at N > 2M+1 uniform
  // points: the sampling rows e^{-i m t_j} are a tight-ish frame and the
  // dual-frame solve must match the classical Dirichlet-kernel series.
  const int M = 4, N = 16;
  const std::size_t dim = 2 * M + 1;
  std::vector<double> w(dim, 1.0 / (2 * M_PI));  // Fourier Plancherel weight
  std::vector<Complex> kernel(N * dim);
  std::vector<double> t(N);
  for (int j = 0; j < N; ++j) {
    t[j] = 2.0 * M_PI * j / N;
    for (int m = -M; m <= M; ++m)
      // matching the disk convention: samples = sum conj(k) w F
      kernel[j * dim + (m + M)] =
          std::exp(Complex(0.0, -m * t[j])) * (2.0 * M_PI);
  }
  AnalysisOperator E(std::move(kernel), std::move(w), N);
  const FrameBounds fb = frame_bounds(E);
  CHECK(fb.cond() == doctest::Approx(1.0).epsilon(1e-8));  // uniform = tight

  std::mt19937_64 rng(89);
  std::normal_distribution<double> g(0.0, 1.0);
  std::vector<Complex> coef(dim);
  for (auto& c : coef) c = Complex(g(rng), g(rng));
  auto eval = [&](double x) {
    Complex s(0.0, 0.0);
    for (int m = -M; m <= M; ++m)
      s += coef[m + M] * std::exp(Complex(0.0, m * x));
    return s;
  };
  std::vector<Complex> samples(N);
  for (int j = 0; j < N; ++j) samples[j] = eval(t[j]);

  FrameSystem fs{std::move(E), fb, double(M), 1e-12, 20, std::nullopt};
  std::vector<Complex> rhs(fs.E.cols());
  fs.E.adjoint(samples.data(), rhs.data());
  const CgResult sol = conjugate_gradient(fs.E.frame_operator(), rhs, 1e-12,
                                          10 * int(dim));
  for (std::size_t c = 0; c < dim; ++c)
    CHECK(std::abs(sol.x[c] - coef[c]) <= 1e-9);

  // classical series: f(x) = sum_j f(t_j) D_M(x - t_j) / N for N > 2M+1,
  // with the Dirichlet kernel D_M(u) = sin((M+1/2)u)/sin(u/2).
  auto dirichlet = [&](double u) {
    if (std::abs(std::sin(0.5 * u)) < 1e-12) return double(2 * M + 1);
    return std::sin((M + 0.5) * u) / std::sin(0.5 * u);
  };
  for (double x : {0.3, 1.7, 4.4}) {
    Complex series(0.0, 0.0);
    for (int j = 0; j < N; ++j) series += samples[j] * dirichlet(x - t[j]);
    series /= double(N);
    CHECK(std::abs(series - eval(x)) <= 1e-10 * (1.0 + std::abs(eval(x))));
  }
}
