#include <doctest.h>

#include <cmath>

#include "hdft/grid.hpp"

using namespace hdft;

TEST_CASE("spatial grid weights reproduce the ball area") {
  const SpatialGrid g = build_spatial_grid(3.0, 64, 32);
  CHECK(std::abs(g.total_weight() - ball_area(3.0)) <=
        1e-8 * ball_area(3.0));
  CHECK(static_cast<int>(g.points.size()) == 64 * 32);
  for (const DiskPoint& p : g.points) CHECK(std::abs(p.z()) < 1.0);
  for (double w : g.weights) CHECK(w > 0.0);
}

TEST_CASE("radial refinement is converged") {
  const SpatialGrid a = build_spatial_grid(5.0, 160, 16);
  const SpatialGrid b = build_spatial_grid(5.0, 320, 16);
  CHECK(std::abs(a.total_weight() - b.total_weight()) <= 1e-10 * b.total_weight());
}

TEST_CASE("spatial grid rejects bad parameters") {
  CHECK_THROWS_AS(build_spatial_grid(-1.0, 64, 32), Error);
  CHECK_THROWS_AS(build_spatial_grid(3.0, 4, 32), Error);
  CHECK_THROWS_AS(build_spatial_grid(3.0, 64, 4), Error);
}

TEST_CASE("spectral grid quadrature and density") {
  const SpectralGrid g = build_spectral_grid(8.0, 64, 32);
  double qs = 0.0;
  for (double q : g.q) qs += q;
  CHECK(std::abs(qs - 8.0) <= 1e-10 * 8.0);
  for (int i = 0; i < g.n_lambda; ++i) {
    CHECK(g.lambda[i] > 0.0);
    CHECK(g.p[i] > 0.0);
    if (i > 0) {
      CHECK(g.lambda[i] > g.lambda[i - 1]);
      // lambda tanh(pi lambda) is increasing on the half-line
      CHECK(g.p[i] > g.p[i - 1]);
    }
  }
  // density vanishes toward lambda = 0; the first node is already tiny
  CHECK(g.p.front() < 0.05 * g.p.back());
}

TEST_CASE("spectral grid rejects bad parameters") {
  CHECK_THROWS_AS(build_spectral_grid(8.0, 8, 32), Error);
  CHECK_THROWS_AS(build_spectral_grid(8.0, 64, 31), Error);
  CHECK_THROWS_AS(build_spectral_grid(8.0, 64, 4), Error);
  CHECK_THROWS_AS(build_spectral_grid(-2.0, 64, 32), Error);
}

TEST_CASE("norms and top-mode diagnostics") {
  auto kg = std::make_shared<SpectralGrid>(build_spectral_grid(4.0, 32, 16));
  SpectralFunction F(kg);
  CHECK(plancherel_norm(F) == 0.0);
  F.at(3, 2) = Complex(2.0, 0.0);
  const double expect = 2.0 * std::sqrt(kg->node_weight(3));
  CHECK(plancherel_norm(F) == doctest::Approx(expect).epsilon(1e-14));

  SpectralFunction G(kg);
  for (int k = 0; k < kg->n_b; ++k)
    G.at(1, k) = Complex((k % 2 == 0) ? 1.0 : -1.0, 0.0);  // pure Nyquist mode
  CHECK(top_boundary_mode_fraction(G) == doctest::Approx(1.0).epsilon(1e-12));
  for (int k = 0; k < kg->n_b; ++k) G.at(1, k) = Complex(1.0, 0.0);
  CHECK(top_boundary_mode_fraction(G) < 1e-30);
}
