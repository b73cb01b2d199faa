#include <doctest.h>

#include <cmath>
#include <random>

#include "hdft/geometry.hpp"

using namespace hdft;

namespace {

// Independent oracle: arc length of the radial segment [0, t] under the
// metric 2 |dz| / (1 - |z|^2), by composite Simpson.
double radial_length_oracle(double t) {
  const int n = 20000;
  const double h = t / n;
  double s = 0.0;
  auto g = [](double x) { return 2.0 / (1.0 - x * x); };
  for (int i = 0; i < n; ++i) {
    const double a = i * h, b = a + h;
    s += (h / 6.0) * (g(a) + 4.0 * g(0.5 * (a + b)) + g(b));
  }
  return s;
}

DiskPoint random_point(std::mt19937_64& rng, double max_r = 4.0) {
  std::uniform_real_distribution<double> rad(0.0, max_r), ang(0.0, 2 * M_PI);
  return polar_to_point(rad(rng), ang(rng));
}

}  // namespace

TEST_CASE("distance identity and radial value") {
  CHECK(dist(DiskPoint(0.0, 0.0), DiskPoint(0.0, 0.0)) == 0.0);
  const double oracle = radial_length_oracle(0.5);
  CHECK(std::abs(oracle - std::log(3.0)) < 1e-12);
  CHECK(std::abs(dist(DiskPoint(0.0, 0.0), DiskPoint(0.5, 0.0)) - std::log(3.0)) <
        1e-12);
}

TEST_CASE("distance symmetry") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 100; ++t) {
    const DiskPoint p = random_point(rng), q = random_point(rng);
    CHECK(dist(p, q) == doctest::Approx(dist(q, p)).epsilon(1e-14));
  }
}

TEST_CASE("busemann at the origin and along the radius") {
  for (double th : {0.0, 1.0, 2.5, 5.5})
    CHECK(std::abs(busemann(DiskPoint(0.0, 0.0), BoundaryPoint(th))) < 1e-15);
  const double th = 0.7;
  const DiskPoint z = polar_to_point(std::log(3.0), th);
  CHECK(std::abs(std::abs(z.z()) - 0.5) < 1e-12);
  CHECK(std::abs(busemann(z, BoundaryPoint(th)) - std::log(3.0)) < 1e-12);
}

TEST_CASE("busemann is 1-Lipschitz along the metric") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> ang(0.0, 2 * M_PI);
  for (int t = 0; t < 1000; ++t) {
    const DiskPoint p = random_point(rng), q = random_point(rng);
    const BoundaryPoint b(ang(rng));
    const double diff = std::abs(busemann(p, b) - busemann(q, b));
    CHECK(diff <= dist(p, q) * (1.0 + 1e-12) + 1e-12);
  }
}

TEST_CASE("mobius translation basics") {
  std::mt19937_64 rng(13);
  for (int t = 0; t < 50; ++t) {
    const DiskPoint a = random_point(rng, 3.0), p = random_point(rng, 3.0);
    const DiskPoint ta0 = mobius_translate(a, DiskPoint(0.0, 0.0));
    CHECK(std::abs(ta0.z() - a.z()) < 1e-15);
    const DiskPoint idp = mobius_translate(DiskPoint(0.0, 0.0), p);
    CHECK(std::abs(idp.z() - p.z()) < 1e-15);
  }
}

TEST_CASE("mobius translations are isometries") {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 100; ++t) {
    const DiskPoint a = random_point(rng, 3.0);
    const DiskPoint p = random_point(rng, 3.0), q = random_point(rng, 3.0);
    const double before = dist(p, q);
    const double after = dist(mobius_translate(a, p), mobius_translate(a, q));
    CHECK(std::abs(after - before) <= 1e-12 * (1.0 + before));
  }
}

TEST_CASE("polar round trips") {
  CHECK(std::abs(polar_to_point(0.0, 1.3).z()) == 0.0);
  const Polar back = point_to_polar(polar_to_point(1.0, 0.3));
  CHECK(std::abs(back.r - 1.0) < 1e-12);
  CHECK(std::abs(back.theta - 0.3) < 1e-12);

  std::mt19937_64 rng(19);
  std::uniform_real_distribution<double> ang(-M_PI, M_PI);
  for (double r : {1e-6, 1e-3, 0.5, 2.0, 6.0, 10.0}) {
    const double th = ang(rng);
    const Polar p = point_to_polar(polar_to_point(r, th));
    CHECK(std::abs(p.r - r) <= 1e-12 * std::max(1.0, r));
    CHECK(std::abs(p.theta - th) < 1e-12);
  }
  std::uniform_real_distribution<double> rad(0.0, 6.0);
  for (int t = 0; t < 100; ++t) {
    const double r = rad(rng), th = ang(rng);
    CHECK(std::abs(dist(DiskPoint(0.0, 0.0), polar_to_point(r, th)) - r) < 1e-12);
  }
}

TEST_CASE("construction rejects points at the rim") {
  CHECK_THROWS_AS(DiskPoint(1.0, 0.0), Error);
  CHECK_THROWS_AS(DiskPoint(Complex(0.0, 1.0 - 1e-13)), Error);
  CHECK_NOTHROW(DiskPoint(Complex(0.0, 1.0 - 1e-11)));
}

TEST_CASE("ball area against a numeric integral of sinh") {
  // Simpson on 2*pi*sinh(r) over [0, 3].
  const int n = 20000;
  const double h = 3.0 / n;
  double s = 0.0;
  for (int i = 0; i < n; ++i) {
    const double a = i * h, b = a + h;
    s += (h / 6.0) * (std::sinh(a) + 4.0 * std::sinh(0.5 * (a + b)) + std::sinh(b));
  }
  s *= 2 * M_PI;
  CHECK(std::abs(ball_area(3.0) - s) < 1e-9);
  CHECK(ball_area(3.0) == doctest::Approx(56.946).epsilon(1e-3));
}
