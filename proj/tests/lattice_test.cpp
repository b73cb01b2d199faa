#include <doctest.h>

#include <cmath>

#include "hdft/lattice.hpp"

using namespace hdft;

TEST_CASE("nyquist radius rule") {
  CHECK(nyquist_radius(2.0, 1.5) ==
        doctest::Approx(1.5 / std::sqrt(4.25)).epsilon(1e-15));
  // large-omega asymptote r ~ c/omega
  CHECK(nyquist_radius(1e4, 2.0) == doctest::Approx(2.0 / 1e4).epsilon(1e-7));
  // the omega -> 0 limit is 2c at rho = 1/2
  CHECK(nyquist_radius(1e-9, 3.0) == doctest::Approx(6.0).epsilon(1e-12));
  CHECK_THROWS_AS(nyquist_radius(-1.0, 1.0), Error);
}

TEST_CASE("tiny domain collapses to the origin") {
  const Lattice L = build_lattice(0.3, 1.0, 0);
  REQUIRE(L.points.size() == 1);
  CHECK(std::abs(L.points[0].z()) == 0.0);
  // single point: covering radius is the domain radius, up to probe spacing
  CHECK(L.certificate.covering_radius <= 0.3);
  CHECK(L.certificate.covering_radius >= 0.3 - 0.3 / 32.0);
}

TEST_CASE("certificates hold on constructed lattices") {
  for (double r : {0.9, 0.5}) {
    const Lattice L = build_lattice(3.0, r, 0);
    CHECK(L.certificate.min_pairwise >= 0.5 * r - 1e-12);
    CHECK(L.certificate.covering_radius <= 0.5 * r + 1e-12);
    // brute-force separation scan, independent of the builder's bookkeeping
    double minq = 1e300;
    for (std::size_t i = 0; i < L.points.size(); ++i)
      for (std::size_t j = i + 1; j < L.points.size(); ++j)
        minq = std::min(minq, dist_surrogate(L.points[i], L.points[j]));
    CHECK(std::acosh(1.0 + minq) ==
          doctest::Approx(L.certificate.min_pairwise).epsilon(1e-12));
    // packing bound: disjoint r/4 balls fit inside the enlarged ball
    CHECK(L.points.size() * ball_area(0.25 * r) <= ball_area(3.0 + 0.25 * r));
    // independent re-measurement agrees
    const LatticeCertificate cert = verify_lattice(L);
    CHECK(cert.min_pairwise ==
          doctest::Approx(L.certificate.min_pairwise).epsilon(1e-12));
    CHECK(cert.covering_radius <= 0.5 * r + 1e-12);
  }
}

TEST_CASE("construction is deterministic") {
  const Lattice a = build_lattice(3.0, 0.7, 1);
  const Lattice b = build_lattice(3.0, 0.7, 2);
  REQUIRE(a.points.size() == b.points.size());
  for (std::size_t j = 0; j < a.points.size(); ++j)
    CHECK(a.points[j].z() == b.points[j].z());
}

TEST_CASE("point count is nonincreasing in r") {
  std::size_t prev = std::numeric_limits<std::size_t>::max();
  for (double r : {0.4, 0.55, 0.7, 0.9, 1.2}) {
    const Lattice L = build_lattice(3.0, r, 0);
    CHECK(L.points.size() <= prev);
    prev = L.points.size();
  }
}

TEST_CASE("cover multiplicity stays moderate") {
  const Lattice L = build_lattice(3.0, 0.5, 0);
  CHECK(L.certificate.multiplicity <= 25);
  CHECK(L.certificate.multiplicity >= 1);
}

TEST_CASE("degenerate inputs") {
  CHECK_THROWS_AS(build_lattice(3.0, -0.1, 0), Error);
  CHECK_THROWS_AS(build_lattice(3.0, 1e-4, 0), Error);  // covering uncertifiable
  Lattice empty;
  empty.r = 0.5;
  empty.R = 1.0;
  CHECK_THROWS_AS((void)verify_lattice(empty), Error);
}
