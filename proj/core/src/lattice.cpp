#include "hdft/lattice.hpp"

#include <algorithm>
#include <cmath>

#include "hdft/parallel.hpp"

namespace hdft {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

// Q = cosh(d) - 1, monotone in the distance; threshold comparisons avoid
// the acosh in the hot loops.
inline double q_between(double ax, double ay, double ainv, double bx,
                        double by, double binv) {
  const double dx = ax - bx, dy = ay - by;
  return 2.0 * (dx * dx + dy * dy) * ainv * binv;
}

}  // namespace

double nyquist_radius(double omega, double c) {
  if (!(omega > 0.0) || !(c > 0.0))
    throw Error("nyquist_radius: omega and c must be positive");
  return c / std::sqrt(omega * omega + kRhoSq);
}

ProbeGrid build_probe_grid(double R, double r) {
  if (!(r > 0.0) || !(R > 0.0)) throw Error("build_probe_grid: need R, r > 0");
  ProbeGrid g;
  g.n_r = std::max(64, static_cast<int>(std::ceil(8.0 * R / r)));
  g.n_theta = std::max(
      256, static_cast<int>(std::ceil(8.0 * kTwoPi * std::sinh(R) / r)));
  const std::size_t total =
      static_cast<std::size_t>(g.n_r) * static_cast<std::size_t>(g.n_theta);
  if (total > 8'000'000)
    throw Error("build_probe_grid: r too small to certify covering at this R");
  g.x.reserve(total);
  g.y.reserve(total);
  g.inv.reserve(total);
  for (int i = 0; i < g.n_r; ++i) {
    const double rad = (i + 0.5) * R / g.n_r;
    const double t = std::tanh(0.5 * rad);
    for (int j = 0; j < g.n_theta; ++j) {
      const double th = kTwoPi * j / g.n_theta;
      const double px = t * std::cos(th), py = t * std::sin(th);
      g.x.push_back(px);
      g.y.push_back(py);
      g.inv.push_back(1.0 / (1.0 - (px * px + py * py)));
    }
  }
  return g;
}

Lattice build_lattice(double R, double r, std::uint64_t /*seed*/) {
  if (!(r > 0.0)) throw Error("build_lattice: need r > 0");
  if (!(R > 0.0)) throw Error("build_lattice: need R > 0");

  Lattice L;
  L.r = r;
  L.R = R;
  const ProbeGrid probes = build_probe_grid(R, r);
  L.probe_n_r = probes.n_r;
  L.probe_n_theta = probes.n_theta;
  const std::size_t P = probes.size();

  const double q_half = std::cosh(0.5 * r) - 1.0;

  // Farthest distance (as Q) from each probe to the selected set.
  std::vector<double> best(P);
  L.points.emplace_back(Complex(0.0, 0.0));
  parallel_for(P, [&](std::size_t a, std::size_t b) {
    for (std::size_t n = a; n < b; ++n)
      best[n] = q_between(probes.x[n], probes.y[n], probes.inv[n], 0.0, 0.0, 1.0);
  });

  const unsigned nw = worker_count();
  std::vector<std::size_t> arg(nw);
  std::vector<double> val(nw);
  for (;;) {
    // Deterministic argmax: per-chunk winners, then lowest index among ties.
    const std::size_t chunk = (P + nw - 1) / nw;
    parallel_for(nw, [&](std::size_t w0, std::size_t w1) {
      for (std::size_t w = w0; w < w1; ++w) {
        const std::size_t a = w * chunk, b = std::min(P, a + chunk);
        double bv = -1.0;
        std::size_t bi = 0;
        for (std::size_t n = a; n < b; ++n)
          if (best[n] > bv) {
            bv = best[n];
            bi = n;
          }
        val[w] = bv;
        arg[w] = bi;
      }
    });
    double bv = -1.0;
    std::size_t bi = 0;
    for (unsigned w = 0; w < nw; ++w)
      if (val[w] > bv || (val[w] == bv && arg[w] < bi)) {
        bv = val[w];
        bi = arg[w];
      }
    if (bv <= q_half) {
      L.certificate.covering_radius = std::acosh(1.0 + std::max(bv, 0.0));
      break;
    }
    const double nx = probes.x[bi], ny = probes.y[bi], ninv = probes.inv[bi];
    L.points.emplace_back(Complex(nx, ny));
    parallel_for(P, [&](std::size_t a, std::size_t b) {
      for (std::size_t n = a; n < b; ++n) {
        const double q =
            q_between(probes.x[n], probes.y[n], probes.inv[n], nx, ny, ninv);
        if (q < best[n]) best[n] = q;
      }
    });
  }

  // Exact pairwise separation.
  const std::size_t N = L.points.size();
  double min_q = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = i + 1; j < N; ++j)
      min_q = std::min(min_q, dist_surrogate(L.points[i], L.points[j]));
  L.certificate.min_pairwise =
      N > 1 ? std::acosh(1.0 + min_q) : std::numeric_limits<double>::infinity();

  // Cover multiplicity at radius r over the probe grid.
  const double q_r = std::cosh(r) - 1.0;
  std::vector<double> px(N), py(N), pinv(N);
  for (std::size_t i = 0; i < N; ++i) {
    px[i] = L.points[i].x();
    py[i] = L.points[i].y();
    pinv[i] = 1.0 / (1.0 - (px[i] * px[i] + py[i] * py[i]));
  }
  std::vector<int> worst(nw, 0);
  {
    const std::size_t chunk = (P + nw - 1) / nw;
    parallel_for(nw, [&](std::size_t w0, std::size_t w1) {
      for (std::size_t w = w0; w < w1; ++w) {
        const std::size_t a = w * chunk, b = std::min(P, a + chunk);
        int mx = 0;
        for (std::size_t n = a; n < b; ++n) {
          int cnt = 0;
          for (std::size_t i = 0; i < N; ++i)
            if (q_between(probes.x[n], probes.y[n], probes.inv[n], px[i], py[i],
                          pinv[i]) <= q_r)
              ++cnt;
          mx = std::max(mx, cnt);
        }
        worst[w] = mx;
      }
    });
  }
  L.certificate.multiplicity = *std::max_element(worst.begin(), worst.end());
  return L;
}

LatticeCertificate verify_lattice(const Lattice& L) {
  if (L.points.empty()) throw Error("verify_lattice: empty lattice");
  LatticeCertificate cert;

  const std::size_t N = L.points.size();
  double min_q = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = i + 1; j < N; ++j)
      min_q = std::min(min_q, dist_surrogate(L.points[i], L.points[j]));
  cert.min_pairwise =
      N > 1 ? std::acosh(1.0 + min_q) : std::numeric_limits<double>::infinity();

  const ProbeGrid probes = build_probe_grid(L.R, L.r);
  const std::size_t P = probes.size();
  std::vector<double> px(N), py(N), pinv(N);
  for (std::size_t i = 0; i < N; ++i) {
    px[i] = L.points[i].x();
    py[i] = L.points[i].y();
    pinv[i] = 1.0 / (1.0 - (px[i] * px[i] + py[i] * py[i]));
  }
  const double q_r = std::cosh(L.r) - 1.0;
  const unsigned nw = worker_count();
  std::vector<double> cover(nw, 0.0);
  std::vector<int> mult(nw, 0);
  const std::size_t chunk = (P + nw - 1) / nw;
  parallel_for(nw, [&](std::size_t w0, std::size_t w1) {
    for (std::size_t w = w0; w < w1; ++w) {
      const std::size_t a = w * chunk, b = std::min(P, a + chunk);
      double cv = 0.0;
      int mx = 0;
      for (std::size_t n = a; n < b; ++n) {
        double nearest = std::numeric_limits<double>::infinity();
        int cnt = 0;
        for (std::size_t i = 0; i < N; ++i) {
          const double q = q_between(probes.x[n], probes.y[n], probes.inv[n],
                                     px[i], py[i], pinv[i]);
          nearest = std::min(nearest, q);
          if (q <= q_r) ++cnt;
        }
        cv = std::max(cv, nearest);
        mx = std::max(mx, cnt);
      }
      cover[w] = cv;
      mult[w] = mx;
    }
  });
  cert.covering_radius =
      std::acosh(1.0 + *std::max_element(cover.begin(), cover.end()));
  cert.multiplicity = *std::max_element(mult.begin(), mult.end());
  return cert;
}

}  // namespace hdft
