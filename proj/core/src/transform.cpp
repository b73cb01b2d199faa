#include "hdft/transform.hpp"

#include <cmath>

#include "hdft/parallel.hpp"

namespace hdft {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

int next_pow2(int n) {
  int p = 1;
  while (p < n) p <<= 1;
  return p;
}

// In-place radix-2 FFT, sign = -1 for e^{-i...} (analysis).
void fft(std::vector<Complex>& a, int sign) {
  const int n = static_cast<int>(a.size());
  for (int i = 1, j = 0; i < n; ++i) {
    int bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  for (int len = 2; len <= n; len <<= 1) {
    const double ang = sign * kTwoPi / len;
    const Complex wl(std::cos(ang), std::sin(ang));
    for (int i = 0; i < n; i += len) {
      Complex w(1.0, 0.0);
      for (int j = 0; j < len / 2; ++j) {
        const Complex u = a[i + j];
        const Complex v = a[i + j + len / 2] * w;
        a[i + j] = u + v;
        a[i + j + len / 2] = u - v;
        w *= wl;
      }
    }
  }
}

// Dense angular sample count needed so the trapezoid alias of the kernel at
// modes <= m_max stays below roundoff: contributions decay like
// tanh(r/2)^m with a prefactor growing at most like e^{lambda}.
int dense_size(double r, double lambda_max, int m_max) {
  const double t = std::tanh(0.5 * std::max(r, 1e-8));
  const double rate = -std::log(t);
  const double need = m_max + (40.0 + lambda_max) / std::max(rate, 1e-6);
  return next_pow2(std::max(256, static_cast<int>(need) + 1));
}

}  // namespace

void phi_modes(double lambda, double r, int m_max, Complex* out) {
  if (r <= 1e-14) {
    out[0] = Complex(1.0, 0.0);
    for (int m = 1; m <= m_max; ++m) out[m] = Complex(0.0, 0.0);
    return;
  }
  const int n = dense_size(r, lambda, m_max);
  const double t = std::tanh(0.5 * r);
  const double one_minus = 1.0 - t * t;
  const double one_plus = 1.0 + t * t;
  std::vector<Complex> a(n);
  for (int d = 0; d < n; ++d) {
    const double A =
        std::log(one_minus / (one_plus - 2.0 * t * std::cos(kTwoPi * d / n)));
    const double amp = std::exp(0.5 * A);
    a[d] = Complex(amp * std::cos(lambda * A), amp * std::sin(lambda * A));
  }
  fft(a, -1);
  // Phi_m is even in m, so bin m suffices.
  for (int m = 0; m <= m_max; ++m) out[m] = a[m] / static_cast<double>(n);
}

Transform::Transform(std::shared_ptr<const SpatialGrid> spatial,
                     std::shared_ptr<const SpectralGrid> spectral)
    : spatial_(std::move(spatial)), spectral_(std::move(spectral)) {}

void Transform::ensure_table() const {
  if (table_ready_) return;
  const SpatialGrid& sg = *spatial_;
  const SpectralGrid& kg = *spectral_;
  const int mm = kg.n_b / 2;
  phi_.assign(static_cast<size_t>(kg.n_lambda) * sg.n_r * (mm + 1),
              Complex(0.0, 0.0));
  parallel_for(sg.n_r, [&](std::size_t r0, std::size_t r1) {
    for (std::size_t r = r0; r < r1; ++r) {
      const int n = dense_size(sg.radii[r], kg.Lambda_max, mm);
      const double t = std::tanh(0.5 * sg.radii[r]);
      const double one_minus = 1.0 - t * t;
      const double one_plus = 1.0 + t * t;
      std::vector<double> A(n), amp(n);
      for (int d = 0; d < n; ++d) {
        A[d] = std::log(one_minus /
                        (one_plus - 2.0 * t * std::cos(kTwoPi * d / n)));
        amp[d] = std::exp(0.5 * A[d]);
      }
      std::vector<Complex> a(n);
      for (int i = 0; i < kg.n_lambda; ++i) {
        const double l = kg.lambda[i];
        for (int d = 0; d < n; ++d)
          a[d] = Complex(amp[d] * std::cos(l * A[d]), amp[d] * std::sin(l * A[d]));
        fft(a, -1);
        Complex* row = &phi_[(static_cast<size_t>(i) * sg.n_r + r) * (mm + 1)];
        for (int m = 0; m <= mm; ++m) row[m] = a[m] / static_cast<double>(n);
      }
    }
  });
  table_ready_ = true;
}

double Transform::boundary_mass_fraction(const SpatialFunction& f) const {
  const SpatialGrid& g = *spatial_;
  double shell = 0.0, total = 0.0;
  for (int i = 0; i < g.n_r; ++i) {
    double row = 0.0;
    for (int j = 0; j < g.n_theta; ++j) row += std::norm(f.at(i, j));
    const double contrib = row * g.radial_w[i] * g.theta_weight();
    total += contrib;
    if (g.radii[i] > g.R - 1.0) shell += contrib;
  }
  return total > 0.0 ? shell / total : 0.0;
}

SpectralFunction Transform::forward(const SpatialFunction& f,
                                    double boundary_limit) const {
  if (f.grid.get() != spatial_.get())
    throw Error("forward: function lives on a different grid");
  const double bm = boundary_mass_fraction(f);
  if (bm > boundary_limit) throw BoundaryMassError(bm, boundary_limit);
  ensure_table();

  const SpatialGrid& sg = *spatial_;
  const SpectralGrid& kg = *spectral_;
  const int nr = sg.n_r, nt = sg.n_theta, nb = kg.n_b, nl = kg.n_lambda;
  const int mm = kg.n_b / 2;

  // Angular analysis of f, ring by ring: fbin[b][r], b over theta bins.
  std::vector<Complex> fbin(static_cast<size_t>(nt) * nr);
  parallel_for(nt, [&](std::size_t b0, std::size_t b1) {
    std::vector<Complex> tw(nt);
    for (std::size_t b = b0; b < b1; ++b) {
      const double ang = -kTwoPi * static_cast<double>(b) / nt;
      for (int j = 0; j < nt; ++j)
        tw[j] = Complex(std::cos(ang * j), std::sin(ang * j));
      for (int r = 0; r < nr; ++r) {
        Complex s(0.0, 0.0);
        const Complex* row = &f.values[static_cast<size_t>(r) * nt];
        for (int j = 0; j < nt; ++j) s += row[j] * tw[j];
        fbin[b * nr + r] = s / static_cast<double>(nt);
      }
    }
  });

  SpectralFunction F(spectral_);
  // Mode m of f contributes to the same mode of F when representable.
  std::vector<Complex> Fbin(static_cast<size_t>(nb) * nl, Complex(0.0, 0.0));
  parallel_for(nb, [&](std::size_t ob0, std::size_t ob1) {
    for (std::size_t ob = ob0; ob < ob1; ++ob) {
      const int m_out = (static_cast<int>(ob) <= nb / 2)
                            ? static_cast<int>(ob)
                            : static_cast<int>(ob) - nb;
      for (int ib = 0; ib < nt; ++ib) {
        const int m_in = (ib <= nt / 2) ? ib : ib - nt;
        if (m_in != m_out) continue;
        const int me = std::abs(m_in);
        if (me > mm) continue;
        for (int i = 0; i < nl; ++i) {
          const Complex* prow = &phi_[(static_cast<size_t>(i) * nr) * (mm + 1)];
          Complex s(0.0, 0.0);
          for (int r = 0; r < nr; ++r)
            s += fbin[static_cast<size_t>(ib) * nr + r] * sg.radial_w[r] *
                 std::conj(prow[static_cast<size_t>(r) * (mm + 1) + me]);
          Fbin[ob * nl + i] += kTwoPi * s;
        }
      }
    }
  });

  parallel_for(nb, [&](std::size_t k0, std::size_t k1) {
    std::vector<Complex> tw(nb);
    for (std::size_t k = k0; k < k1; ++k) {
      const double th = kg.thetas_b[k];
      for (int ob = 0; ob < nb; ++ob)
        tw[ob] = Complex(std::cos(th * ob), std::sin(th * ob));
      for (int i = 0; i < nl; ++i) {
        Complex s(0.0, 0.0);
        for (int ob = 0; ob < nb; ++ob)
          s += Fbin[static_cast<size_t>(ob) * nl + i] * tw[ob];
        F.at(i, static_cast<int>(k)) = s;
      }
    }
  });
  return F;
}

SpatialFunction Transform::inverse_on_grid(const SpectralFunction& F) const {
  if (F.grid.get() != spectral_.get())
    throw Error("inverse_on_grid: function lives on a different grid");
  ensure_table();

  const SpatialGrid& sg = *spatial_;
  const SpectralGrid& kg = *spectral_;
  const int nr = sg.n_r, nt = sg.n_theta, nb = kg.n_b, nl = kg.n_lambda;
  const int mm = kg.n_b / 2;

  std::vector<Complex> Fbin(static_cast<size_t>(nb) * nl);
  parallel_for(nb, [&](std::size_t b0, std::size_t b1) {
    std::vector<Complex> tw(nb);
    for (std::size_t b = b0; b < b1; ++b) {
      const double ang = -kTwoPi * static_cast<double>(b) / nb;
      for (int k = 0; k < nb; ++k)
        tw[k] = Complex(std::cos(ang * k), std::sin(ang * k));
      for (int i = 0; i < nl; ++i) {
        Complex s(0.0, 0.0);
        const Complex* row = &F.values[static_cast<size_t>(i) * nb];
        for (int k = 0; k < nb; ++k) s += row[k] * tw[k];
        Fbin[b * nl + i] = s / static_cast<double>(nb);
      }
    }
  });

  // Radial synthesis per mode: gbin[b][r], then angular synthesis per ring.
  std::vector<Complex> gbin(static_cast<size_t>(nb) * nr, Complex(0.0, 0.0));
  parallel_for(nb, [&](std::size_t b0, std::size_t b1) {
    for (std::size_t b = b0; b < b1; ++b) {
      const int m = (static_cast<int>(b) <= nb / 2) ? static_cast<int>(b)
                                                    : static_cast<int>(b) - nb;
      const int me = std::abs(m);
      for (int i = 0; i < nl; ++i) {
        const double w = kg.p[i] * kg.q[i];
        const Complex c = Fbin[b * nl + i] * w;
        const Complex* prow = &phi_[(static_cast<size_t>(i) * nr) * (mm + 1)];
        for (int r = 0; r < nr; ++r)
          gbin[b * nr + r] += c * prow[static_cast<size_t>(r) * (mm + 1) + me];
      }
    }
  });

  SpatialFunction f(spatial_);
  parallel_for(nt, [&](std::size_t j0, std::size_t j1) {
    std::vector<Complex> tw(nb);
    for (std::size_t j = j0; j < j1; ++j) {
      const double th = sg.thetas[j];
      for (int b = 0; b < nb; ++b) {
        const int m = (b <= nb / 2) ? b : b - nb;
        tw[b] = Complex(std::cos(th * m), std::sin(th * m));
      }
      for (int r = 0; r < nr; ++r) {
        Complex s(0.0, 0.0);
        for (int b = 0; b < nb; ++b)
          s += gbin[static_cast<size_t>(b) * nr + r] * tw[b];
        f.at(r, static_cast<int>(j)) = s;
      }
    }
  });
  return f;
}

std::vector<Complex> Transform::inverse_at(
    const SpectralFunction& F, std::span<const DiskPoint> points) const {
  if (F.grid.get() != spectral_.get())
    throw Error("inverse_at: function lives on a different grid");
  const SpectralGrid& kg = *spectral_;
  const int nb = kg.n_b, nl = kg.n_lambda;

  std::vector<double> Fr(static_cast<size_t>(nl) * nb), Fi(Fr.size());
  for (int i = 0; i < nl; ++i) {
    const double w = kg.node_weight(i);
    for (int k = 0; k < nb; ++k) {
      const Complex v = F.at(i, k) * w;
      Fr[static_cast<size_t>(i) * nb + k] = v.real();
      Fi[static_cast<size_t>(i) * nb + k] = v.imag();
    }
  }
  std::vector<double> bx(nb), by(nb);
  for (int k = 0; k < nb; ++k) {
    bx[k] = std::cos(kg.thetas_b[k]);
    by[k] = std::sin(kg.thetas_b[k]);
  }

  std::vector<Complex> out(points.size());
  parallel_for(points.size(), [&](std::size_t n0, std::size_t n1) {
    for (std::size_t n = n0; n < n1; ++n) {
      const DiskPoint& z = points[n];
      double sr = 0.0, si = 0.0;
      for (int k = 0; k < nb; ++k) {
        const double A = busemann_raw(z.x(), z.y(), bx[k], by[k]);
        const double amp = std::exp(0.5 * A);
        for (int i = 0; i < nl; ++i) {
          const double ph = kg.lambda[i] * A;
          const double c = amp * std::cos(ph), s = amp * std::sin(ph);
          const double a = Fr[static_cast<size_t>(i) * nb + k];
          const double b = Fi[static_cast<size_t>(i) * nb + k];
          sr += a * c - b * s;
          si += a * s + b * c;
        }
      }
      out[n] = Complex(sr, si);
    }
  });
  return out;
}

SpectralFunction apply_multiplier(const SpectralFunction& F,
                                  const std::function<Complex(double)>& m) {
  SpectralFunction G(F.grid);
  const int nb = F.grid->n_b;
  for (int i = 0; i < F.grid->n_lambda; ++i) {
    const Complex mi = m(F.grid->lambda[i]);
    if (!std::isfinite(mi.real()) || !std::isfinite(mi.imag()))
      throw Error("apply_multiplier: non-finite multiplier at lambda=" +
                  std::to_string(F.grid->lambda[i]));
    for (int k = 0; k < nb; ++k) G.values[i * nb + k] = mi * F.values[i * nb + k];
  }
  return G;
}

SpectralFunction apply_multiplier_real(const SpectralFunction& F,
                                       const std::function<double(double)>& m) {
  return apply_multiplier(F, [&m](double l) { return Complex(m(l), 0.0); });
}

CalibrationResult calibrate_plancherel(const Transform& t,
                                       const std::vector<SpectralFunction>& family,
                                       double spread_limit) {
  if (family.empty()) throw CalibrationError("calibration family is empty");
  CalibrationResult res;
  const double c_cur = t.spectral().c_P;
  for (const SpectralFunction& g : family) {
    const double spec = plancherel_norm_sq(g);
    if (!(spec > 0.0)) throw CalibrationError("calibration function has zero norm");
    const SpatialFunction f = t.inverse_on_grid(g);
    const double spat = l2_norm_sq(f);
    // With p = c * lambda tanh(pi lambda), ||inverse_c g||^2 scales like c^2
    // while ||g||^2 scales like c; the per-function isometry point follows.
    res.per_function.push_back(c_cur * spec / spat);
  }
  double lo = res.per_function[0], hi = res.per_function[0];
  for (double c : res.per_function) {
    lo = std::min(lo, c);
    hi = std::max(hi, c);
  }
  // Equalizes the worst relative mismatch of the two extremes.
  res.c_P = 2.0 * lo * hi / (lo + hi);
  res.spread = 0.0;
  for (double c : res.per_function)
    res.spread = std::max(res.spread, std::abs(c / res.c_P - 1.0));
  if (res.spread > spread_limit)
    throw CalibrationError("calibration spread " + std::to_string(res.spread) +
                           " exceeds " + std::to_string(spread_limit));
  return res;
}

}  // namespace hdft
