#include "hdft/frame.hpp"

#include <cmath>

#include "hdft/parallel.hpp"

namespace hdft {

AnalysisOperator::AnalysisOperator(std::shared_ptr<const SpectralGrid> grid,
                                   std::vector<DiskPoint> points, double omega)
    : grid_(std::move(grid)), points_(std::move(points)), omega_(omega) {
  if (points_.empty()) throw Error("AnalysisOperator: empty point set");
  if (!(omega > 0.0)) throw Error("AnalysisOperator: omega must be positive");
  const SpectralGrid& g = *grid_;
  for (int i = 0; i < g.n_lambda; ++i)
    if (g.lambda[i] <= omega) band_idx_.push_back(i);
  if (band_idx_.empty())
    throw Error("AnalysisOperator: no spectral nodes below omega");
  n_points_ = points_.size();

  const int nb = g.n_b;
  const std::size_t M = band_idx_.size() * nb;
  col_weight_.resize(M);
  for (std::size_t bi = 0; bi < band_idx_.size(); ++bi)
    for (int k = 0; k < nb; ++k)
      col_weight_[bi * nb + k] = g.node_weight(band_idx_[bi]);

  kernel_.resize(n_points_ * M);
  parallel_for(n_points_, [&](std::size_t j0, std::size_t j1) {
    for (std::size_t j = j0; j < j1; ++j) {
      Complex* row = &kernel_[j * M];
      const DiskPoint& z = points_[j];
      for (int k = 0; k < nb; ++k) {
        const double bx = std::cos(g.thetas_b[k]);
        const double by = std::sin(g.thetas_b[k]);
        const double A = busemann_raw(z.x(), z.y(), bx, by);
        const double amp = std::exp(0.5 * A);
        for (std::size_t bi = 0; bi < band_idx_.size(); ++bi) {
          const double ph = g.lambda[band_idx_[bi]] * A;
          // k_j = e^{(-i lambda + 1/2) A}
          row[bi * nb + k] = Complex(amp * std::cos(ph), -amp * std::sin(ph));
        }
      }
    }
  });
}

AnalysisOperator::AnalysisOperator(std::vector<Complex> kernel,
                                   std::vector<double> col_weight,
                                   std::size_t rows)
    : n_points_(rows), col_weight_(std::move(col_weight)),
      kernel_(std::move(kernel)) {
  if (rows == 0 || col_weight_.empty() ||
      kernel_.size() != rows * col_weight_.size())
    throw Error("AnalysisOperator: inconsistent synthetic dimensions");
}

void AnalysisOperator::apply(const Complex* band_vec, Complex* samples) const {
  const std::size_t M = cols();
  const std::size_t nb = grid_ ? static_cast<std::size_t>(grid_->n_b) : M;
  const std::size_t nbi = M / nb;
  std::vector<Complex> x(M);
  for (std::size_t c = 0; c < M; ++c) x[c] = band_vec[c] * col_weight_[c];
  parallel_for(n_points_, [&](std::size_t j0, std::size_t j1) {
    for (std::size_t j = j0; j < j1; ++j) {
      const Complex* row = &kernel_[j * M];
      double sr = 0.0, si = 0.0;
      // k outer, lambda inner: the same order as Transform::inverse_at
      for (std::size_t k = 0; k < nb; ++k)
        for (std::size_t bi = 0; bi < nbi; ++bi) {
          const Complex kv = row[bi * nb + k];
          const Complex xv = x[bi * nb + k];
          // conj(k_j) * x
          sr += kv.real() * xv.real() + kv.imag() * xv.imag();
          si += kv.real() * xv.imag() - kv.imag() * xv.real();
        }
      samples[j] = Complex(sr, si);
    }
  });
}

void AnalysisOperator::adjoint(const Complex* samples, Complex* band_vec) const {
  const std::size_t M = cols();
  parallel_for(M, [&](std::size_t c0, std::size_t c1) {
    for (std::size_t c = c0; c < c1; ++c) {
      Complex s(0.0, 0.0);
      for (std::size_t j = 0; j < n_points_; ++j)
        s += samples[j] * kernel_[j * M + c];
      band_vec[c] = s;
    }
  });
}

std::vector<Complex> AnalysisOperator::band_restrict(
    const SpectralFunction& F) const {
  if (!grid_ || F.grid.get() != grid_.get())
    throw Error("band_restrict: function lives on a different grid");
  const int nb = grid_->n_b;
  std::vector<Complex> v(cols());
  for (std::size_t bi = 0; bi < band_idx_.size(); ++bi)
    for (int k = 0; k < nb; ++k)
      v[bi * nb + k] = F.at(band_idx_[bi], k);
  return v;
}

SpectralFunction AnalysisOperator::band_embed(
    const std::vector<Complex>& v) const {
  if (!grid_) throw Error("band_embed: synthetic operator has no grid");
  if (v.size() != cols()) throw Error("band_embed: size mismatch");
  SpectralFunction F(grid_);
  const int nb = grid_->n_b;
  for (std::size_t bi = 0; bi < band_idx_.size(); ++bi)
    for (int k = 0; k < nb; ++k)
      F.at(band_idx_[bi], k) = v[bi * nb + k];
  return F;
}

void AnalysisOperator::ensure_gram() const {
  if (!gram_.empty()) return;
  const std::size_t M = cols();
  const std::size_t N = n_points_;
  gram_.assign(M * M, Complex(0.0, 0.0));
  // Upper triangle accumulated j-row by j-row, then mirrored.
  parallel_for(M, [&](std::size_t c0, std::size_t c1) {
    for (std::size_t j = 0; j < N; ++j) {
      const Complex* row = &kernel_[j * M];
      for (std::size_t c = c0; c < c1; ++c) {
        const Complex a = std::conj(row[c]);
        Complex* g = &gram_[c * M];
        for (std::size_t d = c; d < M; ++d) g[d] += a * row[d];
      }
    }
  });
  for (std::size_t c = 0; c < M; ++c)
    for (std::size_t d = c + 1; d < M; ++d)
      gram_[d * M + c] = std::conj(gram_[c * M + d]);
}

void AnalysisOperator::frame_apply(const Complex* in, Complex* out) const {
  ensure_gram();
  const std::size_t M = cols();
  std::vector<Complex> x(M);
  for (std::size_t c = 0; c < M; ++c) x[c] = in[c] * col_weight_[c];
  parallel_for(M, [&](std::size_t c0, std::size_t c1) {
    for (std::size_t c = c0; c < c1; ++c) {
      const Complex* g = &gram_[c * M];
      double sr = 0.0, si = 0.0;
      for (std::size_t d = 0; d < M; ++d) {
        // conj(G[c,d]) * x_d
        sr += g[d].real() * x[d].real() + g[d].imag() * x[d].imag();
        si += g[d].real() * x[d].imag() - g[d].imag() * x[d].real();
      }
      out[c] = Complex(sr, si);
    }
  });
}

WeightedOperator AnalysisOperator::frame_operator() const {
  ensure_gram();
  WeightedOperator op;
  op.dim = cols();
  op.weights = col_weight_.data();
  op.apply = [this](const Complex* in, Complex* out) { frame_apply(in, out); };
  return op;
}

AnalysisOperator assemble_analysis(const Lattice& L, double omega,
                                   std::shared_ptr<const SpectralGrid> grid) {
  return AnalysisOperator(std::move(grid), L.points, omega);
}

FrameBounds frame_bounds(const AnalysisOperator& E, double eig_tol,
                         int max_iter) {
  const WeightedOperator op = E.frame_operator();
  FrameBounds fb;
  fb.B = power_iteration(op, eig_tol, max_iter).eigenvalue;
  if (!(fb.B > 0.0)) throw RankDeficientError(0.0, fb.B);
  fb.A = shifted_power_iteration(op, fb.B * (1.0 + 1e-3), eig_tol, max_iter)
             .eigenvalue;
  if (fb.A < 1e-12 * fb.B) throw RankDeficientError(fb.A, fb.B);
  return fb;
}

std::vector<Complex> FrameSystem::sample(const SpectralFunction& F) const {
  const std::vector<Complex> v = E.band_restrict(F);
  std::vector<Complex> out(E.rows());
  E.apply(v.data(), out.data());
  return out;
}

FrameSystem build_frame_system(const Lattice& L, double omega,
                               std::shared_ptr<const SpectralGrid> grid,
                               double solver_tol, double eig_tol,
                               int max_iter_factor) {
  FrameSystem fs{assemble_analysis(L, omega, std::move(grid)),
                 FrameBounds{},
                 omega,
                 solver_tol,
                 max_iter_factor,
                 L};
  fs.bounds = frame_bounds(fs.E, eig_tol);
  return fs;
}

SpectralFunction dual_apply(const std::vector<Complex>& samples,
                            const FrameSystem& fs) {
  if (samples.size() != fs.E.rows())
    throw Error("dual_apply: sample count does not match the lattice");
  if (!(fs.bounds.A > 0.0)) throw Error("dual_apply: frame not certified");
  std::vector<Complex> rhs(fs.E.cols());
  fs.E.adjoint(samples.data(), rhs.data());
  const CgResult sol = conjugate_gradient(fs.E.frame_operator(), rhs,
                                          fs.solver_tol, fs.max_iter());
  return fs.E.band_embed(sol.x);
}

std::vector<std::vector<Complex>> dual_frame_functions(const FrameSystem& fs) {
  if (!(fs.bounds.A > 0.0))
    throw Error("dual_frame_functions: frame not certified");
  const std::size_t N = fs.E.rows();
  const std::size_t M = fs.E.cols();
  fs.E.ensure_gram();
  const WeightedOperator op = fs.E.frame_operator();
  std::vector<std::vector<Complex>> duals(N);
  // One solve per lattice point, E^* e_j being just the j-th kernel row.
  for (std::size_t j = 0; j < N; ++j) {
    std::vector<Complex> rhs(fs.E.kernel_row(j), fs.E.kernel_row(j) + M);
    duals[j] = conjugate_gradient(op, rhs, fs.solver_tol, fs.max_iter()).x;
  }
  return duals;
}

}  // namespace hdft
