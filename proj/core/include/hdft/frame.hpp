#pragma once

#include <optional>

#include "hdft/lattice.hpp"
#include "hdft/solver.hpp"
#include "hdft/transform.hpp"

namespace hdft {

/// The sampling operator of the band-limited space at the lattice points:
/// row j pairs a spectral function with k_{x_j} = restriction to the band of
/// the transform of the Dirac mass at x_j, so that (E F)_j = f(x_j)
/// reproduces inverse_at entry for entry. Columns are the band nodes
/// (lambda_i <= omega, all b_k); the adjoint and the frame operator are
/// taken in the Plancherel-weighted inner product.
class AnalysisOperator {
 public:
  AnalysisOperator(std::shared_ptr<const SpectralGrid> grid,
                   std::vector<DiskPoint> points, double omega);

  /// Synthetic operator from an explicit kernel matrix (rows x cols,
  /// row-major k_j(c)) and column weights; for tests.
  AnalysisOperator(std::vector<Complex> kernel, std::vector<double> col_weight,
                   std::size_t rows);

  std::size_t rows() const { return n_points_; }
  std::size_t cols() const { return col_weight_.size(); }
  double omega() const { return omega_; }
  const std::vector<int>& band_indices() const { return band_idx_; }
  const std::vector<double>& col_weights() const { return col_weight_; }
  std::shared_ptr<const SpectralGrid> grid() const { return grid_; }
  const std::vector<DiskPoint>& points() const { return points_; }

  /// samples_j = sum_c conj(K[j,c]) w_c F_c; accumulation order matches
  /// Transform::inverse_at so the two agree to roundoff.
  void apply(const Complex* band_vec, Complex* samples) const;
  /// (E^* v)_c = sum_j v_j K[j,c].
  void adjoint(const Complex* samples, Complex* band_vec) const;

  /// Band restriction / zero-extension between full spectral functions and
  /// band coefficient vectors.
  std::vector<Complex> band_restrict(const SpectralFunction& F) const;
  SpectralFunction band_embed(const std::vector<Complex>& v) const;

  /// Dense Gram G = K^H K (Hermitian, cols x cols), built once; the frame
  /// operator applies as (S v)_c = sum_{c'} conj(G[c,c']) w_{c'} v_{c'}.
  void ensure_gram() const;
  void frame_apply(const Complex* in, Complex* out) const;
  WeightedOperator frame_operator() const;

  /// Row j of the kernel matrix, k_{x_j} as band coefficients.
  const Complex* kernel_row(std::size_t j) const { return &kernel_[j * cols()]; }

 private:
  std::shared_ptr<const SpectralGrid> grid_;
  std::vector<DiskPoint> points_;
  double omega_ = 0.0;
  std::size_t n_points_ = 0;
  std::vector<int> band_idx_;
  std::vector<double> col_weight_;
  std::vector<Complex> kernel_;  // N x M row-major, k_j(c)
  mutable std::vector<Complex> gram_;
};

AnalysisOperator assemble_analysis(const Lattice& L, double omega,
                                   std::shared_ptr<const SpectralGrid> grid);

struct FrameBounds {
  double A = 0.0;
  double B = 0.0;
  double cond() const { return A > 0.0 ? B / A : 0.0; }
};

/// Extreme eigenvalues of the frame operator by power iteration (largest)
/// and shifted power iteration (smallest), deterministic all-ones start.
/// Throws RankDeficientError when A < 1e-12 B.
FrameBounds frame_bounds(const AnalysisOperator& E, double eig_tol = 1e-8,
                         int max_iter = 20000);

/// A certified sampling frame: operator, bounds and solver settings.
struct FrameSystem {
  AnalysisOperator E;
  FrameBounds bounds;
  double omega = 0.0;
  double solver_tol = 1e-10;
  int max_iter_factor = 10;
  std::optional<Lattice> lattice;  // present when built from a lattice

  int max_iter() const {
    return max_iter_factor * static_cast<int>(E.cols());
  }
  /// Samples of a band-limited spectral function at the lattice points.
  std::vector<Complex> sample(const SpectralFunction& F) const;
};

FrameSystem build_frame_system(const Lattice& L, double omega,
                               std::shared_ptr<const SpectralGrid> grid,
                               double solver_tol = 1e-10,
                               double eig_tol = 1e-8,
                               int max_iter_factor = 10);

/// Reconstructs the band-limited spectral function from its samples by a
/// conjugate-gradient solve of S u = E^* samples. Returns the zero-extended
/// spectral function.
SpectralFunction dual_apply(const std::vector<Complex>& samples,
                            const FrameSystem& fs);

/// The dual frame members Theta_hat_{x_j} = S^{-1} k_{x_j}, one CG solve per
/// lattice point, as band coefficient vectors. Heavy for large frames.
std::vector<std::vector<Complex>> dual_frame_functions(const FrameSystem& fs);

}  // namespace hdft
