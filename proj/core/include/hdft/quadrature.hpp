#pragma once

#include "hdft/frame.hpp"

namespace hdft {

/// A geodesic ball U inside the truncated domain.
struct BallRegion {
  DiskPoint center;
  double radius = 0.0;
};

/// A spectral slab V = [lambda_lo, lambda_hi) x full circle, half-open so
/// that adjacent slabs tile without overlap.
struct BandInterval {
  double lambda_lo = 0.0;
  double lambda_hi = 0.0;
};

enum class RuleKind { Spatial, Spectral };

/// Weights w_j (or upsilon_j) indexed like the lattice points: the rule
/// integrates any band-limited function from its samples,
/// sum_j f(x_j) weight_j.
struct QuadratureRule {
  RuleKind kind;
  std::vector<Complex> weights;
};

/// Spatial quadrature weights w_j = int_U Theta_j dx, computed by inverting
/// each dual-frame member to the spatial grid and integrating the indicator
/// of U against the grid weights. Throws when U is not contained in the
/// grid ball.
QuadratureRule spatial_weights(const BallRegion& U, const FrameSystem& fs,
                               const Transform& t,
                               const std::vector<std::vector<Complex>>& duals);

/// Spectral-side weights upsilon_j = int_V Theta_hat_j dmu. Per-node
/// partial sums are accumulated in ascending lambda order, so weights for
/// adjacent slabs add exactly to the union's weights. Throws when V pokes
/// outside [0, omega].
QuadratureRule spectral_weights(const BandInterval& V, const FrameSystem& fs,
                                const std::vector<std::vector<Complex>>& duals);

/// sum_j samples_j * weight_j.
Complex apply_rule(const std::vector<Complex>& samples,
                   const QuadratureRule& rule);

/// Direct grid integration of a spectral function over U: indicator of U at
/// the nodes against the grid weights. The comparison side of the exactness
/// tests.
Complex integrate_ball(const SpatialFunction& f, const BallRegion& U);

}  // namespace hdft
