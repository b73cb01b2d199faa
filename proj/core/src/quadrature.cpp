#include "hdft/quadrature.hpp"

#include <cmath>

namespace hdft {

namespace {

bool in_ball(const DiskPoint& p, const BallRegion& U) {
  return dist_surrogate(p, U.center) <= std::cosh(U.radius) - 1.0;
}

}  // namespace

QuadratureRule spatial_weights(const BallRegion& U, const FrameSystem& fs,
                               const Transform& t,
                               const std::vector<std::vector<Complex>>& duals) {
  if (!(U.radius > 0.0)) throw Error("spatial_weights: radius must be positive");
  const double reach = dist(DiskPoint(), U.center) + U.radius;
  if (reach > t.spatial().R)
    throw Error("spatial_weights: region escapes the truncated ball");
  if (duals.size() != fs.E.rows())
    throw Error("spatial_weights: dual count does not match the lattice");

  const SpatialGrid& sg = t.spatial();
  std::vector<char> inside(sg.size());
  for (int n = 0; n < sg.size(); ++n)
    inside[n] = in_ball(sg.points[n], U) ? 1 : 0;

  QuadratureRule rule{RuleKind::Spatial, std::vector<Complex>(fs.E.rows())};
  for (std::size_t j = 0; j < duals.size(); ++j) {
    const SpatialFunction theta = t.inverse_on_grid(fs.E.band_embed(duals[j]));
    Complex s(0.0, 0.0);
    for (int n = 0; n < sg.size(); ++n)
      if (inside[n]) s += theta.values[n] * sg.weights[n];
    rule.weights[j] = s;
  }
  return rule;
}

QuadratureRule spectral_weights(const BandInterval& V, const FrameSystem& fs,
                                const std::vector<std::vector<Complex>>& duals) {
  if (V.lambda_lo > V.lambda_hi)
    throw Error("spectral_weights: empty-ordered interval");
  if (V.lambda_lo < 0.0 || V.lambda_hi > fs.omega)
    throw Error("spectral_weights: interval outside the band");
  if (duals.size() != fs.E.rows())
    throw Error("spectral_weights: dual count does not match the lattice");

  const SpectralGrid& g = *fs.E.grid();
  const std::vector<int>& band = fs.E.band_indices();
  const int nb = g.n_b;

  QuadratureRule rule{RuleKind::Spectral, std::vector<Complex>(fs.E.rows())};
  for (std::size_t j = 0; j < duals.size(); ++j) {
    Complex s(0.0, 0.0);
    // Ascending lambda, one partial sum per node: slab weights tile exactly.
    for (std::size_t bi = 0; bi < band.size(); ++bi) {
      const double l = g.lambda[band[bi]];
      if (l < V.lambda_lo || l >= V.lambda_hi) continue;
      Complex node(0.0, 0.0);
      for (int k = 0; k < nb; ++k) node += duals[j][bi * nb + k];
      s += node * g.node_weight(band[bi]);
    }
    rule.weights[j] = s;
  }
  return rule;
}

Complex apply_rule(const std::vector<Complex>& samples,
                   const QuadratureRule& rule) {
  if (samples.size() != rule.weights.size())
    throw Error("apply_rule: sample count does not match the rule");
  Complex s(0.0, 0.0);
  for (std::size_t j = 0; j < samples.size(); ++j)
    s += samples[j] * rule.weights[j];
  return s;
}

Complex integrate_ball(const SpatialFunction& f, const BallRegion& U) {
  const SpatialGrid& g = *f.grid;
  Complex s(0.0, 0.0);
  for (int n = 0; n < g.size(); ++n)
    if (in_ball(g.points[n], U)) s += f.values[n] * g.weights[n];
  return s;
}

}  // namespace hdft
