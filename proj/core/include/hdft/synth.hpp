#pragma once

#include <functional>
#include <random>

#include "hdft/grid.hpp"

namespace hdft {

using Rng = std::mt19937_64;

/// One Gaussian bump in lambda times a trigonometric angular profile.
/// Profiles whose centers sit several widths away from both spectral edges
/// round-trip through the transform at full accuracy; see synth.cpp for the
/// working (mu, s) region.
struct BumpSpec {
  double mu;      // center
  double s;       // width
  Complex amp = Complex(1.0, 0.0);
  // angular profile sum_m c_m e^{i m theta}; index 0 is the constant term
  std::vector<Complex> modes = {Complex(1.0, 0.0)};
};

SpectralFunction bump_spectrum(std::shared_ptr<const SpectralGrid> grid,
                               const std::vector<BumpSpec>& bumps);

/// The fixed five-member family used to calibrate the Plancherel constant.
std::vector<SpectralFunction> calibration_family(
    std::shared_ptr<const SpectralGrid> grid);

/// Random smooth band-concentrated spectra for the Plancherel suite:
/// 2-3 bumps with centers in [5.0, 6.4], widths in [1.35, 1.6], smooth
/// random angular modes |m| <= 6.
SpectralFunction random_smooth_spectrum(std::shared_ptr<const SpectralGrid> grid,
                                        Rng& rng);

/// Random spectrum with unconstrained per-node values below the band edge;
/// what frame reconstruction must handle.
SpectralFunction random_band_vector(std::shared_ptr<const SpectralGrid> grid,
                                    double omega, Rng& rng);

/// Random nonnegative radial profile with smooth angular content, for the
/// order-independent spectral-sum identities (Bernstein, Jackson, moments).
SpectralFunction random_profile_spectrum(std::shared_ptr<const SpectralGrid> grid,
                                         Rng& rng);

/// Radial heat-kernel profile e^{-t (lambda^2 + rho^2)}.
SpectralFunction heat_kernel_spectrum(std::shared_ptr<const SpectralGrid> grid,
                                      double t);

/// Radial profile with |f|^2-density prescribed per node: value_i^2 p q =
/// mass_i. mass must have grid->n_lambda entries.
SpectralFunction profile_from_masses(std::shared_ptr<const SpectralGrid> grid,
                                     const std::vector<double>& masses);

/// Discrete profile whose best-approximation tail is exact by construction:
/// the spectrum is binned between consecutive nodes with bin edges snapped
/// to the given measurement points, so sum_{lambda_i > omega} mass_i =
/// T(omega) exactly for every omega in snap. The unresolved far tail is
/// lumped onto the top node.
SpectralFunction prescribed_tail_profile(
    std::shared_ptr<const SpectralGrid> grid,
    const std::function<double(double)>& tail, double cut,
    const std::vector<double>& snap);

/// Power-law tail T(omega) = omega^{-2 alpha} / (2 alpha): E(f, omega) =
/// omega^{-alpha} / sqrt(2 alpha) exactly at the snap points.
SpectralFunction power_rate_profile(std::shared_ptr<const SpectralGrid> grid,
                                    double alpha,
                                    const std::vector<double>& snap);

/// Shifted tail T(omega) = (1+omega)^{-2 alpha} / (2 alpha).
SpectralFunction shifted_rate_profile(std::shared_ptr<const SpectralGrid> grid,
                                      double alpha,
                                      const std::vector<double>& snap);

}  // namespace hdft
