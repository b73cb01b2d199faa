#pragma once

#include <cstdint>
#include <map>
#include <string>

namespace hdft {

/// Model constants of the realized geometry: the spectral shift is pinned to
/// 1/2 by the curvature -1 normalization, the Plancherel constant is
/// calibrated (see Transform).
struct ModelConstants {
  double rho = 0.5;
  double c_P = 0.15915494309189535;  // calibrated; equals 1/(2 pi) here
};

/// Per-band angular resolution of the frame grids. On a ball of radius R
/// the lowest spectral column at angular mode m carries weight like
/// tanh(R/2)^{2m}, so over-resolving the circle drives the lower frame
/// bound into the noise; the counts below keep the conditioning moderate
/// while covering the angular content the sweeps use.
struct FrameGridConfig {
  double Lambda_max = 16.0;
  int n_lambda = 48;
  std::map<double, int> n_b_per_omega = {{1.0, 16}, {2.0, 16}, {4.0, 32},
                                         {8.0, 48}, {16.0, 64}};
  int n_b_for(double omega) const;
};

struct LatticeConfig {
  double R = 4.0;
  double c = 2.4;      // density constant, calibrated by `calibrate`
  double r = 0.0;      // explicit radius; used when positive, else from c
};

struct SolverConfig {
  double tol = 1e-10;
  int max_iter_factor = 10;
};

/// Quadrature region: a geodesic ball or a spectral band.
struct RegionConfig {
  std::string kind = "ball";  // "ball" | "band"
  double center_x = 0.0;
  double center_y = 0.0;
  double radius = 1.0;
  double lambda_lo = 0.0;
  double lambda_hi = 4.0;
};

struct RunConfig {
  // reference transform grids
  double Lambda_max = 16.0;
  int n_lambda = 128;
  int n_b = 128;
  double R = 5.0;
  int n_r = 160;
  int n_theta = 128;
  ModelConstants model;
  double tol = 1e-6;

  double omega = 4.0;
  std::vector<double> omega_sweep = {2.0, 4.0, 8.0};

  LatticeConfig lattice;
  FrameGridConfig frame;
  SolverConfig solver;
  RegionConfig region;
  std::uint64_t seed = 12345;

  std::string input_path;
  std::string output_dir = ".";
};

RunConfig load_config(const std::string& path);
void save_config(const std::string& path, const RunConfig& cfg);

/// Applies the JSON object in `text` on top of defaults; throws ConfigError
/// on malformed input.
RunConfig parse_config(const std::string& text);
std::string config_to_json(const RunConfig& cfg);

}  // namespace hdft
