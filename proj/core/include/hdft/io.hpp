#pragma once

#include <string>

#include "hdft/frame.hpp"
#include "hdft/lattice.hpp"
#include "hdft/quadrature.hpp"

namespace hdft {

/// All emitters format doubles with "%.17g" and fixed row order, so repeated
/// runs produce byte-identical files.

void write_spatial_csv(const std::string& path, const SpatialFunction& f);
/// Reads values into a function on the given grid; the row count must match
/// (coordinates in the file are informational).
SpatialFunction read_spatial_csv(const std::string& path,
                                 std::shared_ptr<const SpatialGrid> grid);

void write_spectral_csv(const std::string& path, const SpectralFunction& F);
SpectralFunction read_spectral_csv(const std::string& path,
                                   std::shared_ptr<const SpectralGrid> grid);

void write_lattice_csv(const std::string& path, const Lattice& L);
std::vector<DiskPoint> read_lattice_csv(const std::string& path);

void write_certificate_json(const std::string& path, const Lattice& L);

void write_frame_report_json(const std::string& path, const FrameSystem& fs,
                             double c_used);

void write_weights_csv(const std::string& path, const QuadratureRule& rule);

void write_rate_csv(const std::string& path,
                    const std::vector<double>& omegas,
                    const std::vector<double>& E,
                    const std::vector<double>& Phi);

void write_samples_csv(const std::string& path,
                       const std::vector<Complex>& samples);
std::vector<Complex> read_samples_csv(const std::string& path);

/// "%.17g" formatting used by every emitter.
std::string format_double(double v);

}  // namespace hdft
