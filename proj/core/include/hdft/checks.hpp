#pragma once

#include <string>
#include <vector>

#include "hdft/config.hpp"

namespace hdft::checks {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

/// The acceptance criteria, one result per criterion, in order. fast trims
/// random-draw counts and the heaviest bands; the full suite runs the
/// reference sizes end to end.
std::vector<CheckResult> run_all(const RunConfig& cfg, bool fast);

/// Individual criteria (numbered as in the acceptance suite).
CheckResult plancherel_inversion(const RunConfig& cfg, bool fast);     // 1
CheckResult laplacian_symbol(const RunConfig& cfg, bool fast);         // 2
CheckResult bernstein(const RunConfig& cfg, bool fast);                // 3
CheckResult riesz_identities(const RunConfig& cfg, bool fast);         // 4
CheckResult bandwidth_characterization(const RunConfig& cfg, bool fast); // 5
CheckResult lattice_certificates(const RunConfig& cfg, bool fast);     // 6
CheckResult frame_reconstruction(const RunConfig& cfg, bool fast);     // 7
CheckResult quadrature_exactness(const RunConfig& cfg, bool fast);     // 8
CheckResult jackson_bound(const RunConfig& cfg, bool fast);            // 9
CheckResult k_functional_sandwich(const RunConfig& cfg, bool fast);    // 10
CheckResult phi_vs_best_approx(const RunConfig& cfg, bool fast);       // 11
CheckResult rate_recovery(const RunConfig& cfg, bool fast);            // 12
CheckResult theorem52_stability(const RunConfig& cfg, bool fast);      // 13

}  // namespace hdft::checks
