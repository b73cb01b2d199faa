#include "hdft/checks.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

#include "hdft/approx.hpp"
#include "hdft/quadrature.hpp"
#include "hdft/synth.hpp"

namespace hdft::checks {

namespace {

std::string fmt(double v) {
  std::ostringstream ss;
  ss.precision(3);
  ss << std::scientific << v;
  return ss.str();
}

struct RefContext {
  std::shared_ptr<const SpatialGrid> sg;
  std::shared_ptr<const SpectralGrid> kg;
  std::unique_ptr<Transform> T;

  explicit RefContext(const RunConfig& cfg, bool fast) {
    const int div = fast ? 2 : 1;
    sg = std::make_shared<SpatialGrid>(
        build_spatial_grid(cfg.R, cfg.n_r / div, cfg.n_theta / div));
    kg = std::make_shared<SpectralGrid>(build_spectral_grid(
        cfg.Lambda_max, cfg.n_lambda / div, cfg.n_b / div, cfg.model.c_P));
    T = std::make_unique<Transform>(sg, kg);
  }
};

// Frame systems of the acceptance sweep, on band-matched spectral grids.
struct SweepFrames {
  std::vector<double> omegas;
  std::vector<double> radii;
  std::vector<std::shared_ptr<const SpectralGrid>> grids;
  std::vector<FrameSystem> frames;
  std::vector<Lattice> lattices;
};

SweepFrames build_sweep(const RunConfig& cfg, bool fast) {
  SweepFrames sw;
  for (double w : cfg.omega_sweep) {
    if (fast && w > 4.0) continue;
    sw.omegas.push_back(w);
  }
  for (double w : sw.omegas) {
    const double r = cfg.lattice.r > 0.0 ? cfg.lattice.r
                                         : nyquist_radius(w, cfg.lattice.c);
    sw.radii.push_back(r);
    auto grid = std::make_shared<SpectralGrid>(
        build_spectral_grid(cfg.frame.Lambda_max, cfg.frame.n_lambda,
                            cfg.frame.n_b_for(w), cfg.model.c_P));
    sw.grids.push_back(grid);
    sw.lattices.push_back(build_lattice(cfg.lattice.R, r, cfg.seed));
    sw.frames.push_back(build_frame_system(sw.lattices.back(), w, grid,
                                           cfg.solver.tol, 1e-8,
                                           cfg.solver.max_iter_factor));
  }
  return sw;
}

double rel_spectral_err(const SpectralFunction& got, const SpectralFunction& want) {
  double num = 0.0, den = 0.0;
  const SpectralGrid& g = *want.grid;
  for (int i = 0; i < g.n_lambda; ++i) {
    const double w = g.node_weight(i);
    for (int k = 0; k < g.n_b; ++k) {
      num += std::norm(got.at(i, k) - want.at(i, k)) * w;
      den += std::norm(want.at(i, k)) * w;
    }
  }
  return std::sqrt(num / den);
}

CheckResult impl_plancherel(const RunConfig& cfg, bool fast, RefContext& ctx) {
  CheckResult res{"1 plancherel/inversion", true, ""};
  const auto family = calibration_family(ctx.kg);
  const CalibrationResult cal = calibrate_plancherel(*ctx.T, family, 1e-4);

  double worst_family = 0.0;
  double worst_family_norm = 0.0;
  for (const auto& g : family) {
    const SpatialFunction f = ctx.T->inverse_on_grid(g);
    const SpectralFunction h = ctx.T->forward(f);
    worst_family = std::max(worst_family, rel_spectral_err(h, g));
    const double nf = l2_norm_sq(f), ng = plancherel_norm_sq(g);
    worst_family_norm = std::max(worst_family_norm, std::abs(nf / ng - 1.0));
  }

  Rng rng(cfg.seed);
  const int n_random = fast ? 5 : 20;
  double worst_rand = 0.0, worst_rand_norm = 0.0;
  for (int t = 0; t < n_random; ++t) {
    const SpectralFunction g = random_smooth_spectrum(ctx.kg, rng);
    const SpatialFunction f = ctx.T->inverse_on_grid(g);
    const SpectralFunction h = ctx.T->forward(f);
    worst_rand = std::max(worst_rand, rel_spectral_err(h, g));
    const double nf = l2_norm_sq(f), ng = plancherel_norm_sq(g);
    worst_rand_norm = std::max(worst_rand_norm, std::abs(nf / ng - 1.0));
  }

  const bool pass = cal.spread <= 1e-6 && worst_family <= 1e-6 &&
                    worst_family_norm <= 1e-6 && worst_rand <= 1e-5 &&
                    worst_rand_norm <= 1e-5;
  res.pass = pass;
  res.detail = "calib spread " + fmt(cal.spread) + ", family roundtrip " +
               fmt(worst_family) + ", random roundtrip " + fmt(worst_rand) +
               ", norm mismatch " + fmt(std::max(worst_family_norm, worst_rand_norm));
  return res;
}

CheckResult impl_laplacian(const RunConfig& cfg, bool fast, RefContext& ctx) {
  (void)cfg;
  CheckResult res{"2 laplacian symbol", true, ""};
  // Smooth band-concentrated function; finite differences of the conformal
  // Laplacian against the multiplier at scattered interior points.
  BumpSpec b;
  b.mu = 4.0;
  b.s = 1.3;
  b.modes = {Complex(1.0, 0.0), Complex(0.3, 0.1), Complex(0.0, 0.2)};
  const SpectralFunction F = bump_spectrum(ctx.kg, {b});
  const SpectralFunction LF = apply_multiplier_real(
      F, [](double l) { return -laplace_mu(l); });

  const int n_pts = fast ? 12 : 32;
  std::vector<DiskPoint> centers;
  Rng rng(321);
  std::uniform_real_distribution<double> rad(0.1, 2.4), ang(0.0, 2 * M_PI);
  for (int n = 0; n < n_pts; ++n)
    centers.push_back(polar_to_point(rad(rng), ang(rng)));

  const double h = 3e-4;
  std::vector<DiskPoint> stencil;
  for (const DiskPoint& z : centers) {
    stencil.push_back(z);
    stencil.emplace_back(z.x() + h, z.y());
    stencil.emplace_back(z.x() - h, z.y());
    stencil.emplace_back(z.x(), z.y() + h);
    stencil.emplace_back(z.x(), z.y() - h);
  }
  const std::vector<Complex> fv = ctx.T->inverse_at(F, stencil);
  const std::vector<Complex> lv = ctx.T->inverse_at(LF, centers);
  double num = 0.0, den = 0.0;
  for (int n = 0; n < n_pts; ++n) {
    const Complex* s = &fv[5 * n];
    const double x = centers[n].x(), y = centers[n].y();
    const double conf = 1.0 - (x * x + y * y);
    const Complex fd =
        (s[1] + s[2] + s[3] + s[4] - 4.0 * s[0]) / (h * h) * (conf * conf / 4.0);
    num += std::norm(fd - lv[n]);
    den += std::norm(lv[n]);
  }
  const double resid = std::sqrt(num / den);

  // Single-node spike: approximate eigenfunction of the discrete stencil.
  const SpectralGrid& kg = *ctx.kg;
  int i0 = 0;
  while (kg.lambda[i0] < 3.0) ++i0;
  SpectralFunction spike(ctx.kg);
  for (int k = 0; k < kg.n_b; ++k)
    spike.at(i0, k) = Complex(std::cos(2.0 * kg.thetas_b[k]),
                              std::sin(2.0 * kg.thetas_b[k]));
  const double mu0 = laplace_mu(kg.lambda[i0]);
  const std::vector<Complex> sf = ctx.T->inverse_at(spike, stencil);
  double enum_ = 0.0, eden = 0.0;
  for (int n = 0; n < n_pts; ++n) {
    const Complex* s = &sf[5 * n];
    const double x = centers[n].x(), y = centers[n].y();
    const double conf = 1.0 - (x * x + y * y);
    const Complex fd =
        (s[1] + s[2] + s[3] + s[4] - 4.0 * s[0]) / (h * h) * (conf * conf / 4.0);
    enum_ += std::norm(fd + mu0 * s[0]);
    eden += std::norm(mu0 * s[0]);
  }
  const double eig_resid = std::sqrt(enum_ / eden);

  res.pass = resid <= 1e-3 && eig_resid <= 1e-3;
  res.detail = "fd residual " + fmt(resid) + ", eigen residual " + fmt(eig_resid);
  return res;
}

CheckResult impl_bernstein(const RunConfig& cfg, bool fast, RefContext& ctx) {
  CheckResult res{"3 bernstein", true, ""};
  Rng rng(cfg.seed + 3);
  const double esses[4] = {0.5, 1.0, 2.0, 5.0};
  double worst = 0.0;
  const int n_fns = fast ? 20 : 100;
  for (double w : {2.0, 4.0, 8.0}) {
    for (int t = 0; t < n_fns; ++t) {
      const SpectralFunction F = random_band_vector(ctx.kg, w, rng);
      for (double s : esses)
        worst = std::max(worst, bernstein_ratio(F, s, w));
    }
  }
  res.pass = worst <= 1.0 + 1e-12;
  res.detail = "max ratio " + fmt(worst);
  return res;
}

CheckResult impl_riesz(const RunConfig& cfg, bool fast) {
  (void)cfg;
  (void)fast;
  CheckResult res{"4 riesz operator", true, ""};
  const long K = 100000;
  double worst_id = 0.0;
  for (double sigma : {1.0, 9.25, 64.25}) {
    const RieszWeightSum ws = riesz_weight_sum(sigma, K);
    worst_id = std::max(worst_id,
                        std::abs(ws.partial + ws.tail - sigma) / sigma);
  }
  const double sigma = 9.25;
  const double mu = sigma / 2.0;
  const Complex S = riesz_scalar(mu, sigma, K);
  const double err_minus_imu = std::abs(S - Complex(0.0, -mu));
  const double bound = riesz_tail_bound(sigma, K) + 1e-9;
  // The literal power identity would need S = -mu; the series sums to -i*mu.
  const double err_paper_form = std::abs(S - Complex(-mu, 0.0));
  res.pass = worst_id <= 1e-10 && err_minus_imu <= bound &&
             err_paper_form > 0.5 * mu;
  res.detail = "weight identity " + fmt(worst_id) + ", |S-(-i mu)| " +
               fmt(err_minus_imu) + " vs bound " + fmt(bound) +
               ", |S-(-mu)| " + fmt(err_paper_form) +
               " (i-factor discrepancy reported, not suppressed)";
  return res;
}

CheckResult impl_bandwidth(const RunConfig& cfg, bool fast, RefContext& ctx) {
  CheckResult res{"5 bandwidth characterization", true, ""};
  const SpectralGrid& kg = *ctx.kg;
  // Single node spike: ratios all equal mu(lambda_i0), estimate exact.
  int i0 = 0;
  while (kg.lambda[i0] < 3.0) ++i0;
  SpectralFunction spike(ctx.kg);
  spike.at(i0, 0) = Complex(1.0, 0.0);
  const BandwidthEstimate se = bandwidth_estimate(spike, 12);
  double spike_err = std::abs(se.omega_hat - kg.lambda[i0]);
  for (double r : se.ratios)
    spike_err = std::max(spike_err, std::abs(r - laplace_mu(kg.lambda[i0])));

  // Projected heat kernel: estimate converges to the top occupied node.
  const double w = 4.0;
  const SpectralFunction heat = pw_project(heat_kernel_spectrum(ctx.kg, 0.25), w);
  const BandwidthEstimate he = bandwidth_estimate(heat, 40);
  double spacing = 0.0;
  int top = 0;
  for (int i = 0; i + 1 < kg.n_lambda; ++i)
    if (kg.lambda[i + 1] <= w) {
      spacing = std::max(spacing, kg.lambda[i + 1] - kg.lambda[i]);
      top = i + 1;
    }
  (void)top;
  const double heat_err = std::abs(he.omega_hat - w);

  Rng rng(cfg.seed + 5);
  const int n_fns = fast ? 10 : 50;
  double worst_mono = 0.0;
  for (int t = 0; t < n_fns; ++t) {
    const SpectralFunction F = random_profile_spectrum(ctx.kg, rng);
    const BandwidthEstimate e = bandwidth_estimate(F, 12);
    for (std::size_t k = 1; k < e.ratios.size(); ++k)
      worst_mono = std::max(worst_mono, e.ratios[k - 1] - e.ratios[k]);
  }
  res.pass = spike_err <= 1e-9 && heat_err <= spacing &&
             worst_mono <= 1e-10 * laplace_mu(kg.Lambda_max);
  res.detail = "spike err " + fmt(spike_err) + ", heat |omega_hat-omega| " +
               fmt(heat_err) + " vs spacing " + fmt(spacing) +
               ", worst ratio decrease " + fmt(worst_mono);
  return res;
}

CheckResult impl_lattice(const RunConfig& cfg, bool fast, SweepFrames& sw) {
  CheckResult res{"6 lattice certificates", true, ""};
  (void)fast;
  std::ostringstream detail;
  bool pass = true;
  for (std::size_t m = 0; m < sw.omegas.size(); ++m) {
    const Lattice& L = sw.lattices[m];
    const double r = sw.radii[m];
    const bool sep = L.certificate.min_pairwise >= 0.5 * r - 1e-12;
    const bool cover = L.certificate.covering_radius <= 0.5 * r + 1e-12;
    // Disjoint r/4-balls inside the enlarged ball: the packing count bound.
    const double pack_lhs = L.points.size() * ball_area(0.25 * r);
    const double pack_rhs = ball_area(cfg.lattice.R + 0.25 * r);
    const bool pack = pack_lhs <= pack_rhs;
    // Determinism: rebuilding gives the identical point list.
    const Lattice L2 = build_lattice(cfg.lattice.R, r, cfg.seed);
    bool same = L2.points.size() == L.points.size();
    if (same)
      for (std::size_t j = 0; j < L.points.size(); ++j)
        same = same && L.points[j].z() == L2.points[j].z();
    pass = pass && sep && cover && pack && same;
    detail << "omega=" << sw.omegas[m] << ": n=" << L.points.size()
           << " sep/r=" << L.certificate.min_pairwise / r
           << " cover/r=" << L.certificate.covering_radius / r
           << " mult=" << L.certificate.multiplicity
           << (same ? "" : " NONDETERMINISTIC") << "; ";
  }
  res.pass = pass;
  res.detail = detail.str();
  return res;
}

CheckResult impl_frames(const RunConfig& cfg, bool fast, SweepFrames& sw) {
  CheckResult res{"7 frame + reconstruction", true, ""};
  Rng rng(cfg.seed + 7);
  std::ostringstream detail;
  bool pass = true;
  const int n_fns = fast ? 5 : 20;
  for (std::size_t m = 0; m < sw.omegas.size(); ++m) {
    const FrameSystem& fs = sw.frames[m];
    const double cond = fs.bounds.cond();
    bool cond_ok = cond <= 100.0;
    double worst_rec = 0.0;
    for (int t = 0; t < n_fns; ++t) {
      const SpectralFunction F = random_band_vector(sw.grids[m], sw.omegas[m], rng);
      const std::vector<Complex> samples = fs.sample(F);
      const SpectralFunction rec = dual_apply(samples, fs);
      worst_rec = std::max(worst_rec, rel_spectral_err(rec, F));
    }
    const bool rec_ok = worst_rec <= 1e-8 * cond;

    // Deliberate undersampling: doubled r must be flagged.
    bool under_ok = false;
    std::string under_note;
    try {
      const Lattice Lu = build_lattice(cfg.lattice.R, 2.0 * sw.radii[m], cfg.seed);
      const AnalysisOperator Eu = assemble_analysis(Lu, sw.omegas[m], sw.grids[m]);
      const FrameBounds fb = frame_bounds(Eu);
      under_ok = fb.cond() > 1e4;
      under_note = "cond " + fmt(fb.cond());
    } catch (const RankDeficientError&) {
      under_ok = true;
      under_note = "rank deficient";
    }
    pass = pass && cond_ok && rec_ok && under_ok;
    detail << "omega=" << sw.omegas[m] << ": B/A=" << fmt(cond) << " rec="
           << fmt(worst_rec) << " undersampled(" << under_note << "); ";
  }
  res.pass = pass;
  res.detail = detail.str();
  return res;
}

CheckResult impl_quadrature(const RunConfig& cfg, bool fast, RefContext& ctx) {
  CheckResult res{"8 quadrature exactness", true, ""};
  // Small certified frame: quadrature weights need one dual per point.
  const double w = 4.0;
  const double latt_R = 3.0;
  auto grid = std::make_shared<SpectralGrid>(build_spectral_grid(
      8.0, 32, 16, cfg.model.c_P));
  const double r = cfg.lattice.r > 0.0 ? cfg.lattice.r
                                       : nyquist_radius(w, cfg.lattice.c);
  const Lattice L = build_lattice(latt_R, r, cfg.seed);
  const FrameSystem fs = build_frame_system(L, w, grid, cfg.solver.tol);
  const auto duals = dual_frame_functions(fs);
  const Transform T(ctx.sg, grid);

  Rng rng(cfg.seed + 8);
  const int n_fns = fast ? 3 : 10;
  const BallRegion U{DiskPoint(), latt_R};
  const QuadratureRule spat = spatial_weights(U, fs, T, duals);
  const BandInterval Vfull{0.0, w};
  const QuadratureRule spec = spectral_weights(Vfull, fs, duals);

  double worst_spat = 0.0, worst_spec = 0.0;
  for (int t = 0; t < n_fns; ++t) {
    const SpectralFunction F = random_band_vector(grid, w, rng);
    const std::vector<Complex> samples = fs.sample(F);
    // spatial: integral of f over U from the grid
    const SpatialFunction f = T.inverse_on_grid(F);
    const Complex direct = integrate_ball(f, U);
    const Complex via_rule = apply_rule(samples, spat);
    worst_spat = std::max(worst_spat, std::abs(direct - via_rule) / std::abs(direct));
    // spectral: integral of F over the band against the Plancherel measure
    Complex direct_spec(0.0, 0.0);
    const SpectralGrid& g = *grid;
    for (int i = 0; i < g.n_lambda; ++i) {
      if (g.lambda[i] >= w) continue;
      Complex row(0.0, 0.0);
      for (int k = 0; k < g.n_b; ++k) row += F.at(i, k);
      direct_spec += row * g.node_weight(i);
    }
    const Complex via_spec = apply_rule(samples, spec);
    worst_spec = std::max(worst_spec,
                          std::abs(direct_spec - via_spec) / std::abs(direct_spec));
  }

  // Region additivity is exact by the per-node accumulation.
  const QuadratureRule a = spectral_weights({0.0, 1.7}, fs, duals);
  const QuadratureRule b = spectral_weights({1.7, w}, fs, duals);
  double add_err = 0.0;
  for (std::size_t j = 0; j < spec.weights.size(); ++j)
    add_err = std::max(add_err,
                       std::abs(a.weights[j] + b.weights[j] - spec.weights[j]));

  res.pass = worst_spat <= 1e-6 && worst_spec <= 1e-8 && add_err == 0.0;
  res.detail = "spatial " + fmt(worst_spat) + ", spectral " + fmt(worst_spec) +
               ", additivity " + fmt(add_err) + ", n=" +
               std::to_string(L.points.size());
  return res;
}

CheckResult impl_jackson(const RunConfig& cfg, bool fast, RefContext& ctx) {
  CheckResult res{"9 jackson bound", true, ""};
  Rng rng(cfg.seed + 9);
  double worst = 0.0;
  const int n_fns = fast ? 20 : 100;
  for (int t = 0; t < n_fns; ++t) {
    const SpectralFunction F = random_profile_spectrum(ctx.kg, rng);
    for (int r : {1, 2, 4})
      for (double tt : {1.0, 2.0, 4.0})
        worst = std::max(worst, jackson_check(F, tt, r));
  }
  res.pass = worst <= 1.0 + 1e-12;
  res.detail = "max slack ratio " + fmt(worst);
  return res;
}

CheckResult impl_k_functional(const RunConfig& cfg, bool fast, RefContext& ctx) {
  CheckResult res{"10 k-functional sandwich", true, ""};
  Rng rng(cfg.seed + 10);
  const double root2 = std::sqrt(2.0);
  double worst = 0.0;
  const int n_fns = fast ? 40 : 200;
  for (int t = 0; t < n_fns; ++t) {
    const SpectralFunction F = random_profile_spectrum(ctx.kg, rng);
    for (int j = 0; j < 9; ++j) {
      const double tt = std::pow(10.0, -3.0 + 0.75 * j);
      for (int r : {1, 2}) {
        const K2Result k = k2_functional(F, tt, r);
        worst = std::max(worst, k.k2 - k.k_upper);           // k2 <= k_upper
        worst = std::max(worst, k.k_upper - root2 * k.k2);   // k_upper <= sqrt2 k2
      }
    }
  }
  res.pass = worst <= 1e-12;
  res.detail = "max sandwich violation " + fmt(worst);
  return res;
}

CheckResult impl_phi_vs_e(const RunConfig& cfg, bool fast, SweepFrames& sw) {
  CheckResult res{"11 phi vs best approximation", true, ""};
  Rng rng(cfg.seed + 11);
  double worst = 0.0;
  const int n_fns = fast ? 3 : 8;
  for (std::size_t m = 0; m < sw.omegas.size(); ++m) {
    const FrameSystem& fs = sw.frames[m];
    const double limit_scale = 10.0 * cfg.solver.tol * fs.bounds.cond();
    for (int t = 0; t < n_fns; ++t) {
      SpectralFunction F = random_smooth_spectrum(sw.grids[m], rng);
      const double nf = plancherel_norm(F);
      const double phi = phi_error(F, sw.omegas[m], fs);
      const double e = best_approx(F, sw.omegas[m]);
      worst = std::max(worst, std::abs(phi - e) / (limit_scale * nf));
    }
    // Band-limited input: phi at solver tolerance.
    const SpectralFunction Fb = random_band_vector(sw.grids[m], sw.omegas[m], rng);
    const double phi_b = phi_error(Fb, sw.omegas[m], fs);
    worst = std::max(worst, phi_b / (limit_scale * plancherel_norm(Fb)));
  }
  res.pass = worst <= 1.0;
  res.detail = "max |phi - E| / (10 tol (B/A) ||f||) = " + fmt(worst);
  return res;
}

CheckResult impl_rates(const RunConfig& cfg, bool fast) {
  CheckResult res{"12 rate recovery", true, ""};
  const std::vector<double> omegas = {4.0, 8.0, 16.0, 32.0};
  const double latt_R = 2.0;
  const int n_b = 12;
  auto grid = std::make_shared<SpectralGrid>(
      build_spectral_grid(36.0, 48, n_b, cfg.model.c_P));

  std::vector<FrameSystem> frames;
  for (double w : omegas) {
    const double r = nyquist_radius(w, cfg.lattice.c);
    frames.push_back(build_frame_system(build_lattice(latt_R, r, cfg.seed), w,
                                        grid, cfg.solver.tol));
  }

  std::ostringstream detail;
  bool pass = true;
  const std::vector<double> alphas = fast ? std::vector<double>{1.25}
                                          : std::vector<double>{0.75, 1.25, 2.0};
  for (double alpha : alphas) {
    const SpectralFunction F = power_rate_profile(grid, alpha, omegas);
    std::vector<double> phi(omegas.size());
    for (std::size_t m = 0; m < omegas.size(); ++m)
      phi[m] = phi_error(F, omegas[m], frames[m]);
    const RateFit fit = rate_fit(omegas, phi);
    const double rel = std::abs(fit.alpha_hat - alpha) / alpha;
    pass = pass && rel <= 0.05;
    detail << "alpha=" << alpha << " alpha_hat=" << fit.alpha_hat << " ("
           << fmt(rel) << "); ";

    // The shifted profile has exact tails (1+omega)^{-alpha}/sqrt(2 alpha);
    // its log-log slope over this window is provably 0.9085 alpha, which the
    // measured fit must reproduce (reported against its own oracle).
    const SpectralFunction Fs = shifted_rate_profile(grid, alpha, omegas);
    std::vector<double> phis(omegas.size()), oracle(omegas.size());
    for (std::size_t m = 0; m < omegas.size(); ++m) {
      phis[m] = phi_error(Fs, omegas[m], frames[m]);
      oracle[m] = std::pow(1.0 + omegas[m], -alpha) / std::sqrt(2.0 * alpha);
    }
    const RateFit fs_fit = rate_fit(omegas, phis);
    const RateFit fo = rate_fit(omegas, oracle);
    const double rel_s = std::abs(fs_fit.alpha_hat - fo.alpha_hat) /
                         std::max(fo.alpha_hat, 1e-30);
    pass = pass && rel_s <= 0.02;
    detail << "shifted alpha_hat=" << fs_fit.alpha_hat << " oracle="
           << fo.alpha_hat << "; ";
  }
  res.pass = pass;
  res.detail = detail.str();
  return res;
}

CheckResult impl_theorem52(const RunConfig& cfg, bool fast) {
  CheckResult res{"13 theorem 5.2 functional", true, ""};
  const double latt_R = 2.5;
  auto grid = std::make_shared<SpectralGrid>(
      build_spectral_grid(16.0, 48, 12, cfg.model.c_P));
  const std::vector<double> base_omegas = {1.0, 2.0, 4.0, 8.0};
  std::vector<double> ext_omegas = base_omegas;
  ext_omegas.push_back(16.0);

  std::map<double, FrameSystem> frames;
  for (double w : ext_omegas) {
    const double r = nyquist_radius(w, cfg.lattice.c);
    frames.emplace(w, build_frame_system(build_lattice(latt_R, r, cfg.seed), w,
                                         grid, cfg.solver.tol));
  }
  const SpectralFunction F = heat_kernel_spectrum(grid, 1.0);

  std::vector<std::pair<double, double>> aqs = {{1.0, 2.0}, {1.5, 2.0},
                                                 {1.0, std::numeric_limits<double>::infinity()}};
  if (fast) aqs.resize(1);

  std::ostringstream detail;
  bool pass = true;
  for (auto [alpha, q] : aqs) {
    const BesovParams params(alpha, q, 2);
    auto frames_for = [&](const std::vector<double>& ws) {
      std::vector<const FrameSystem*> out;
      for (double w : ws) out.push_back(&frames.at(w));
      return out;
    };
    const Theorem52Result base =
        theorem52_functional(F, params, base_omegas, frames_for(base_omegas));
    const Theorem52Result ext =
        theorem52_functional(F, params, ext_omegas, frames_for(ext_omegas));
    // s-grid doubling moves only the Besov side.
    const double rhs2 = besov_norm_custom(F, params, 1e-3, 10.0, 128);
    const double c_base = base.C_hat;
    const double c_ext = ext.C_hat;
    const double c_sgrid = base.lhs / rhs2;
    const bool finite = std::isfinite(c_base) && c_base > 0.0;
    const double dev_ext = std::abs(c_ext / c_base - 1.0);
    const double dev_s = std::abs(c_sgrid / c_base - 1.0);
    pass = pass && finite && dev_ext <= 0.10 && dev_s <= 0.10;
    detail << "(a=" << alpha << ",q=" << (std::isinf(q) ? std::string("inf")
                                                        : std::to_string(int(q)))
           << "): C=" << fmt(c_base) << " ext " << fmt(dev_ext) << " sgrid "
           << fmt(dev_s) << "; ";
  }
  res.pass = pass;
  res.detail = detail.str();
  return res;
}

}  // namespace

CheckResult plancherel_inversion(const RunConfig& cfg, bool fast) {
  RefContext ctx(cfg, fast);
  return impl_plancherel(cfg, fast, ctx);
}
CheckResult laplacian_symbol(const RunConfig& cfg, bool fast) {
  RefContext ctx(cfg, fast);
  return impl_laplacian(cfg, fast, ctx);
}
CheckResult bernstein(const RunConfig& cfg, bool fast) {
  RefContext ctx(cfg, fast);
  return impl_bernstein(cfg, fast, ctx);
}
CheckResult riesz_identities(const RunConfig& cfg, bool fast) {
  return impl_riesz(cfg, fast);
}
CheckResult bandwidth_characterization(const RunConfig& cfg, bool fast) {
  RefContext ctx(cfg, fast);
  return impl_bandwidth(cfg, fast, ctx);
}
CheckResult lattice_certificates(const RunConfig& cfg, bool fast) {
  SweepFrames sw = build_sweep(cfg, fast);
  return impl_lattice(cfg, fast, sw);
}
CheckResult frame_reconstruction(const RunConfig& cfg, bool fast) {
  SweepFrames sw = build_sweep(cfg, fast);
  return impl_frames(cfg, fast, sw);
}
CheckResult quadrature_exactness(const RunConfig& cfg, bool fast) {
  RefContext ctx(cfg, fast);
  return impl_quadrature(cfg, fast, ctx);
}
CheckResult jackson_bound(const RunConfig& cfg, bool fast) {
  RefContext ctx(cfg, fast);
  return impl_jackson(cfg, fast, ctx);
}
CheckResult k_functional_sandwich(const RunConfig& cfg, bool fast) {
  RefContext ctx(cfg, fast);
  return impl_k_functional(cfg, fast, ctx);
}
CheckResult phi_vs_best_approx(const RunConfig& cfg, bool fast) {
  SweepFrames sw = build_sweep(cfg, fast);
  return impl_phi_vs_e(cfg, fast, sw);
}
CheckResult rate_recovery(const RunConfig& cfg, bool fast) {
  return impl_rates(cfg, fast);
}
CheckResult theorem52_stability(const RunConfig& cfg, bool fast) {
  return impl_theorem52(cfg, fast);
}

std::vector<CheckResult> run_all(const RunConfig& cfg, bool fast) {
  std::vector<CheckResult> out;
  RefContext ctx(cfg, fast);
  out.push_back(impl_plancherel(cfg, fast, ctx));
  out.push_back(impl_laplacian(cfg, fast, ctx));
  out.push_back(impl_bernstein(cfg, fast, ctx));
  out.push_back(impl_riesz(cfg, fast));
  out.push_back(impl_bandwidth(cfg, fast, ctx));
  SweepFrames sw = build_sweep(cfg, fast);
  out.push_back(impl_lattice(cfg, fast, sw));
  out.push_back(impl_frames(cfg, fast, sw));
  out.push_back(impl_quadrature(cfg, fast, ctx));
  out.push_back(impl_jackson(cfg, fast, ctx));
  out.push_back(impl_k_functional(cfg, fast, ctx));
  out.push_back(impl_phi_vs_e(cfg, fast, sw));
  out.push_back(impl_rates(cfg, fast));
  out.push_back(impl_theorem52(cfg, fast));
  return out;
}

}  // namespace hdft::checks
