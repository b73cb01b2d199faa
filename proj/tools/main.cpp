// Batch front end: config + CSV in, CSV/JSON reports out. Exit codes:
// 0 success, 1 failed invariant or computation, 2 I/O or config errors.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "hdft/approx.hpp"
#include "hdft/checks.hpp"
#include "hdft/io.hpp"
#include "hdft/quadrature.hpp"
#include "hdft/synth.hpp"

namespace fs = std::filesystem;
using namespace hdft;

namespace {

struct Cli {
  std::string config_path;
  std::string out_dir;
  std::string input;
  double omega = 0.0;
  long long seed = -1;
  bool dump_duals = false;
  std::string suite = "all";
  double alpha = 1.25;
  double q = 2.0;
  int r = 2;
};

RunConfig effective_config(const Cli& cli) {
  RunConfig cfg = cli.config_path.empty() ? RunConfig{} : load_config(cli.config_path);
  if (!cli.out_dir.empty()) cfg.output_dir = cli.out_dir;
  if (!cli.input.empty()) cfg.input_path = cli.input;
  if (cli.omega > 0.0) cfg.omega = cli.omega;
  if (cli.seed >= 0) cfg.seed = static_cast<std::uint64_t>(cli.seed);
  fs::create_directories(cfg.output_dir);
  return cfg;
}

std::string out_path(const RunConfig& cfg, const std::string& name) {
  return (fs::path(cfg.output_dir) / name).string();
}

std::shared_ptr<const SpatialGrid> make_spatial(const RunConfig& cfg) {
  return std::make_shared<SpatialGrid>(
      build_spatial_grid(cfg.R, cfg.n_r, cfg.n_theta));
}

std::shared_ptr<const SpectralGrid> make_spectral(const RunConfig& cfg) {
  return std::make_shared<SpectralGrid>(build_spectral_grid(
      cfg.Lambda_max, cfg.n_lambda, cfg.n_b, cfg.model.c_P));
}

std::shared_ptr<const SpectralGrid> make_frame_grid(const RunConfig& cfg,
                                                    double omega) {
  return std::make_shared<SpectralGrid>(
      build_spectral_grid(cfg.frame.Lambda_max, cfg.frame.n_lambda,
                          cfg.frame.n_b_for(omega), cfg.model.c_P));
}

double lattice_radius(const RunConfig& cfg, double omega) {
  return cfg.lattice.r > 0.0 ? cfg.lattice.r : nyquist_radius(omega, cfg.lattice.c);
}

int cmd_transform(const RunConfig& cfg) {
  auto sg = make_spatial(cfg);
  auto kg = make_spectral(cfg);
  Transform T(sg, kg);
  const SpatialFunction f = read_spatial_csv(cfg.input_path, sg);
  const SpectralFunction F = T.forward(f);
  write_spectral_csv(out_path(cfg, "spectral.csv"), F);
  std::cout << "wrote " << out_path(cfg, "spectral.csv") << "\n";
  return 0;
}

int cmd_project(const RunConfig& cfg) {
  auto kg = make_spectral(cfg);
  const SpectralFunction F = read_spectral_csv(cfg.input_path, kg);
  const SpectralFunction P = pw_project(F, cfg.omega);
  write_spectral_csv(out_path(cfg, "projected.csv"), P);
  std::cout << "wrote " << out_path(cfg, "projected.csv") << "\n";
  return 0;
}

int cmd_lattice(const RunConfig& cfg) {
  const double r = lattice_radius(cfg, cfg.omega);
  const Lattice L = build_lattice(cfg.lattice.R, r, cfg.seed);
  write_lattice_csv(out_path(cfg, "lattice.csv"), L);
  write_certificate_json(out_path(cfg, "certificate.json"), L);
  std::cout << "lattice: " << L.points.size() << " points, r=" << r
            << ", separation " << L.certificate.min_pairwise << ", covering "
            << L.certificate.covering_radius << ", multiplicity "
            << L.certificate.multiplicity << "\n";
  return 0;
}

int cmd_frame(const RunConfig& cfg, bool dump_duals) {
  const double r = lattice_radius(cfg, cfg.omega);
  const Lattice L = build_lattice(cfg.lattice.R, r, cfg.seed);
  auto grid = make_frame_grid(cfg, cfg.omega);
  const FrameSystem fsys = build_frame_system(L, cfg.omega, grid,
                                              cfg.solver.tol, 1e-8,
                                              cfg.solver.max_iter_factor);
  write_frame_report_json(out_path(cfg, "frame_report.json"), fsys,
                          cfg.lattice.c);
  write_lattice_csv(out_path(cfg, "lattice.csv"), L);
  std::cout << "frame omega=" << cfg.omega << ": n=" << L.points.size()
            << " A=" << fsys.bounds.A << " B=" << fsys.bounds.B
            << " cond=" << fsys.bounds.cond() << "\n";
  if (dump_duals) {
    const auto duals = dual_frame_functions(fsys);
    const fs::path dir = fs::path(cfg.output_dir) / "duals";
    fs::create_directories(dir);
    for (std::size_t j = 0; j < duals.size(); ++j) {
      char name[32];
      std::snprintf(name, sizeof(name), "dual_%05zu.csv", j);
      write_spectral_csv((dir / name).string(), fsys.E.band_embed(duals[j]));
    }
    std::cout << "wrote " << duals.size() << " dual-frame members under "
              << dir.string() << "\n";
  }
  return 0;
}

int cmd_reconstruct(const RunConfig& cfg, const std::string& lattice_csv) {
  auto grid = make_frame_grid(cfg, cfg.omega);
  std::vector<DiskPoint> pts = read_lattice_csv(lattice_csv);
  Lattice L;
  L.points = std::move(pts);
  L.r = lattice_radius(cfg, cfg.omega);
  L.R = cfg.lattice.R;
  L.certificate = verify_lattice(L);
  const FrameSystem fsys = build_frame_system(L, cfg.omega, grid,
                                              cfg.solver.tol, 1e-8,
                                              cfg.solver.max_iter_factor);
  const std::vector<Complex> samples = read_samples_csv(cfg.input_path);
  const SpectralFunction rec = dual_apply(samples, fsys);
  write_spectral_csv(out_path(cfg, "reconstruction.csv"), rec);
  std::cout << "wrote " << out_path(cfg, "reconstruction.csv") << " (cond "
            << fsys.bounds.cond() << ")\n";
  return 0;
}

int cmd_quadrature(const RunConfig& cfg) {
  auto grid = make_frame_grid(cfg, cfg.omega);
  const double r = lattice_radius(cfg, cfg.omega);
  const Lattice L = build_lattice(cfg.lattice.R, r, cfg.seed);
  const FrameSystem fsys = build_frame_system(L, cfg.omega, grid,
                                              cfg.solver.tol, 1e-8,
                                              cfg.solver.max_iter_factor);
  const auto duals = dual_frame_functions(fsys);
  QuadratureRule rule{RuleKind::Spatial, {}};
  if (cfg.region.kind == "ball") {
    auto sg = make_spatial(cfg);
    Transform T(sg, grid);
    const BallRegion U{DiskPoint(cfg.region.center_x, cfg.region.center_y),
                       cfg.region.radius};
    rule = spatial_weights(U, fsys, T, duals);
  } else {
    rule = spectral_weights({cfg.region.lambda_lo, cfg.region.lambda_hi}, fsys,
                            duals);
  }
  write_weights_csv(out_path(cfg, "weights.csv"), rule);
  write_lattice_csv(out_path(cfg, "lattice.csv"), L);
  std::cout << "wrote " << out_path(cfg, "weights.csv") << " ("
            << rule.weights.size() << " weights)\n";
  return 0;
}

int cmd_rates(const RunConfig& cfg, double alpha) {
  const std::vector<double> omegas = {4.0, 8.0, 16.0, 32.0};
  auto grid = std::make_shared<SpectralGrid>(
      build_spectral_grid(36.0, 48, 12, cfg.model.c_P));
  const SpectralFunction F = cfg.input_path.empty()
                                 ? power_rate_profile(grid, alpha, omegas)
                                 : read_spectral_csv(cfg.input_path, grid);
  std::vector<double> E(omegas.size()), Phi(omegas.size());
  for (std::size_t m = 0; m < omegas.size(); ++m) {
    const double r = nyquist_radius(omegas[m], cfg.lattice.c);
    const FrameSystem fsys = build_frame_system(
        build_lattice(2.0, r, cfg.seed), omegas[m], grid, cfg.solver.tol);
    E[m] = best_approx(F, omegas[m]);
    Phi[m] = phi_error(F, omegas[m], fsys);
  }
  write_rate_csv(out_path(cfg, "rates.csv"), omegas, E, Phi);
  const RateFit fit = rate_fit(omegas, Phi);
  nlohmann::ordered_json j;
  j["alpha_hat"] = fit.alpha_hat;
  j["residual"] = fit.residual;
  std::ofstream out(out_path(cfg, "rate_fit.json"));
  out << j.dump(2) << "\n";
  std::cout << "alpha_hat = " << fit.alpha_hat << " (residual " << fit.residual
            << ")\n";
  return 0;
}

int cmd_theorem52(const RunConfig& cfg, double alpha, double q, int r) {
  auto grid = std::make_shared<SpectralGrid>(
      build_spectral_grid(16.0, 48, 12, cfg.model.c_P));
  const std::vector<double> omegas = {1.0, 2.0, 4.0, 8.0};
  std::vector<FrameSystem> frames;
  std::vector<const FrameSystem*> ptrs;
  for (double w : omegas) {
    const double lat_r = nyquist_radius(w, cfg.lattice.c);
    frames.push_back(build_frame_system(build_lattice(2.5, lat_r, cfg.seed), w,
                                        grid, cfg.solver.tol));
  }
  for (const auto& fr : frames) ptrs.push_back(&fr);
  const SpectralFunction F = cfg.input_path.empty()
                                 ? heat_kernel_spectrum(grid, 1.0)
                                 : read_spectral_csv(cfg.input_path, grid);
  const BesovParams params(alpha, q, r);
  const Theorem52Result res = theorem52_functional(F, params, omegas, ptrs);
  nlohmann::ordered_json j;
  j["alpha"] = alpha;
  j["q"] = std::isinf(q) ? nlohmann::ordered_json("inf") : nlohmann::ordered_json(q);
  j["r"] = r;
  j["lhs"] = res.lhs;
  j["rhs"] = res.rhs;
  j["C_hat"] = res.C_hat;
  std::ofstream out(out_path(cfg, "theorem52.json"));
  out << j.dump(2) << "\n";
  std::cout << "lhs=" << res.lhs << " rhs=" << res.rhs << " C_hat=" << res.C_hat
            << "\n";
  return 0;
}

int cmd_check(const RunConfig& cfg, const std::string& suite) {
  const bool fast = suite == "fast";
  const auto results = checks::run_all(cfg, fast);
  bool all = true;
  for (const auto& r : results) {
    std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << r.name << ": " << r.detail
              << "\n";
    all = all && r.pass;
  }
  std::cout << (all ? "all criteria passed" : "criteria FAILED") << "\n";
  return all ? 0 : 1;
}

int cmd_calibrate(const RunConfig& cfg) {
  RunConfig out_cfg = cfg;
  // Plancherel constant from the five-bump family on the reference grids.
  auto sg = make_spatial(cfg);
  auto kg = make_spectral(cfg);
  Transform T(sg, kg);
  const CalibrationResult cal = calibrate_plancherel(T, calibration_family(kg));
  out_cfg.model.c_P = cal.c_P * cfg.model.c_P;
  std::cout << "c_P = " << out_cfg.model.c_P << " (spread " << cal.spread
            << ")\n";

  // Largest density constant whose sweep stays within condition 100:
  // 8 bisection steps against the omega sweep.
  double lo = 0.8, hi = 3.6;
  auto sweep_ok = [&](double c) {
    for (double w : cfg.omega_sweep) {
      try {
        const double r = nyquist_radius(w, c);
        const Lattice L = build_lattice(cfg.lattice.R, r, cfg.seed);
        auto grid = make_frame_grid(out_cfg, w);
        const AnalysisOperator E = assemble_analysis(L, w, grid);
        if (frame_bounds(E).cond() > 100.0) return false;
      } catch (const RankDeficientError&) {
        return false;
      }
    }
    return true;
  };
  if (!sweep_ok(lo)) {
    std::cerr << "calibrate: even the densest lattice fails the sweep\n";
    return 1;
  }
  for (int step = 0; step < 8; ++step) {
    const double mid = 0.5 * (lo + hi);
    if (sweep_ok(mid))
      lo = mid;
    else
      hi = mid;
  }
  out_cfg.lattice.c = lo;
  std::cout << "c = " << lo << "\n";
  save_config(out_path(cfg, "calibrated_config.json"), out_cfg);
  std::cout << "wrote " << out_path(cfg, "calibrated_config.json") << "\n";
  return 0;
}

int cmd_bench(const RunConfig& cfg) {
  using clock = std::chrono::steady_clock;
  auto sg = make_spatial(cfg);
  auto kg = make_spectral(cfg);
  Transform T(sg, kg);
  Rng rng(cfg.seed);
  const SpectralFunction F = random_smooth_spectrum(kg, rng);

  std::ofstream out(out_path(cfg, "bench.csv"));
  out << "kernel,seconds,ops\n";
  auto record = [&out](const std::string& name, double sec, double ops) {
    out << name << ',' << format_double(sec) << ',' << format_double(ops) << "\n";
    std::cout << name << ": " << sec << " s (" << ops << " ops)\n";
  };

  auto t0 = clock::now();
  const SpatialFunction f = T.inverse_on_grid(F);
  auto t1 = clock::now();
  record("inverse_on_grid", std::chrono::duration<double>(t1 - t0).count(),
         double(kg->n_lambda) * sg->n_r * kg->n_b);
  t0 = clock::now();
  const SpectralFunction G = T.forward(f);
  t1 = clock::now();
  record("forward", std::chrono::duration<double>(t1 - t0).count(),
         double(kg->n_lambda) * sg->n_r * kg->n_b);
  (void)G;

  const double w = cfg.omega;
  auto grid = make_frame_grid(cfg, w);
  const double r = lattice_radius(cfg, w);
  const Lattice L = build_lattice(cfg.lattice.R, r, cfg.seed);
  t0 = clock::now();
  const AnalysisOperator E = assemble_analysis(L, w, grid);
  E.ensure_gram();
  t1 = clock::now();
  record("assemble+gram", std::chrono::duration<double>(t1 - t0).count(),
         double(E.rows()) * E.cols() * E.cols() / 2);
  const FrameBounds fb = frame_bounds(E);
  FrameSystem fsys{E, fb, w, cfg.solver.tol, cfg.solver.max_iter_factor, L};
  const SpectralFunction Fb = random_band_vector(grid, w, rng);
  const std::vector<Complex> samples = fsys.sample(Fb);
  t0 = clock::now();
  const SpectralFunction rec = dual_apply(samples, fsys);
  t1 = clock::now();
  (void)rec;
  record("cg_reconstruct", std::chrono::duration<double>(t1 - t0).count(),
         double(E.cols()) * E.cols());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Discrete Helgason-Fourier transform workbench on the "
               "hyperbolic disk"};
  app.require_subcommand(1);

  Cli cli;
  app.add_option("--config", cli.config_path, "JSON config path");
  app.add_option("--out", cli.out_dir, "output directory");
  app.add_option("--omega", cli.omega, "band limit");
  app.add_option("--seed", cli.seed, "RNG seed override");
  app.add_flag("--dump-duals", cli.dump_duals, "write dual-frame members");
  app.add_option("--suite", cli.suite, "check suite: all|fast")
      ->check(CLI::IsMember({"all", "fast"}));
  app.add_option("--input", cli.input, "input file (overrides config paths.input)");
  app.add_option("--alpha", cli.alpha, "smoothness parameter");
  app.add_option("--q", cli.q, "integrability index (inf allowed via 'inf')");
  app.add_option("--r", cli.r, "difference order");
  std::string lattice_csv;

  auto* c_transform = app.add_subcommand("transform", "forward transform of a spatial CSV");
  auto* c_project = app.add_subcommand("project", "band-limit a spectral CSV");
  auto* c_lattice = app.add_subcommand("lattice", "build and certify a lattice");
  auto* c_frame = app.add_subcommand("frame", "assemble and certify the sampling frame");
  auto* c_rec = app.add_subcommand("reconstruct", "dual-frame reconstruction from samples");
  c_rec->add_option("--lattice", lattice_csv, "lattice CSV path")->required();
  auto* c_quad = app.add_subcommand("quadrature", "quadrature weights for the config region");
  auto* c_rates = app.add_subcommand("rates", "approximation-rate sweep and fit");
  auto* c_t52 = app.add_subcommand("theorem52", "dyadic functional vs Besov norm");
  auto* c_check = app.add_subcommand("check", "run the acceptance/invariant suite");
  auto* c_cal = app.add_subcommand("calibrate", "calibrate c_P and the density constant");
  auto* c_bench = app.add_subcommand("bench", "time the dense kernels");

  CLI11_PARSE(app, argc, argv);

  try {
    const RunConfig cfg = effective_config(cli);
    if (c_transform->parsed()) return cmd_transform(cfg);
    if (c_project->parsed()) return cmd_project(cfg);
    if (c_lattice->parsed()) return cmd_lattice(cfg);
    if (c_frame->parsed()) return cmd_frame(cfg, cli.dump_duals);
    if (c_rec->parsed()) return cmd_reconstruct(cfg, lattice_csv);
    if (c_quad->parsed()) return cmd_quadrature(cfg);
    if (c_rates->parsed()) return cmd_rates(cfg, cli.alpha);
    if (c_t52->parsed()) return cmd_theorem52(cfg, cli.alpha, cli.q, cli.r);
    if (c_check->parsed()) return cmd_check(cfg, cli.suite);
    if (c_cal->parsed()) return cmd_calibrate(cfg);
    if (c_bench->parsed()) return cmd_bench(cfg);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const IOError& e) {
    std::cerr << "io error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
