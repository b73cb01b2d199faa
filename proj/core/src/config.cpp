#include "hdft/config.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "hdft/errors.hpp"

namespace hdft {

int FrameGridConfig::n_b_for(double omega) const {
  // smallest configured band at least omega; top entry otherwise
  for (const auto& [w, nb] : n_b_per_omega)
    if (omega <= w + 1e-12) return nb;
  return n_b_per_omega.rbegin()->second;
}

namespace {

using nlohmann::json;

template <typename T>
void maybe(const json& j, const char* key, T& out) {
  if (j.contains(key)) out = j.at(key).get<T>();
}

}  // namespace

RunConfig parse_config(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const std::exception& e) {
    throw ConfigError(std::string("malformed config JSON: ") + e.what());
  }
  RunConfig cfg;
  try {
    maybe(j, "Lambda_max", cfg.Lambda_max);
    maybe(j, "n_lambda", cfg.n_lambda);
    maybe(j, "n_b", cfg.n_b);
    maybe(j, "R", cfg.R);
    maybe(j, "n_r", cfg.n_r);
    maybe(j, "n_theta", cfg.n_theta);
    maybe(j, "c_P", cfg.model.c_P);
    maybe(j, "tol", cfg.tol);
    maybe(j, "seed", cfg.seed);
    if (j.contains("band")) {
      const json& b = j.at("band");
      maybe(b, "omega", cfg.omega);
      if (b.contains("omega_sweep"))
        cfg.omega_sweep = b.at("omega_sweep").get<std::vector<double>>();
    }
    if (j.contains("lattice")) {
      const json& l = j.at("lattice");
      maybe(l, "R", cfg.lattice.R);
      maybe(l, "c", cfg.lattice.c);
      maybe(l, "r", cfg.lattice.r);
    }
    if (j.contains("frame")) {
      const json& f = j.at("frame");
      maybe(f, "Lambda_max", cfg.frame.Lambda_max);
      maybe(f, "n_lambda", cfg.frame.n_lambda);
      if (f.contains("n_b_per_omega")) {
        cfg.frame.n_b_per_omega.clear();
        for (const auto& [k, v] : f.at("n_b_per_omega").items())
          cfg.frame.n_b_per_omega[std::stod(k)] = v.get<int>();
      }
    }
    if (j.contains("solver")) {
      const json& s = j.at("solver");
      maybe(s, "tol", cfg.solver.tol);
      maybe(s, "max_iter_factor", cfg.solver.max_iter_factor);
    }
    if (j.contains("region")) {
      const json& r = j.at("region");
      maybe(r, "kind", cfg.region.kind);
      if (cfg.region.kind != "ball" && cfg.region.kind != "band")
        throw ConfigError("region kind must be 'ball' or 'band'");
      if (r.contains("center")) {
        const auto c = r.at("center").get<std::vector<double>>();
        if (c.size() != 2) throw ConfigError("region center must be [x, y]");
        cfg.region.center_x = c[0];
        cfg.region.center_y = c[1];
      }
      maybe(r, "radius", cfg.region.radius);
      if (r.contains("lambda")) {
        const auto l = r.at("lambda").get<std::vector<double>>();
        if (l.size() != 2) throw ConfigError("region lambda must be [lo, hi]");
        cfg.region.lambda_lo = l[0];
        cfg.region.lambda_hi = l[1];
      }
    }
    if (j.contains("paths")) {
      const json& p = j.at("paths");
      maybe(p, "input", cfg.input_path);
      maybe(p, "output_dir", cfg.output_dir);
    }
  } catch (const ConfigError&) {
    throw;
  } catch (const std::exception& e) {
    throw ConfigError(std::string("bad config field: ") + e.what());
  }
  if (!(cfg.Lambda_max > 0.0) || cfg.n_lambda < 16 || cfg.n_b < 8 ||
      !(cfg.R > 0.0) || cfg.n_r < 8 || cfg.n_theta < 8 || !(cfg.model.c_P > 0.0))
    throw ConfigError("config values out of range");
  return cfg;
}

std::string config_to_json(const RunConfig& cfg) {
  nlohmann::ordered_json j;
  j["Lambda_max"] = cfg.Lambda_max;
  j["n_lambda"] = cfg.n_lambda;
  j["n_b"] = cfg.n_b;
  j["R"] = cfg.R;
  j["n_r"] = cfg.n_r;
  j["n_theta"] = cfg.n_theta;
  j["c_P"] = cfg.model.c_P;
  j["tol"] = cfg.tol;
  j["seed"] = cfg.seed;
  j["band"] = {{"omega", cfg.omega}, {"omega_sweep", cfg.omega_sweep}};
  j["lattice"] = {{"R", cfg.lattice.R}, {"c", cfg.lattice.c}, {"r", cfg.lattice.r}};
  nlohmann::ordered_json nb;
  for (const auto& [w, n] : cfg.frame.n_b_per_omega) {
    std::ostringstream key;
    key << w;
    nb[key.str()] = n;
  }
  j["frame"] = {{"Lambda_max", cfg.frame.Lambda_max},
                {"n_lambda", cfg.frame.n_lambda},
                {"n_b_per_omega", nb}};
  j["solver"] = {{"tol", cfg.solver.tol},
                 {"max_iter_factor", cfg.solver.max_iter_factor}};
  if (cfg.region.kind == "ball")
    j["region"] = {{"kind", "ball"},
                   {"center", {cfg.region.center_x, cfg.region.center_y}},
                   {"radius", cfg.region.radius}};
  else
    j["region"] = {{"kind", "band"},
                   {"lambda", {cfg.region.lambda_lo, cfg.region.lambda_hi}}};
  j["paths"] = {{"input", cfg.input_path}, {"output_dir", cfg.output_dir}};
  return j.dump(2) + "\n";
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IOError("cannot open config: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

void save_config(const std::string& path, const RunConfig& cfg) {
  std::ofstream out(path);
  if (!out) throw IOError("cannot open for writing: " + path);
  out << config_to_json(cfg);
}

}  // namespace hdft
