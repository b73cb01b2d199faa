#include "hdft/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace hdft {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

namespace {

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IOError("cannot open for writing: " + path);
  return out;
}

std::ifstream open_in(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IOError("cannot open for reading: " + path);
  return in;
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> parts;
  std::string cur;
  for (char ch : line) {
    if (ch == ',') {
      parts.push_back(cur);
      cur.clear();
    } else if (ch != '\r') {
      cur.push_back(ch);
    }
  }
  parts.push_back(cur);
  return parts;
}

double parse_double(const std::string& s, const std::string& path) {
  try {
    return std::stod(s);
  } catch (const std::exception&) {
    throw IOError("bad numeric field '" + s + "' in " + path);
  }
}

}  // namespace

void write_spatial_csv(const std::string& path, const SpatialFunction& f) {
  std::ofstream out = open_out(path);
  out << "x,y,re,im\n";
  const SpatialGrid& g = *f.grid;
  for (int n = 0; n < g.size(); ++n) {
    out << format_double(g.points[n].x()) << ',' << format_double(g.points[n].y())
        << ',' << format_double(f.values[n].real()) << ','
        << format_double(f.values[n].imag()) << '\n';
  }
}

SpatialFunction read_spatial_csv(const std::string& path,
                                 std::shared_ptr<const SpatialGrid> grid) {
  std::ifstream in = open_in(path);
  SpatialFunction f(std::move(grid));
  std::string line;
  if (!std::getline(in, line)) throw IOError("empty file: " + path);
  int n = 0;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto parts = split_csv(line);
    if (parts.size() != 4) throw IOError("expected 4 columns in " + path);
    if (n >= f.grid->size()) throw IOError("too many rows in " + path);
    f.values[n] = Complex(parse_double(parts[2], path), parse_double(parts[3], path));
    ++n;
  }
  if (n != f.grid->size())
    throw IOError("row count " + std::to_string(n) + " does not match grid size " +
                  std::to_string(f.grid->size()) + " in " + path);
  return f;
}

void write_spectral_csv(const std::string& path, const SpectralFunction& F) {
  std::ofstream out = open_out(path);
  out << "lambda_index,b_index,lambda,theta_b,re,im\n";
  const SpectralGrid& g = *F.grid;
  for (int i = 0; i < g.n_lambda; ++i)
    for (int k = 0; k < g.n_b; ++k) {
      out << i << ',' << k << ',' << format_double(g.lambda[i]) << ','
          << format_double(g.thetas_b[k]) << ','
          << format_double(F.at(i, k).real()) << ','
          << format_double(F.at(i, k).imag()) << '\n';
    }
}

SpectralFunction read_spectral_csv(const std::string& path,
                                   std::shared_ptr<const SpectralGrid> grid) {
  std::ifstream in = open_in(path);
  SpectralFunction F(std::move(grid));
  std::string line;
  if (!std::getline(in, line)) throw IOError("empty file: " + path);
  int n = 0;
  const int total = F.grid->size();
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto parts = split_csv(line);
    if (parts.size() != 6) throw IOError("expected 6 columns in " + path);
    if (n >= total) throw IOError("too many rows in " + path);
    const int i = static_cast<int>(parse_double(parts[0], path));
    const int k = static_cast<int>(parse_double(parts[1], path));
    if (i < 0 || i >= F.grid->n_lambda || k < 0 || k >= F.grid->n_b)
      throw IOError("index out of range in " + path);
    F.at(i, k) = Complex(parse_double(parts[4], path), parse_double(parts[5], path));
    ++n;
  }
  if (n != total)
    throw IOError("row count does not match grid size in " + path);
  return F;
}

void write_lattice_csv(const std::string& path, const Lattice& L) {
  std::ofstream out = open_out(path);
  out << "id,x,y\n";
  for (std::size_t j = 0; j < L.points.size(); ++j)
    out << j << ',' << format_double(L.points[j].x()) << ','
        << format_double(L.points[j].y()) << '\n';
}

std::vector<DiskPoint> read_lattice_csv(const std::string& path) {
  std::ifstream in = open_in(path);
  std::string line;
  if (!std::getline(in, line)) throw IOError("empty file: " + path);
  std::vector<DiskPoint> pts;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto parts = split_csv(line);
    if (parts.size() != 3) throw IOError("expected 3 columns in " + path);
    pts.emplace_back(parse_double(parts[1], path), parse_double(parts[2], path));
  }
  return pts;
}

void write_certificate_json(const std::string& path, const Lattice& L) {
  nlohmann::ordered_json j;
  j["r"] = L.r;
  j["R"] = L.R;
  j["min_pairwise"] = L.certificate.min_pairwise;
  j["covering_radius"] = L.certificate.covering_radius;
  j["multiplicity"] = L.certificate.multiplicity;
  std::ofstream out = open_out(path);
  out << j.dump(2) << '\n';
}

void write_frame_report_json(const std::string& path, const FrameSystem& fs,
                             double c_used) {
  nlohmann::ordered_json j;
  j["omega"] = fs.omega;
  j["r"] = fs.lattice ? fs.lattice->r : 0.0;
  j["c"] = c_used;
  j["n_points"] = fs.E.rows();
  j["A"] = fs.bounds.A;
  j["B"] = fs.bounds.B;
  j["cond"] = fs.bounds.cond();
  j["solver_tol"] = fs.solver_tol;
  std::ofstream out = open_out(path);
  out << j.dump(2) << '\n';
}

void write_weights_csv(const std::string& path, const QuadratureRule& rule) {
  std::ofstream out = open_out(path);
  out << "id,re,im\n";
  for (std::size_t j = 0; j < rule.weights.size(); ++j)
    out << j << ',' << format_double(rule.weights[j].real()) << ','
        << format_double(rule.weights[j].imag()) << '\n';
}

void write_rate_csv(const std::string& path, const std::vector<double>& omegas,
                    const std::vector<double>& E,
                    const std::vector<double>& Phi) {
  std::ofstream out = open_out(path);
  out << "omega,E,Phi\n";
  for (std::size_t m = 0; m < omegas.size(); ++m)
    out << format_double(omegas[m]) << ',' << format_double(E[m]) << ','
        << format_double(Phi[m]) << '\n';
}

void write_samples_csv(const std::string& path,
                       const std::vector<Complex>& samples) {
  std::ofstream out = open_out(path);
  out << "id,re,im\n";
  for (std::size_t j = 0; j < samples.size(); ++j)
    out << j << ',' << format_double(samples[j].real()) << ','
        << format_double(samples[j].imag()) << '\n';
}

std::vector<Complex> read_samples_csv(const std::string& path) {
  std::ifstream in = open_in(path);
  std::string line;
  if (!std::getline(in, line)) throw IOError("empty file: " + path);
  std::vector<Complex> out;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto parts = split_csv(line);
    if (parts.size() != 3) throw IOError("expected 3 columns in " + path);
    out.emplace_back(parse_double(parts[1], path), parse_double(parts[2], path));
  }
  return out;
}

}  // namespace hdft
