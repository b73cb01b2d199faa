#include "hdft/solver.hpp"

#include <cmath>

#include "hdft/errors.hpp"

namespace hdft {

Complex weighted_dot(const WeightedOperator& op, const Complex* x,
                     const Complex* y) {
  Complex s(0.0, 0.0);
  for (std::size_t i = 0; i < op.dim; ++i)
    s += std::conj(x[i]) * y[i] * op.weights[i];
  return s;
}

double weighted_norm(const WeightedOperator& op, const Complex* x) {
  double s = 0.0;
  for (std::size_t i = 0; i < op.dim; ++i)
    s += std::norm(x[i]) * op.weights[i];
  return std::sqrt(s);
}

PowerIterationResult power_iteration(const WeightedOperator& op, double tol,
                                     int max_iter) {
  std::vector<Complex> v(op.dim, Complex(1.0, 0.0)), sv(op.dim);
  double prev = 0.0;
  PowerIterationResult res;
  for (int it = 1; it <= max_iter; ++it) {
    const double nv = weighted_norm(op, v.data());
    if (nv == 0.0) return {0.0, it};
    for (auto& c : v) c /= nv;
    op.apply(v.data(), sv.data());
    const double ray = weighted_dot(op, v.data(), sv.data()).real();
    res.eigenvalue = ray;
    res.iterations = it;
    if (it > 1 && std::abs(ray - prev) <= tol * std::abs(ray)) return res;
    prev = ray;
    v.swap(sv);
  }
  return res;
}

PowerIterationResult shifted_power_iteration(const WeightedOperator& op,
                                             double shift, double tol,
                                             int max_iter) {
  std::vector<Complex> v(op.dim, Complex(1.0, 0.0)), sv(op.dim);
  double prev = 0.0;
  PowerIterationResult res;
  for (int it = 1; it <= max_iter; ++it) {
    const double nv = weighted_norm(op, v.data());
    if (nv == 0.0) return {shift, it};
    for (auto& c : v) c /= nv;
    op.apply(v.data(), sv.data());
    // (shift*I - S) v
    for (std::size_t i = 0; i < op.dim; ++i) sv[i] = shift * v[i] - sv[i];
    const double ray = weighted_dot(op, v.data(), sv.data()).real();
    res.eigenvalue = shift - ray;
    res.iterations = it;
    if (it > 1 && std::abs(ray - prev) <= tol * std::max(std::abs(ray), 1e-300))
      return res;
    prev = ray;
    v.swap(sv);
  }
  return res;
}

CgResult conjugate_gradient(const WeightedOperator& op,
                            const std::vector<Complex>& b, double tol,
                            int max_iter) {
  const std::size_t n = op.dim;
  CgResult res;
  res.x.assign(n, Complex(0.0, 0.0));
  const double nb = weighted_norm(op, b.data());
  if (nb == 0.0) return res;

  std::vector<Complex> r = b, p = b, sp(n);
  double rho = 0.0;
  for (std::size_t i = 0; i < n; ++i) rho += std::norm(r[i]) * op.weights[i];

  for (int it = 1; it <= max_iter; ++it) {
    op.apply(p.data(), sp.data());
    const double denom = weighted_dot(op, p.data(), sp.data()).real();
    if (denom <= 0.0) throw SolverError(std::sqrt(rho) / nb, it);
    const double alpha = rho / denom;
    for (std::size_t i = 0; i < n; ++i) {
      res.x[i] += alpha * p[i];
      r[i] -= alpha * sp[i];
    }
    double rho_new = 0.0;
    for (std::size_t i = 0; i < n; ++i) rho_new += std::norm(r[i]) * op.weights[i];
    res.iterations = it;
    res.residual = std::sqrt(rho_new) / nb;
    if (res.residual <= tol) return res;
    const double beta = rho_new / rho;
    rho = rho_new;
    for (std::size_t i = 0; i < n; ++i) p[i] = r[i] + beta * p[i];
  }
  throw SolverError(res.residual, res.iterations);
}

}  // namespace hdft
