#pragma once

#include <functional>
#include <vector>

#include "hdft/geometry.hpp"

namespace hdft {

/// A self-adjoint positive operator on C^n equipped with the inner product
/// <x,y> = sum_i conj(x_i) y_i w_i. apply must be deterministic.
struct WeightedOperator {
  std::size_t dim = 0;
  const double* weights = nullptr;  // length dim, all positive
  std::function<void(const Complex* in, Complex* out)> apply;
};

double weighted_norm(const WeightedOperator& op, const Complex* x);
Complex weighted_dot(const WeightedOperator& op, const Complex* x,
                     const Complex* y);

struct PowerIterationResult {
  double eigenvalue = 0.0;
  int iterations = 0;
};

/// Largest eigenvalue by power iteration from the all-ones start vector,
/// stopping when the Rayleigh quotient moves by less than tol relatively.
PowerIterationResult power_iteration(const WeightedOperator& op, double tol,
                                     int max_iter);

/// Smallest eigenvalue via shifted power iteration on shift*I - S, where
/// shift is an upper bound for the largest eigenvalue.
PowerIterationResult shifted_power_iteration(const WeightedOperator& op,
                                             double shift, double tol,
                                             int max_iter);

struct CgResult {
  std::vector<Complex> x;
  double residual = 0.0;  // relative, in the weighted norm
  int iterations = 0;
};

/// Conjugate gradients for S x = b in the weighted inner product. Throws
/// SolverError when the relative residual fails to reach tol within
/// max_iter iterations.
CgResult conjugate_gradient(const WeightedOperator& op,
                            const std::vector<Complex>& b, double tol,
                            int max_iter);

}  // namespace hdft
