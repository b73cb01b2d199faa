#pragma once

#include <vector>

namespace hdft {

struct QuadNodes {
  std::vector<double> x;
  std::vector<double> w;
};

/// Gauss-Legendre nodes and weights on [-1, 1], Newton iteration on the
/// Legendre recurrence. Exact for polynomials of degree 2n-1.
QuadNodes gauss_legendre(int n);

/// Composite rule on [a, b]: panels of 16 Gauss-Legendre points when n is a
/// multiple of 16, otherwise a single n-point rule. Nodes ascend.
QuadNodes composite_gauss_legendre(double a, double b, int n);

}  // namespace hdft
