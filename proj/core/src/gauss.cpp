#include "hdft/gauss.hpp"

#include <cmath>

#include "hdft/errors.hpp"

namespace hdft {

QuadNodes gauss_legendre(int n) {
  if (n < 1) throw Error("gauss_legendre: n must be positive");
  QuadNodes q;
  q.x.resize(n);
  q.w.resize(n);
  const int m = (n + 1) / 2;
  for (int i = 0; i < m; ++i) {
    // Tricomi initial guess, then Newton on P_n.
    double z = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = 0.0;
      for (int j = 0; j < n; ++j) {
        const double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * j + 1.0) * z * p1 - j * p2) / (j + 1.0);
      }
      pp = n * (z * p0 - p1) / (z * z - 1.0);
      const double z1 = z;
      z = z1 - p0 / pp;
      if (std::abs(z - z1) < 1e-15) break;
    }
    q.x[i] = -z;
    q.x[n - 1 - i] = z;
    q.w[i] = 2.0 / ((1.0 - z * z) * pp * pp);
    q.w[n - 1 - i] = q.w[i];
  }
  return q;
}

QuadNodes composite_gauss_legendre(double a, double b, int n) {
  if (!(b > a)) throw Error("composite_gauss_legendre: need b > a");
  if (n < 1) throw Error("composite_gauss_legendre: n must be positive");
  const int panel = (n % 16 == 0) ? 16 : n;
  const int panels = n / panel;
  const QuadNodes base = gauss_legendre(panel);
  QuadNodes q;
  q.x.reserve(n);
  q.w.reserve(n);
  const double width = (b - a) / panels;
  for (int p = 0; p < panels; ++p) {
    const double lo = a + p * width;
    for (int i = 0; i < panel; ++i) {
      q.x.push_back(lo + 0.5 * width * (base.x[i] + 1.0));
      q.w.push_back(0.5 * width * base.w[i]);
    }
  }
  return q;
}

}  // namespace hdft
