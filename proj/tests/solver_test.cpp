#include <doctest.h>

#include <cmath>
#include <random>

#include "hdft/solver.hpp"

using namespace hdft;

namespace {

// Dense Hermitian PSD operator with weighted self-adjointness, built as
// S = D + M^H M in the weighted product (apply includes the weights).
struct DenseOp {
  std::size_t n;
  std::vector<double> w;
  std::vector<Complex> mat;  // S[c,d] applied as sum_d conj? no: plain rows

  WeightedOperator op() const {
    WeightedOperator o;
    o.dim = n;
    o.weights = w.data();
    o.apply = [this](const Complex* in, Complex* out) {
      for (std::size_t c = 0; c < n; ++c) {
        Complex s(0.0, 0.0);
        for (std::size_t d = 0; d < n; ++d) s += mat[c * n + d] * (in[d] * w[d]);
        out[c] = s;
      }
    };
    return o;
  }
};

// A W-self-adjoint PSD matrix: S = G with G = A^H A, apply with weights,
// i.e. S v = G W v. Such S is self-adjoint for <x,y>_W.
DenseOp random_spd(std::size_t n, std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  std::uniform_real_distribution<double> wdist(0.3, 2.0);
  DenseOp d;
  d.n = n;
  d.w.resize(n);
  for (auto& x : d.w) x = wdist(rng);
  std::vector<Complex> A(n * n);
  for (auto& x : A) x = Complex(g(rng), g(rng));
  d.mat.assign(n * n, Complex(0.0, 0.0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t c = 0; c < n; ++c)
      for (std::size_t e = 0; e < n; ++e)
        d.mat[c * n + e] += std::conj(A[i * n + c]) * A[i * n + e];
  for (std::size_t c = 0; c < n; ++c) d.mat[c * n + c] += 0.5;  // keep it SPD
  return d;
}

}  // namespace

TEST_CASE("cg solves a small weighted SPD system") {
  std::mt19937_64 rng(3);
  const DenseOp d = random_spd(24, rng);
  const WeightedOperator op = d.op();
  std::normal_distribution<double> g(0.0, 1.0);
  std::vector<Complex> x_true(d.n);
  for (auto& v : x_true) v = Complex(g(rng), g(rng));
  std::vector<Complex> b(d.n);
  op.apply(x_true.data(), b.data());

  const CgResult res = conjugate_gradient(op, b, 1e-12, 1000);
  double num = 0.0, den = 0.0;
  for (std::size_t i = 0; i < d.n; ++i) {
    num += std::norm(res.x[i] - x_true[i]) * d.w[i];
    den += std::norm(x_true[i]) * d.w[i];
  }
  CHECK(std::sqrt(num / den) <= 1e-9);
  CHECK(res.residual <= 1e-12);
}

TEST_CASE("cg on a zero right-hand side returns zero") {
  std::mt19937_64 rng(5);
  const DenseOp d = random_spd(8, rng);
  const CgResult res = conjugate_gradient(d.op(), std::vector<Complex>(8), 1e-12, 100);
  for (const Complex& v : res.x) CHECK(std::abs(v) == 0.0);
  CHECK(res.iterations == 0);
}

TEST_CASE("cg reports stagnation") {
  std::mt19937_64 rng(7);
  const DenseOp d = random_spd(24, rng);
  std::vector<Complex> b(d.n, Complex(1.0, 0.0));
  CHECK_THROWS_AS((void)conjugate_gradient(d.op(), b, 1e-14, 2), SolverError);
}

TEST_CASE("power iteration finds extreme eigenvalues of a diagonal operator") {
  const std::size_t n = 16;
  std::vector<double> w(n, 1.0);
  std::vector<double> eig(n);
  for (std::size_t i = 0; i < n; ++i) eig[i] = 0.5 + 0.37 * i;
  WeightedOperator op;
  op.dim = n;
  op.weights = w.data();
  op.apply = [&eig, n](const Complex* in, Complex* out) {
    for (std::size_t i = 0; i < n; ++i) out[i] = eig[i] * in[i];
  };
  const double top = power_iteration(op, 1e-12, 100000).eigenvalue;
  CHECK(top == doctest::Approx(eig.back()).epsilon(1e-8));
  const double bottom =
      shifted_power_iteration(op, top * 1.001, 1e-12, 100000).eigenvalue;
  CHECK(bottom == doctest::Approx(eig.front()).epsilon(1e-6));
}
