#include "hdft/geometry.hpp"

#include <cmath>

namespace hdft {

namespace {
constexpr double kTwoPi = 6.283185307179586476925286766559;
}

BoundaryPoint::BoundaryPoint(double theta) {
  if (!std::isfinite(theta)) throw Error("BoundaryPoint: non-finite angle");
  theta_ = std::fmod(theta, kTwoPi);
  if (theta_ < 0.0) theta_ += kTwoPi;
}

double dist_surrogate(const DiskPoint& p, const DiskPoint& q) {
  const double dx = p.x() - q.x();
  const double dy = p.y() - q.y();
  const double np = 1.0 - (p.x() * p.x() + p.y() * p.y());
  const double nq = 1.0 - (q.x() * q.x() + q.y() * q.y());
  return 2.0 * (dx * dx + dy * dy) / (np * nq);
}

double dist(const DiskPoint& p, const DiskPoint& q) {
  return std::acosh(1.0 + dist_surrogate(p, q));
}

double busemann_raw(double zx, double zy, double bx, double by) {
  const double dx = zx - bx;
  const double dy = zy - by;
  const double num = 1.0 - (zx * zx + zy * zy);
  return std::log(num / (dx * dx + dy * dy));
}

double busemann(const DiskPoint& p, const BoundaryPoint& b) {
  const Complex u = b.unit();
  return busemann_raw(p.x(), p.y(), u.real(), u.imag());
}

DiskPoint mobius_translate(const DiskPoint& a, const DiskPoint& p) {
  const Complex w = (p.z() + a.z()) / (1.0 + std::conj(a.z()) * p.z());
  return DiskPoint(w);
}

DiskPoint polar_to_point(double r, double theta) {
  if (r < 0.0) throw Error("polar_to_point: negative radius");
  const double t = std::tanh(0.5 * r);
  return DiskPoint(Complex(t * std::cos(theta), t * std::sin(theta)));
}

Polar point_to_polar(const DiskPoint& p) {
  const double a = std::abs(p.z());
  if (a == 0.0) return {0.0, 0.0};
  return {2.0 * std::atanh(a), std::atan2(p.y(), p.x())};
}

double ball_area(double R) { return kTwoPi * (std::cosh(R) - 1.0); }

}  // namespace hdft
