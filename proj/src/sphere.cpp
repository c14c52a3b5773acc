#include "rsgd/sphere.hpp"

#include <cmath>
#include <numbers>

namespace rsgd {

Sphere::Sphere(int ambient_dim) : n_(ambient_dim) {
  if (ambient_dim < 2)
    throw std::invalid_argument("Sphere: ambient dimension must be >= 2");
}

std::string Sphere::name() const { return "sphere(" + std::to_string(n_) + ")"; }

double Sphere::membership_residual(const Matrix& x) const {
  return std::abs(x.norm() - 1.0);
}

double Sphere::tangency_residual(const Matrix& x, const Matrix& v) const {
  return std::abs(x.col(0).dot(v.col(0))) / std::max(1.0, v.norm());
}

Matrix Sphere::project_tangent(const Matrix& x, const Matrix& a) const {
  return a - x.col(0).dot(a.col(0)) * x;
}

double Sphere::inner(const Matrix&, const Matrix& u, const Matrix& v) const {
  return u.col(0).dot(v.col(0));
}

double Sphere::dist(const Matrix& x, const Matrix& y) const {
  // atan2 of the (sin, cos) pair is stable at both ends of [0, pi].
  const double c = x.col(0).dot(y.col(0));
  const double s = (y - c * x).norm();
  return std::atan2(s, c);
}

bool Sphere::log_defined(const Matrix& x, const Matrix& y) const {
  return x.col(0).dot(y.col(0)) > -1.0 + 1e-12;
}

double Sphere::injectivity_radius(const Matrix&) const { return std::numbers::pi; }

Matrix Sphere::random_point(Rng& rng) const {
  Matrix x = random_gaussian(n_, 1, rng);
  while (x.norm() < 1e-12) x = random_gaussian(n_, 1, rng);
  return x / x.norm();
}

Matrix Sphere::exp_impl(const Matrix& x, const Matrix& v) const {
  const double theta = v.norm();
  if (theta >= std::numbers::pi)
    throw GeometryError("sphere: step beyond the injectivity radius pi");
  if (theta < 1e-300) return x;
  return std::cos(theta) * x + (std::sin(theta) / theta) * v;
}

Matrix Sphere::log_impl(const Matrix& x, const Matrix& y) const {
  const double theta = dist(x, y);
  Matrix u = y - x.col(0).dot(y.col(0)) * x;
  const double un = u.norm();
  if (un < 1e-300) return Matrix::Zero(n_, 1);
  return (theta / un) * u;
}

Matrix Sphere::retract_impl(const Matrix& x, const Matrix& v) const {
  Matrix b = x + v;
  const double bn = b.norm();
  if (bn < 1e-12) throw GeometryError("sphere: retraction through the origin");
  return b / bn;
}

}  // namespace rsgd
