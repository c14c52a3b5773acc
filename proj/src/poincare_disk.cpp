#include "rsgd/poincare_disk.hpp"

#include <cmath>
#include <complex>

namespace rsgd {

namespace {

using Complex = std::complex<double>;

Complex to_complex(const Matrix& p) { return {p(0, 0), p(1, 0)}; }

Matrix to_matrix(const Complex& z) {
  Matrix p(2, 1);
  p(0, 0) = z.real();
  p(1, 0) = z.imag();
  return p;
}

// Mobius translation moving 0 to a; an isometry of the disk.
Complex mobius(const Complex& a, const Complex& z) {
  return (z + a) / (1.0 + std::conj(a) * z);
}

void require_interior(const Matrix& x, const char* what) {
  if (x.norm() > 1.0 - PoincareDisk::kBoundaryGuard)
    throw GeometryError(std::string("poincare_disk: ") + what +
                        " is at or outside the boundary");
}

}  // namespace

double disk_distance(const Matrix& z, const Matrix& w) {
  require_interior(z, "point");
  require_interior(w, "point");
  const double nz = z.squaredNorm();
  const double nw = w.squaredNorm();
  const double delta = 2.0 * (z - w).squaredNorm() / ((1.0 - nz) * (1.0 - nw));
  // acosh(1 + delta), written to stay accurate for small delta.
  return std::log1p(delta + std::sqrt(delta * (delta + 2.0)));
}

Matrix disk_exp(const Matrix& x, const Matrix& v) {
  require_interior(x, "base point");
  const double nx = x.squaredNorm();
  const Complex u = to_complex(v) / (1.0 - nx);  // pull back to the origin
  const double r = std::abs(u);
  if (r < 1e-300) return x;
  const Complex p0 = std::tanh(r) * (u / r);
  Matrix result = to_matrix(mobius(to_complex(x), p0));
  require_interior(result, "exp result");
  return result;
}

Matrix disk_log(const Matrix& x, const Matrix& y) {
  require_interior(x, "base point");
  require_interior(y, "target point");
  const Complex w0 = mobius(-to_complex(x), to_complex(y));
  const double r = std::abs(w0);
  if (r < 1e-300) return Matrix::Zero(2, 1);
  const Complex l0 = std::atanh(r) * (w0 / r);
  return to_matrix((1.0 - x.squaredNorm()) * l0);
}

double PoincareDisk::membership_residual(const Matrix& x) const {
  return std::max(0.0, x.norm() - (1.0 - kBoundaryGuard));
}

double PoincareDisk::tangency_residual(const Matrix&, const Matrix&) const {
  return 0.0;  // the tangent space is all of R^2
}

Matrix PoincareDisk::project_tangent(const Matrix&, const Matrix& a) const {
  return a;
}

double PoincareDisk::inner(const Matrix& x, const Matrix& u, const Matrix& v) const {
  const double c = 1.0 - x.squaredNorm();
  return 4.0 * u.col(0).dot(v.col(0)) / (c * c);
}

double PoincareDisk::dist(const Matrix& x, const Matrix& y) const {
  return disk_distance(x, y);
}

Matrix PoincareDisk::random_point(Rng& rng) const {
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  const double radius = 0.9 * std::sqrt(unif(rng));
  const double angle = 2.0 * 3.14159265358979323846 * unif(rng);
  Matrix p(2, 1);
  p(0, 0) = radius * std::cos(angle);
  p(1, 0) = radius * std::sin(angle);
  return p;
}

Matrix PoincareDisk::exp_impl(const Matrix& x, const Matrix& v) const {
  return disk_exp(x, v);
}

Matrix PoincareDisk::log_impl(const Matrix& x, const Matrix& y) const {
  return disk_log(x, y);
}

}  // namespace rsgd
