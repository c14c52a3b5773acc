#include "rsgd/problems/oja.hpp"

#include <cmath>

namespace rsgd {

OjaProblem OjaProblem::with_spectrum(const Vector& spectrum, int r, Rng& rng,
                                     double bound_factor) {
  const int n = static_cast<int>(spectrum.size());
  if (r < 1 || r > n) throw std::invalid_argument("OjaProblem: need 1 <= r <= n");
  for (int i = 0; i + 1 < n; ++i)
    if (spectrum(i) < spectrum(i + 1))
      throw std::invalid_argument("OjaProblem: spectrum must be nonincreasing");
  if (spectrum(n - 1) <= 0.0)
    throw std::invalid_argument("OjaProblem: spectrum must be positive");

  Matrix q = qr_orthonormal_factor(random_gaussian(n, n, rng));
  OjaProblem p{
      .covariance = q * spectrum.asDiagonal() * q.transpose(),
      .covariance_sqrt = q * spectrum.cwiseSqrt().asDiagonal() * q.transpose(),
      .dominant_basis = q.leftCols(r),
      .input_bound = bound_factor * std::sqrt(spectrum.sum()),
      .manifold = Grassmann(n, r),
  };
  p.covariance = sym(p.covariance);
  p.covariance_sqrt = sym(p.covariance_sqrt);
  return p;
}

Vector OjaProblem::sample_input(Rng& rng) const {
  const int n = static_cast<int>(covariance.rows());
  // uniform on [-sqrt(3), sqrt(3)]: unit variance, bounded support
  std::uniform_real_distribution<double> unif(-std::sqrt(3.0), std::sqrt(3.0));
  Vector u(n);
  for (int i = 0; i < n; ++i) u(i) = unif(rng);
  Vector z = covariance_sqrt * u;
  const double zn = z.norm();
  if (zn > input_bound) z *= input_bound / zn;
  return z;
}

Matrix OjaProblem::random_start(Rng& rng) const { return manifold.random_point(rng); }

Problem OjaProblem::problem() const {
  Problem p;
  p.manifold = &manifold;
  p.sample = [this](Rng& rng) { return Sample{sample_input(rng), 0.0}; };
  p.loss = [](const Sample& z, const Matrix& w) {
    return -0.5 * (w.transpose() * z.x).squaredNorm();
  };
  p.grad = [](const Sample& z, const Matrix& w) -> Matrix {
    return -oja_grad(z.x, w);
  };
  p.batch_cost = [this](const Matrix& w) {
    return -0.5 * (w.transpose() * covariance * w).trace();
  };
  p.error_metric = [this](const Matrix& w) {
    return oja_stationarity_residual(w, covariance);
  };
  return p;
}

Matrix oja_grad(const Vector& z, const Matrix& w) {
  Vector wz = w.transpose() * z;
  Vector residual = z - w * wz;        // (I - W W^T) z
  return residual * wz.transpose();    // (I - W W^T) z z^T W
}

double oja_stationarity_residual(const Matrix& w, const Matrix& a) {
  Matrix aw = a * w;
  return (aw - w * (w.transpose() * aw)).norm();
}

double subspace_angle(const Matrix& w, const Matrix& v) {
  return principal_angles(w, v).maxCoeff();
}

}  // namespace rsgd
