#include "rsgd/grassmann.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace rsgd {

namespace {
constexpr double kHalfPi = std::numbers::pi / 2.0;
}

Grassmann::Grassmann(int n, int r) : n_(n), r_(r) {
  if (r < 1 || n < r)
    throw std::invalid_argument("Grassmann: need 1 <= r <= n");
}

std::string Grassmann::name() const {
  return "grassmann(" + std::to_string(n_) + "," + std::to_string(r_) + ")";
}

double Grassmann::membership_residual(const Matrix& w) const {
  return (w.transpose() * w - Matrix::Identity(r_, r_)).norm();
}

double Grassmann::tangency_residual(const Matrix& w, const Matrix& v) const {
  return (w.transpose() * v).norm() / std::max(1.0, v.norm());
}

Matrix Grassmann::project_tangent(const Matrix& w, const Matrix& a) const {
  return a - w * (w.transpose() * a);
}

double Grassmann::inner(const Matrix&, const Matrix& u, const Matrix& v) const {
  return (u.array() * v.array()).sum();
}

Vector principal_angles(const Matrix& w, const Matrix& v) {
  // Cosines from W^T V, sines from (I - W W^T) V; pairing the descending
  // cosines with the ascending sines gives atan2 arguments that are stable
  // at both ends of [0, pi/2].
  const int r = static_cast<int>(w.cols());
  Eigen::JacobiSVD<Matrix> svd_c(w.transpose() * v);
  Eigen::JacobiSVD<Matrix> svd_s(v - w * (w.transpose() * v));
  Vector c = svd_c.singularValues();  // descending
  Vector s = svd_s.singularValues();  // descending
  Vector theta(r);
  for (int i = 0; i < r; ++i) {
    const double ci = std::clamp(c(i), 0.0, 1.0);
    const double si = std::clamp(s(r - 1 - i), 0.0, 1.0);
    theta(i) = std::atan2(si, ci);
  }
  return theta;
}

double Grassmann::dist(const Matrix& w, const Matrix& y) const {
  return principal_angles(w, y).norm();
}

bool Grassmann::log_defined(const Matrix& w, const Matrix& y) const {
  Eigen::JacobiSVD<Matrix> svd(w.transpose() * y);
  return svd.singularValues().minCoeff() > 1e-9;
}

double Grassmann::injectivity_radius(const Matrix&) const { return kHalfPi; }

Matrix Grassmann::random_point(Rng& rng) const {
  return qr_orthonormal_factor(random_gaussian(n_, r_, rng));
}

Matrix grassmann_geodesic_step(const Matrix& w, const Matrix& h, double gamma) {
  const int r = static_cast<int>(w.cols());
  Eigen::JacobiSVD<Matrix> svd(h, Eigen::ComputeThinU | Eigen::ComputeThinV);
  Vector theta = gamma * svd.singularValues();
  if (theta.size() > 0 && theta.maxCoeff() >= kHalfPi)
    throw GeometryError("grassmann: step beyond the injectivity radius pi/2");
  Vector c(r), s(r);
  for (int i = 0; i < r; ++i) {
    c(i) = std::cos(theta(i));
    s(i) = std::sin(theta(i));
  }
  const Matrix& u = svd.matrixU();
  const Matrix& v = svd.matrixV();
  Matrix next = w * (v * c.asDiagonal() * v.transpose()) +
                u * s.asDiagonal() * v.transpose();
  // Re-orthonormalize only when drift is detectable; each update is built
  // from orthonormal factors so this trips rarely.
  if ((next.transpose() * next - Matrix::Identity(r, r)).norm() > 1e-10)
    next = qr_orthonormal_factor(next);
  return next;
}

Matrix qr_retract(const Matrix& w, const Matrix& delta, double gamma) {
  return qr_orthonormal_factor(w + gamma * delta);
}

Matrix Grassmann::exp_impl(const Matrix& w, const Matrix& v) const {
  return grassmann_geodesic_step(w, v, 1.0);
}

Matrix Grassmann::log_impl(const Matrix& w, const Matrix& y) const {
  // X = (I - W W^T) Y (W^T Y)^{-1}; with the thin SVD X = U S V^T the log
  // is U atan(S) V^T.
  Eigen::JacobiSVD<Matrix> m(w.transpose() * y,
                             Eigen::ComputeThinU | Eigen::ComputeThinV);
  Vector sv = m.singularValues();
  Matrix minv = m.matrixV() * sv.cwiseInverse().asDiagonal() * m.matrixU().transpose();
  Matrix x = (y - w * (w.transpose() * y)) * minv;
  Eigen::JacobiSVD<Matrix> svd(x, Eigen::ComputeThinU | Eigen::ComputeThinV);
  Vector theta = svd.singularValues();
  for (int i = 0; i < theta.size(); ++i) theta(i) = std::atan(theta(i));
  return svd.matrixU() * theta.asDiagonal() * svd.matrixV().transpose();
}

Matrix Grassmann::retract_impl(const Matrix& w, const Matrix& v) const {
  return qr_retract(w, v, 1.0);
}

}  // namespace rsgd
