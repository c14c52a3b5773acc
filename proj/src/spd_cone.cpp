#include "rsgd/spd_cone.hpp"

#include <cmath>

namespace rsgd {

namespace {

void require_spd_shape(const Matrix& p, const char* what) {
  if (p.rows() != p.cols())
    throw std::invalid_argument(std::string("spd: ") + what + " must be square");
}

Vector pencil_eigenvalues(const Matrix& p, const Matrix& q) {
  require_spd_shape(p, "P");
  require_spd_shape(q, "Q");
  if (p.rows() != q.rows())
    throw std::invalid_argument("spd: dimension mismatch");
  Eigen::GeneralizedSelfAdjointEigenSolver<Matrix> es(sym(p), sym(q));
  if (es.info() != Eigen::Success)
    throw GeometryError("spd: generalized eigendecomposition failed");
  Vector lam = es.eigenvalues();
  if (lam.minCoeff() <= 0.0)
    throw GeometryError("spd: input matrix is not positive definite");
  return lam;
}

}  // namespace

Matrix spd_exp(const Matrix& p, const Matrix& x) {
  Matrix s = spd_sqrtm(p);
  Matrix si = spd_inv_sqrtm(p);
  return sym(s * spd_expm(si * x * si) * s);
}

Matrix spd_log(const Matrix& p, const Matrix& q) {
  Matrix s = spd_sqrtm(p);
  Matrix si = spd_inv_sqrtm(p);
  return sym(s * spd_logm(sym(si * q * si)) * s);
}

Matrix spd_geodesic(const Matrix& p, const Matrix& q, double gamma) {
  Matrix s = spd_sqrtm(p);
  Matrix si = spd_inv_sqrtm(p);
  return sym(s * spd_power(sym(si * q * si), gamma) * s);
}

double spd_dist(const Matrix& p, const Matrix& q) {
  Vector lam = pencil_eigenvalues(p, q);  // eigenvalues of Q^{-1} P
  double sum = 0.0;
  for (int i = 0; i < lam.size(); ++i) {
    const double l = std::log(lam(i));
    sum += l * l;
  }
  return std::sqrt(sum);
}

double kl_gaussian(const Matrix& p, const Matrix& q) {
  // KL = sum_i (mu_i - 1 - log mu_i) / 2 over eigenvalues mu of Q^{-1} P.
  Vector mu = pencil_eigenvalues(p, q);
  double sum = 0.0;
  for (int i = 0; i < mu.size(); ++i) {
    const double d = mu(i) - 1.0;
    sum += d - std::log1p(d);
  }
  return 0.5 * sum;
}

SpdCone::SpdCone(int n) : n_(n) {
  if (n < 1) throw std::invalid_argument("SpdCone: dimension must be positive");
}

double SpdCone::membership_residual(const Matrix& p) const {
  const double scale = std::max(1.0, p.norm());
  const double asym = (p - p.transpose()).norm() / scale;
  const double lam_min = min_eigenvalue_sym(p);
  return lam_min > 0.0 ? asym : asym + 1.0;
}

double SpdCone::tangency_residual(const Matrix&, const Matrix& v) const {
  return (v - v.transpose()).norm() / std::max(1.0, v.norm());
}

Matrix SpdCone::project_tangent(const Matrix&, const Matrix& a) const {
  return sym(a);
}

double SpdCone::inner(const Matrix& p, const Matrix& u, const Matrix& v) const {
  Eigen::LLT<Matrix> llt(sym(p));
  if (llt.info() != Eigen::Success)
    throw GeometryError("spd: metric base point is not positive definite");
  return (llt.solve(u) * llt.solve(v)).trace();
}

double SpdCone::dist(const Matrix& p, const Matrix& q) const {
  return spd_dist(p, q);
}

Matrix SpdCone::random_point(Rng& rng) const {
  return spd_expm(0.5 * sym(random_gaussian(n_, n_, rng)));
}

Matrix SpdCone::exp_impl(const Matrix& p, const Matrix& v) const {
  return spd_exp(p, v);
}

Matrix SpdCone::log_impl(const Matrix& p, const Matrix& q) const {
  return spd_log(p, q);
}

}  // namespace rsgd
