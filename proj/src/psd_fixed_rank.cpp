#include "rsgd/psd_fixed_rank.hpp"

#include <cmath>

namespace rsgd {

namespace {

double smallest_singular_value(const Matrix& g) {
  Eigen::JacobiSVD<Matrix> svd(g);
  return svd.singularValues().minCoeff();
}

// Orbit-aligned representative: H O* with O* the orthogonal polar factor
// of H^T G, i.e. the rotation minimizing ||G - H O||_F.
Matrix align_to(const Matrix& g, const Matrix& h) {
  Eigen::JacobiSVD<Matrix> svd(h.transpose() * g,
                               Eigen::ComputeFullU | Eigen::ComputeFullV);
  return h * (svd.matrixU() * svd.matrixV().transpose());
}

}  // namespace

FixedRankPsdQuotient::FixedRankPsdQuotient(int n, int r) : n_(n), r_(r) {
  if (r < 1 || n < r)
    throw std::invalid_argument("FixedRankPsdQuotient: need 1 <= r <= n");
}

std::string FixedRankPsdQuotient::name() const {
  return "psd_fixed_rank(" + std::to_string(n_) + "," + std::to_string(r_) + ")";
}

double FixedRankPsdQuotient::membership_residual(const Matrix& g) const {
  const double s = smallest_singular_value(g);
  return s > kRankFloor ? 0.0 : (kRankFloor - s) + 1.0;
}

double FixedRankPsdQuotient::tangency_residual(const Matrix& g, const Matrix& v) const {
  Matrix m = g.transpose() * v;
  return (m - m.transpose()).norm() / std::max(1.0, v.norm());
}

Matrix FixedRankPsdQuotient::project_tangent(const Matrix& g, const Matrix& a) const {
  // Remove the vertical component G Omega (Omega skew), solving the
  // Sylvester equation  G^T G Omega + Omega G^T G = G^T A - A^T G
  // in the eigenbasis of G^T G.
  Matrix gtg = g.transpose() * g;
  Eigen::SelfAdjointEigenSolver<Matrix> es(gtg);
  if (es.info() != Eigen::Success)
    throw GeometryError("psd_fixed_rank: eigendecomposition failed");
  const Vector s = es.eigenvalues();
  const Matrix& q = es.eigenvectors();
  Matrix rhs = q.transpose() * (g.transpose() * a - a.transpose() * g) * q;
  Matrix omega(r_, r_);
  for (int i = 0; i < r_; ++i)
    for (int j = 0; j < r_; ++j) omega(i, j) = rhs(i, j) / (s(i) + s(j));
  omega = q * omega * q.transpose();
  return a - g * omega;
}

double FixedRankPsdQuotient::inner(const Matrix&, const Matrix& u,
                                   const Matrix& v) const {
  return (u.array() * v.array()).sum();
}

double FixedRankPsdQuotient::dist(const Matrix& g, const Matrix& h) const {
  return (align_to(g, h) - g).norm();
}

bool FixedRankPsdQuotient::log_defined(const Matrix& g, const Matrix& h) const {
  Eigen::JacobiSVD<Matrix> svd(h.transpose() * g);
  return svd.singularValues().minCoeff() > 1e-12;
}

Matrix FixedRankPsdQuotient::random_point(Rng& rng) const {
  for (int attempt = 0; attempt < 16; ++attempt) {
    Matrix g = random_gaussian(n_, r_, rng);
    if (smallest_singular_value(g) > 1e-6) return g;
  }
  throw GeometryError("psd_fixed_rank: failed to sample a full-rank factor");
}

Matrix FixedRankPsdQuotient::exp_impl(const Matrix& g, const Matrix& v) const {
  Matrix next = g + v;
  if (smallest_singular_value(next) <= kRankFloor)
    throw GeometryError("psd_fixed_rank: rank collapse (smallest singular value below floor)");
  return next;
}

Matrix FixedRankPsdQuotient::log_impl(const Matrix& g, const Matrix& h) const {
  return align_to(g, h) - g;
}

}  // namespace rsgd
