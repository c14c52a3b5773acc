#include "rsgd/linalg.hpp"

#include <cmath>

#include "rsgd/errors.hpp"

namespace rsgd {

Matrix random_gaussian(int rows, int cols, Rng& rng) {
  std::normal_distribution<double> g;
  Matrix m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = g(rng);
  return m;
}

namespace {

template <typename Fn>
Matrix sym_matrix_function(const Matrix& a, Fn fn, bool needs_positive,
                           const char* what) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(sym(a));
  if (es.info() != Eigen::Success)
    throw GeometryError(std::string(what) + ": eigendecomposition failed");
  Vector lam = es.eigenvalues();
  if (needs_positive && lam.minCoeff() <= 0.0)
    throw GeometryError(std::string(what) + ": matrix is not positive definite");
  for (int i = 0; i < lam.size(); ++i) lam(i) = fn(lam(i));
  return sym(es.eigenvectors() * lam.asDiagonal() * es.eigenvectors().transpose());
}

}  // namespace

Matrix spd_expm(const Matrix& s) {
  return sym_matrix_function(s, [](double x) { return std::exp(x); }, false, "expm");
}

Matrix spd_logm(const Matrix& p) {
  return sym_matrix_function(p, [](double x) { return std::log(x); }, true, "logm");
}

Matrix spd_sqrtm(const Matrix& p) {
  return sym_matrix_function(p, [](double x) { return std::sqrt(x); }, true, "sqrtm");
}

Matrix spd_inv_sqrtm(const Matrix& p) {
  return sym_matrix_function(p, [](double x) { return 1.0 / std::sqrt(x); }, true,
                             "inv_sqrtm");
}

Matrix spd_power(const Matrix& p, double exponent) {
  return sym_matrix_function(
      p, [exponent](double x) { return std::pow(x, exponent); }, true, "power");
}

double min_eigenvalue_sym(const Matrix& p) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(sym(p),
                                           Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

Matrix qr_orthonormal_factor(const Matrix& b) {
  const int n = static_cast<int>(b.rows());
  const int r = static_cast<int>(b.cols());
  Eigen::HouseholderQR<Matrix> qr(b);
  Matrix q = qr.householderQ() * Matrix::Identity(n, r);
  Matrix rr = qr.matrixQR().topRows(r).triangularView<Eigen::Upper>();
  const double scale = std::max(1.0, b.norm());
  for (int j = 0; j < r; ++j) {
    if (std::abs(rr(j, j)) < 1e-13 * scale)
      throw GeometryError("qr_orthonormal_factor: rank-deficient input");
    if (rr(j, j) < 0.0) q.col(j) = -q.col(j);
  }
  return q;
}

}  // namespace rsgd
