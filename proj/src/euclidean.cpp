#include "rsgd/euclidean.hpp"

namespace rsgd {

EuclideanSpace::EuclideanSpace(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 1 || cols < 1)
    throw std::invalid_argument("EuclideanSpace: dimensions must be positive");
}

std::string EuclideanSpace::name() const {
  if (cols_ == 1) return "euclidean(" + std::to_string(rows_) + ")";
  return "euclidean(" + std::to_string(rows_) + "x" + std::to_string(cols_) + ")";
}

double EuclideanSpace::membership_residual(const Matrix&) const { return 0.0; }

double EuclideanSpace::tangency_residual(const Matrix&, const Matrix&) const {
  return 0.0;
}

Matrix EuclideanSpace::project_tangent(const Matrix&, const Matrix& a) const {
  return a;
}

double EuclideanSpace::inner(const Matrix&, const Matrix& u, const Matrix& v) const {
  return (u.array() * v.array()).sum();
}

double EuclideanSpace::dist(const Matrix& x, const Matrix& y) const {
  return (x - y).norm();
}

Matrix EuclideanSpace::random_point(Rng& rng) const {
  return random_gaussian(rows_, cols_, rng);
}

Matrix EuclideanSpace::exp_impl(const Matrix& x, const Matrix& v) const {
  return x + v;
}

Matrix EuclideanSpace::log_impl(const Matrix& x, const Matrix& y) const {
  return y - x;
}

}  // namespace rsgd
