#pragma once

#include "rsgd/manifold.hpp"

namespace rsgd {

// Flat space of rows x cols real matrices with the trace (dot-product)
// metric. Geodesics are straight lines. Also used as the ambient geometry
// for the factor-space view of the PSD identification problem.
class EuclideanSpace final : public Manifold {
 public:
  explicit EuclideanSpace(int rows, int cols = 1);

  std::string name() const override;
  int dim() const override { return rows_ * cols_; }
  int rows() const override { return rows_; }
  int cols() const override { return cols_; }

  double membership_residual(const Matrix& x) const override;
  double tangency_residual(const Matrix& x, const Matrix& v) const override;
  Matrix project_tangent(const Matrix& x, const Matrix& a) const override;
  double inner(const Matrix& x, const Matrix& u, const Matrix& v) const override;
  double dist(const Matrix& x, const Matrix& y) const override;
  Matrix random_point(Rng& rng) const override;

 protected:
  Matrix exp_impl(const Matrix& x, const Matrix& v) const override;
  Matrix log_impl(const Matrix& x, const Matrix& y) const override;

 private:
  int rows_;
  int cols_;
};

}  // namespace rsgd
