#pragma once

#include "rsgd/manifold.hpp"

namespace rsgd {

// Open unit disk in R^2 with the hyperbolic metric
//   <u, v>_x = 4 (u . v) / (1 - |x|^2)^2
// (constant curvature -1). Hadamard manifold: exp is globally invertible.
// The boundary is at infinite distance; points are kept strictly inside
// (|x| <= 1 - 1e-12) and numerical escape raises GeometryError.
class PoincareDisk final : public Manifold {
 public:
  PoincareDisk() = default;

  std::string name() const override { return "poincare_disk"; }
  int dim() const override { return 2; }
  int rows() const override { return 2; }
  int cols() const override { return 1; }

  double membership_residual(const Matrix& x) const override;
  double tangency_residual(const Matrix& x, const Matrix& v) const override;
  Matrix project_tangent(const Matrix& x, const Matrix& a) const override;
  double inner(const Matrix& x, const Matrix& u, const Matrix& v) const override;
  double dist(const Matrix& x, const Matrix& y) const override;
  Matrix random_point(Rng& rng) const override;

  static constexpr double kBoundaryGuard = 1e-12;

 protected:
  Matrix exp_impl(const Matrix& x, const Matrix& v) const override;
  Matrix log_impl(const Matrix& x, const Matrix& y) const override;
};

// d(z, w) = acosh(1 + 2|z-w|^2 / ((1-|z|^2)(1-|w|^2))).
double disk_distance(const Matrix& z, const Matrix& w);

// Closed-form exp/log: radial geodesics at the origin (Euclidean radius
// tanh(s/2) at hyperbolic distance s), transported to a general base point
// with the Mobius isometry moving that point to 0.
Matrix disk_exp(const Matrix& x, const Matrix& v);
Matrix disk_log(const Matrix& x, const Matrix& y);

}  // namespace rsgd
