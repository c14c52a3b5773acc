#pragma once

#include "rsgd/manifold.hpp"

namespace rsgd {

// Grassmann manifold of r-dimensional subspaces of R^n, represented by
// Stiefel matrices W (n x r, orthonormal columns). Tangent vectors are
// horizontal representatives, i.e. W^T Delta = 0; all exposed quantities
// are invariant under W -> W O for orthogonal O. Registered retraction is
// the QR orthonormal factor of W + Delta.
class Grassmann final : public Manifold {
 public:
  Grassmann(int n, int r);

  std::string name() const override;
  int dim() const override { return r_ * (n_ - r_); }
  int rows() const override { return n_; }
  int cols() const override { return r_; }

  double membership_residual(const Matrix& w) const override;
  double tangency_residual(const Matrix& w, const Matrix& v) const override;
  Matrix project_tangent(const Matrix& w, const Matrix& a) const override;
  double inner(const Matrix& w, const Matrix& u, const Matrix& v) const override;
  double dist(const Matrix& w, const Matrix& y) const override;
  bool log_defined(const Matrix& w, const Matrix& y) const override;
  double injectivity_radius(const Matrix& w) const override;
  Matrix random_point(Rng& rng) const override;

 protected:
  Matrix exp_impl(const Matrix& w, const Matrix& v) const override;
  Matrix log_impl(const Matrix& w, const Matrix& y) const override;
  Matrix retract_impl(const Matrix& w, const Matrix& v) const override;

 private:
  int n_;
  int r_;
};

// Geodesic step from W along the horizontal direction H with gain gamma:
// with the compact SVD H = U Theta V^T, the result is
// W V cos(gamma Theta) V^T + U sin(gamma Theta) V^T. Throws when the step
// reaches the injectivity radius pi/2 in any principal direction.
Matrix grassmann_geodesic_step(const Matrix& w, const Matrix& h, double gamma);

// Orthonormal factor of QR(W + gamma * delta), R-diagonal kept positive.
Matrix qr_retract(const Matrix& w, const Matrix& delta, double gamma);

// Principal angles between span(W) and span(V), ascending, in [0, pi/2].
Vector principal_angles(const Matrix& w, const Matrix& v);

}  // namespace rsgd
