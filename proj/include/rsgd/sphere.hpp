#pragma once

#include "rsgd/manifold.hpp"

namespace rsgd {

// Unit sphere S^{n-1} embedded in R^n with the induced metric. Registered
// retraction is add-then-normalize. The cut locus of x is its antipode, so
// the injectivity radius is pi.
class Sphere final : public Manifold {
 public:
  explicit Sphere(int ambient_dim);

  std::string name() const override;
  int dim() const override { return n_ - 1; }
  int rows() const override { return n_; }
  int cols() const override { return 1; }

  double membership_residual(const Matrix& x) const override;
  double tangency_residual(const Matrix& x, const Matrix& v) const override;
  Matrix project_tangent(const Matrix& x, const Matrix& a) const override;
  double inner(const Matrix& x, const Matrix& u, const Matrix& v) const override;
  double dist(const Matrix& x, const Matrix& y) const override;
  bool log_defined(const Matrix& x, const Matrix& y) const override;
  double injectivity_radius(const Matrix& x) const override;
  Matrix random_point(Rng& rng) const override;

 protected:
  Matrix exp_impl(const Matrix& x, const Matrix& v) const override;
  Matrix log_impl(const Matrix& x, const Matrix& y) const override;
  Matrix retract_impl(const Matrix& x, const Matrix& v) const override;

 private:
  int n_;
};

}  // namespace rsgd
