#pragma once

#include <limits>
#include <string>

#include "rsgd/errors.hpp"
#include "rsgd/linalg.hpp"

namespace rsgd {

// Common interface of all geometries. Points and tangent vectors are plain
// Eigen matrices in the manifold's coordinate shape (vectors are n x 1);
// each geometry defines the membership and tangency residuals that make
// them valid.
//
// All operations are pure functions of their inputs and safe to call
// concurrently; RNG streams are always passed explicitly.
class Manifold {
 public:
  virtual ~Manifold() = default;

  virtual std::string name() const = 0;
  virtual int dim() const = 0;  // intrinsic dimension
  virtual int rows() const = 0;
  virtual int cols() const = 0;

  // 0 means exactly on the manifold / exactly tangent. Residuals are
  // scale-relative where the coordinates are not normalized.
  virtual double membership_residual(const Matrix& x) const = 0;
  virtual double tangency_residual(const Matrix& x, const Matrix& v) const = 0;

  bool contains(const Matrix& x, double tol = kMembershipTol) const {
    return has_shape(x) && membership_residual(x) <= tol;
  }
  bool is_tangent(const Matrix& x, const Matrix& v,
                  double tol = kTangencyTol) const {
    return has_shape(v) && tangency_residual(x, v) <= tol;
  }

  virtual Matrix project_tangent(const Matrix& x, const Matrix& a) const = 0;
  virtual double inner(const Matrix& x, const Matrix& u, const Matrix& v) const = 0;
  double norm(const Matrix& x, const Matrix& v) const;

  // Geodesic step from x with initial velocity v. Rejects vectors that are
  // not tangent (residual above kTangencyReject) and steps beyond the
  // injectivity radius where the geometry has a finite one.
  Matrix exp(const Matrix& x, const Matrix& v) const;

  // Inverse of exp where defined; check log_defined first for points that
  // may sit at or beyond the cut locus.
  Matrix log(const Matrix& x, const Matrix& y) const;
  virtual bool log_defined(const Matrix& x, const Matrix& y) const;

  // First-order approximation of exp; defaults to exp itself.
  Matrix retract(const Matrix& x, const Matrix& v) const;

  virtual double dist(const Matrix& x, const Matrix& y) const = 0;

  virtual double injectivity_radius(const Matrix& x) const {
    (void)x;
    return std::numeric_limits<double>::infinity();
  }

  virtual Matrix random_point(Rng& rng) const = 0;
  // Ambient Gaussian, projected to the tangent space at x, normalized to
  // unit Riemannian norm.
  Matrix random_tangent(const Matrix& x, Rng& rng) const;

  static constexpr double kMembershipTol = 1e-9;
  static constexpr double kTangencyTol = 1e-9;
  static constexpr double kTangencyReject = 1e-6;

 protected:
  virtual Matrix exp_impl(const Matrix& x, const Matrix& v) const = 0;
  virtual Matrix log_impl(const Matrix& x, const Matrix& y) const = 0;
  virtual Matrix retract_impl(const Matrix& x, const Matrix& v) const {
    return exp_impl(x, v);
  }

  bool has_shape(const Matrix& m) const {
    return m.rows() == rows() && m.cols() == cols();
  }
  void require_shape(const Matrix& m, const char* what) const;
  void require_tangent(const Matrix& x, const Matrix& v, const char* what) const;
};

}  // namespace rsgd
