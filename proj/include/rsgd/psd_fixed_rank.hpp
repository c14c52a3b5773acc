#pragma once

#include "rsgd/manifold.hpp"

namespace rsgd {

// Quotient geometry of rank-r positive semi-definite n x n matrices,
// represented by full-rank factors G (n x r) with W = G G^T, metric the
// flat trace metric on factors. Factors G and G O (O orthogonal) represent
// the same point. Horizontal tangent vectors at G are the matrices Z with
// G^T Z symmetric (equivalently Z = Sym(D) G for some D); geodesics are
// straight factor lines G + t Z.
//
// Rank is monitored, not restored: a step whose result has smallest
// singular value below kRankFloor raises GeometryError, since the quotient
// geometry degenerates there.
class FixedRankPsdQuotient final : public Manifold {
 public:
  FixedRankPsdQuotient(int n, int r);

  std::string name() const override;
  int dim() const override { return n_ * r_ - r_ * (r_ - 1) / 2; }
  int rows() const override { return n_; }
  int cols() const override { return r_; }

  double membership_residual(const Matrix& g) const override;
  double tangency_residual(const Matrix& g, const Matrix& v) const override;
  Matrix project_tangent(const Matrix& g, const Matrix& a) const override;
  double inner(const Matrix& g, const Matrix& u, const Matrix& v) const override;
  double dist(const Matrix& g, const Matrix& h) const override;
  bool log_defined(const Matrix& g, const Matrix& h) const override;
  Matrix random_point(Rng& rng) const override;

  static constexpr double kRankFloor = 1e-10;

 protected:
  Matrix exp_impl(const Matrix& g, const Matrix& v) const override;
  Matrix log_impl(const Matrix& g, const Matrix& h) const override;

 private:
  int n_;
  int r_;
};

}  // namespace rsgd
