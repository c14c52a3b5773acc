#pragma once

#include "rsgd/manifold.hpp"

namespace rsgd {

// Cone of symmetric positive definite n x n matrices with the Fisher
// information (affine-invariant) metric
//   <X1, X2>_P = tr(X1 P^{-1} X2 P^{-1}).
// Tangent vectors are symmetric matrices. Hadamard manifold; exp/log are
// global. Results of composite operations are re-symmetrized.
class SpdCone final : public Manifold {
 public:
  explicit SpdCone(int n);

  std::string name() const override { return "spd(" + std::to_string(n_) + ")"; }
  int dim() const override { return n_ * (n_ + 1) / 2; }
  int rows() const override { return n_; }
  int cols() const override { return n_; }

  double membership_residual(const Matrix& p) const override;
  double tangency_residual(const Matrix& p, const Matrix& v) const override;
  Matrix project_tangent(const Matrix& p, const Matrix& a) const override;
  double inner(const Matrix& p, const Matrix& u, const Matrix& v) const override;
  double dist(const Matrix& p, const Matrix& q) const override;
  Matrix random_point(Rng& rng) const override;

 protected:
  Matrix exp_impl(const Matrix& p, const Matrix& v) const override;
  Matrix log_impl(const Matrix& p, const Matrix& q) const override;

 private:
  int n_;
};

// exp_P(X) = P^{1/2} expm(P^{-1/2} X P^{-1/2}) P^{1/2}
Matrix spd_exp(const Matrix& p, const Matrix& x);
// log_P(Q) = P^{1/2} logm(P^{-1/2} Q P^{-1/2}) P^{1/2}
Matrix spd_log(const Matrix& p, const Matrix& q);
// Point at fraction gamma along the geodesic from P to Q,
// exp_P(gamma log_P(Q)) = P^{1/2} (P^{-1/2} Q P^{-1/2})^gamma P^{1/2}.
Matrix spd_geodesic(const Matrix& p, const Matrix& q, double gamma);
// d(P, Q) = sqrt(sum_k log^2 lambda_k(P Q^{-1})); congruence-invariant.
double spd_dist(const Matrix& p, const Matrix& q);

// KL(N(0,P) || N(0,Q)) = (tr(Q^{-1}P) - n + log det Q - log det P) / 2,
// computed from the generalized eigenvalues of the (P, Q) pencil so that
// tiny divergences keep full relative accuracy.
double kl_gaussian(const Matrix& p, const Matrix& q);

}  // namespace rsgd
