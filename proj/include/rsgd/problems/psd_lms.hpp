#pragma once

#include <functional>

#include "rsgd/euclidean.hpp"
#include "rsgd/problem.hpp"

namespace rsgd {

// Identification of a rank-r PSD matrix V from scalar observations
// y = x^T V x with Gaussian inputs, parameterized by factors G with
// W = G G^T. The factor update is a flat step on G with the adaptive gain
// divisor f(G) = max(1, |G|_F^6); the convergence theory runs on the flat
// factor space, so the engine-facing problem lives on Euclidean(n x r).
struct PsdLmsProblem {
  int n = 0;
  int r = 0;
  Matrix v_factor;  // n x r ground-truth factor
  Matrix v;         // V = v_factor v_factor^T
  EuclideanSpace factor_space;

  static PsdLmsProblem random(int n, int r, Rng& rng);

  Sample draw(Rng& rng) const;  // x ~ N(0, I), y = x^T V x
  // Random factor scaled so |G0 G0^T|_F = |V|_F (comparable initial norms).
  Matrix initial_factor(Rng& rng) const;

  double estimation_error(const Matrix& g) const;  // |G G^T - V|_F
  // E_z (y_hat - y)^2 = 2 |M|_F^2 + tr(M)^2 with M = G G^T - V.
  double output_mse(const Matrix& g) const;

  Problem problem() const;  // manifold pointer refers to this object
};

// Gradient of the loss (|G^T x|^2 - y)^2 / 2 with respect to G:
// 2 (y_hat - y) x x^T G. Horizontal for the factor quotient by construction.
Matrix psd_grad(const Vector& x, double y, const Matrix& g);

// One stochastic factor update with adaptive gain:
// G - (gamma / max(1, |G|^6)) (|G^T x|^2 - y) x x^T G.
// Note the leading 2 of the gradient is absorbed into gamma. Throws on
// rank collapse of the result.
Matrix psd_step(const Matrix& g, const Vector& x, double y, double gamma);

// Averaged (deterministic) counterpart of psd_step for input laws with
// component moments a = E x_i^2, b = E x_i^4:
// J - (gamma / max(1, |J|^6)) U(J J^T - V) J.
Matrix psd_averaged_step(const Matrix& j, const Matrix& v, double gamma,
                         double a = 1.0, double b = 3.0);

// Projected stochastic update in the full matrix space:
// pi(P - gamma (x^T P x - y) x x^T), pi clipping negative eigenvalues to 0.
Matrix psd_naive_step(const Matrix& p, const Vector& x, double y, double gamma);

// U(M) = E_x[tr(x x^T M) x x^T] for inputs with i.i.d. components having
// moments a = E x_i^2, b = E x_i^4 (b > a^2 > 0): off-diagonal entries
// a^2 (M_ij + M_ji), diagonal entries tr(M) a^2 + M_ii (b - a^2).
Matrix u_map_closed(const Matrix& m, double a, double b);

// Monte Carlo estimate of the same map under a caller-supplied component
// law; converges to u_map_closed at the law's (a, b).
Matrix u_map_mc(const Matrix& m, const std::function<double(Rng&)>& component_law,
                long samples, Rng& rng);

}  // namespace rsgd
