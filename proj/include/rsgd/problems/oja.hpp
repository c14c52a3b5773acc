#pragma once

#include "rsgd/grassmann.hpp"
#include "rsgd/problem.hpp"

namespace rsgd {

// Online dominant-subspace tracking: minimize C(W) = -tr(W^T A W)/2 over
// the Grassmann manifold from a stream of inputs z with E[z z^T] = A.
// Inputs are z = A^{1/2} u with u uniform on a centered cube (unit
// component variance), clipped to a norm bound so gradients stay bounded;
// the default bound 10 sqrt(tr A) never binds for the cube law, keeping
// E[z z^T] = A exact.
struct OjaProblem {
  Matrix covariance;       // A
  Matrix covariance_sqrt;  // A^{1/2}
  Matrix dominant_basis;   // top-r eigenbasis of A (n x r)
  double input_bound = 0.0;
  Grassmann manifold;

  // A = Q diag(spectrum) Q^T with a seeded random orthogonal basis.
  static OjaProblem with_spectrum(const Vector& spectrum, int r, Rng& rng,
                                  double bound_factor = 10.0);

  Vector sample_input(Rng& rng) const;
  Matrix random_start(Rng& rng) const;  // uniform Stiefel point (QR of Gaussian)
  Problem problem() const;              // manifold pointer refers to this object
};

// Ascent direction on tr(W^T z z^T W)/2: (I - W W^T) z z^T W. The gradient
// of the loss -|W^T z|^2/2 is its negative.
Matrix oja_grad(const Vector& z, const Matrix& w);

// |A W - W W^T A W|_F: zero exactly when span(W) is A-invariant.
double oja_stationarity_residual(const Matrix& w, const Matrix& a);

// Largest principal angle between span(W) and span(V), in [0, pi/2].
double subspace_angle(const Matrix& w, const Matrix& v);

}  // namespace rsgd
