#pragma once

#include <vector>

#include "rsgd/poincare_disk.hpp"
#include "rsgd/problem.hpp"

namespace rsgd {

// Randomized Karcher (Frechet) mean on the Poincare disk: minimize
// C(w) = sum_i d^2(w, z_i) / (2N) by sampling one data point per step.
// s must strictly dominate every squared hyperbolic data radius d^2(z_i, 0);
// the adaptive gain divisor karcher_f(w, s) then certifies the
// Hadamard-case assumptions.
struct KarcherDiskProblem {
  std::vector<Matrix> data;  // 2 x 1 points, strictly interior
  double s = 0.0;
  PoincareDisk manifold;

  static KarcherDiskProblem from_points(std::vector<Matrix> points,
                                        double s_margin = 0.1);
  // n_points uniform in the Euclidean disk of the given radius.
  static KarcherDiskProblem random(int n_points, double radius, Rng& rng,
                                   double s_margin = 0.1);

  double batch_cost(const Matrix& w) const;
  Matrix batch_grad(const Matrix& w) const;
  Problem problem() const;  // manifold pointer refers to this object
};

// Riemannian gradient of w -> d^2(z, w)/2 in disk coordinates; its
// Riemannian norm equals d(z, w) and -grad points from w toward z.
Matrix karcher_grad(const Matrix& z, const Matrix& w);

// Adaptive gain divisor: with alpha = d(w,0) + sqrt(s),
// f^2 = max{1, alpha^2 (1 + d(w,0) + alpha), (2 alpha d(w,0) + alpha^2)^2}.
double karcher_f(const Matrix& w, double s);

// Batch oracle: full Riemannian gradient descent with fixed step 1/2 until
// the gradient norm drops below tol; the minimizer is unique on the disk.
Matrix karcher_batch_mean(const std::vector<Matrix>& points, double tol = 1e-10,
                          int max_iters = 10000);

}  // namespace rsgd
