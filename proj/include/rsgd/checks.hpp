#pragma once

#include <functional>
#include <string>
#include <vector>

#include "rsgd/manifold.hpp"

namespace rsgd {

using ScalarField = std::function<double(const Matrix&)>;
using GradientField = std::function<Matrix(const Matrix&)>;

// Compares <v, grad_f(x)>_g against a central finite difference of
// t -> f(exp_x(t v)) for random unit tangents v; returns the worst
// relative error. The derivative is taken along geodesics because that is
// how the Riemannian gradient is defined.
double check_gradient(const Manifold& m, const ScalarField& f,
                      const GradientField& grad_f, const Matrix& x,
                      int directions, Rng& rng, double step = 1e-5);

// Ratios d(R_x(t v), exp_x(t v)) / t^2 for each step size t. A bounded
// sequence as t -> 0 certifies first-order agreement of the retraction
// with the exponential map.
std::vector<double> check_retraction_order(const Manifold& m, const Matrix& x,
                                           const Matrix& v,
                                           const std::vector<double>& steps);

// One validation over seeded random cases: metric axioms, exp/log
// roundtrip, norm-distance consistency, triangle inequality, gradient
// check of half-squared-distance cost functions, retraction-order
// boundedness, tangent projection idempotence.
struct CheckResult {
  std::string manifold;
  std::string check;
  bool pass = false;
  double worst = 0.0;   // worst observed residual/error
  double budget = 0.0;  // tolerance it was compared against
};

struct SuiteTolerances {
  double metric_symmetry = 1e-9;
  double exp_log_roundtrip = 1e-8;
  double norm_dist = 1e-8;
  double triangle = 1e-9;
  double gradient_rel = 1e-4;
  double projection_idempotence = 1e-12;
  double retraction_ratio_growth = 4.0;  // allowed growth of d/t^2 toward t->0
};

// Runs the full suite on one geometry. `grad_test` supplies the cost and
// gradient used for the gradient check; when absent the half-squared
// distance to a random target is used (grad = -log_x(target)).
struct GradTestFn {
  ScalarField f;
  GradientField grad;
};
std::vector<CheckResult> run_geometry_suite(const Manifold& m, int cases, Rng& rng,
                                            const SuiteTolerances& tol = {});

// Suites for every shipped geometry (the `check` CLI subcommand and the
// validation harness share this).
std::vector<CheckResult> run_all_geometry_suites(int cases, unsigned long long seed,
                                                 const SuiteTolerances& tol = {});

}  // namespace rsgd
