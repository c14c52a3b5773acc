#pragma once

#include <vector>

#include "rsgd/problem.hpp"
#include "rsgd/schedule.hpp"

namespace rsgd {

enum class UpdateRule { Exp, Retract, Adaptive };

// Single updates. step_exp follows the geodesic, step_retract the
// registered retraction, step_adaptive divides the gain by f(w) >= 1.
Matrix step_exp(const Problem& p, const Matrix& w, const Sample& z, double gamma);
Matrix step_retract(const Problem& p, const Matrix& w, const Sample& z, double gamma);
Matrix step_adaptive(const Problem& p, const Matrix& w, const Sample& z, double gamma);

struct TrajectoryRecord {
  long iter = 0;
  double gamma = 0.0;
  double loss = 0.0;        // loss of the sample consumed by the last step
  double batch_cost = 0.0;  // NaN when the problem has no batch cost
  double grad_norm = 0.0;   // exponential moving average (factor 0.99) of |H|
  double error = 0.0;       // NaN when the problem has no error metric
  double wall_time_s = 0.0; // excluded from the determinism contract
};
using Trajectory = std::vector<TrajectoryRecord>;

struct RunResult {
  Matrix w;
  Trajectory trajectory;
};

// Runs `iters` stochastic steps from w0 with gains gamma_t = schedule(t).
// Records at iteration 0, every `record_every` iterations, and at the end.
// Deterministic given the RNG state and inputs. Throws DivergenceError when
// a coordinate turns non-finite or the loss exceeds 1e12, and propagates
// manifold errors tagged with the iteration index.
RunResult run(const Problem& p, const Matrix& w0, const StepSchedule& schedule,
              long iters, UpdateRule rule, Rng& rng, int record_every = 100);

// Empirical probe of the Hadamard-case assumptions around an attractor v:
// samples points w with D(w, v) = d^2(w, v) > s (closer draws are skipped),
// estimates the averaged gradient by Monte Carlo, and reports the sign of
// <exp_w^{-1}(v), grad C(w)> together with whether f(w)^2 dominates the
// two moment bounds (kappa is the curvature lower bound of the manifold).
struct AssumptionReport {
  int tested = 0;
  int skipped = 0;
  int negative_inner = 0;   // count with <exp_w^{-1}(v), grad C(w)> < 0
  double worst_inner = 0.0; // largest observed inner product (want < 0)
  int f_dominated = 0;      // count with f(w)^2 >= both moment estimates
  double min_f_margin = 0.0;
};
AssumptionReport assumption_diagnostics(const Problem& p, const Matrix& v, double s,
                                        double kappa, int points, int samples,
                                        Rng& rng);

}  // namespace rsgd
