#pragma once

#include <functional>

#include "rsgd/manifold.hpp"

namespace rsgd {

// One stochastic input. x carries the drawn data (input vector, data point,
// ...); y an optional scalar observation.
struct Sample {
  Vector x;
  double y = 0.0;
};

// A stochastic optimization instance: a sampler, a loss, and the Riemannian
// gradient of the loss (unbiased for the gradient of the averaged cost).
// adaptive_f, when set, must return values >= 1 and divides the gain in the
// adaptive update. batch_cost and error_metric are optional diagnostics.
struct Problem {
  const Manifold* manifold = nullptr;
  std::function<Sample(Rng&)> sample;
  std::function<double(const Sample&, const Matrix&)> loss;
  std::function<Matrix(const Sample&, const Matrix&)> grad;
  std::function<double(const Matrix&)> adaptive_f;   // optional, >= 1
  std::function<double(const Matrix&)> batch_cost;   // optional
  std::function<double(const Matrix&)> error_metric; // optional
};

}  // namespace rsgd
