#pragma once

#include <cmath>
#include <stdexcept>

namespace rsgd {

// Decreasing gain family
//   gamma_t = a / (1 + b t^{1/2+eps})          (decay form)
//   gamma_t = a / (1 + t/tau)^{1/2+eps}        (t-scaled form)
// Both satisfy sum gamma = inf, sum gamma^2 < inf for eps in (0, 1/2];
// eps = 0 is the practical default. a = 0 yields the degenerate all-zero
// schedule (useful as a no-op run).
class StepSchedule {
 public:
  static StepSchedule decay(double a, double b, double eps = 0.0) {
    return StepSchedule(a, b, 0.0, eps);
  }
  static StepSchedule t_scaled(double a, double tau, double eps = 0.0) {
    if (tau <= 0.0) throw std::invalid_argument("StepSchedule: tau must be > 0");
    return StepSchedule(a, 0.0, tau, eps);
  }
  static StepSchedule constant(double a) { return StepSchedule(a, 0.0, 0.0, 0.0); }

  double operator()(long t) const {
    const double p = 0.5 + eps_;
    if (tau_ > 0.0) return a_ / std::pow(1.0 + static_cast<double>(t) / tau_, p);
    return a_ / (1.0 + b_ * std::pow(static_cast<double>(t), p));
  }

  double initial_gain() const { return a_; }
  double decay_coefficient() const { return b_; }
  double exponent_offset() const { return eps_; }
  double t_scale() const { return tau_; }

 private:
  StepSchedule(double a, double b, double tau, double eps)
      : a_(a), b_(b), tau_(tau), eps_(eps) {
    if (a < 0.0) throw std::invalid_argument("StepSchedule: a must be >= 0");
    if (b < 0.0) throw std::invalid_argument("StepSchedule: b must be >= 0");
    if (eps < 0.0) throw std::invalid_argument("StepSchedule: eps must be >= 0");
  }

  double a_;
  double b_;
  double tau_;
  double eps_;
};

}  // namespace rsgd
