#include "rsgd/sgd.hpp"

#include <chrono>
#include <cmath>
#include <limits>

namespace rsgd {

namespace {

constexpr double kNan = std::numeric_limits<double>::quiet_NaN();
constexpr double kLossCeiling = 1e12;
constexpr double kEmaFactor = 0.99;

double adaptive_divisor(const Problem& p, const Matrix& w) {
  if (!p.adaptive_f) return 1.0;
  const double f = p.adaptive_f(w);
  if (!(f >= 1.0))
    throw std::invalid_argument("adaptive step: f(w) = " + std::to_string(f) +
                                " violates the f >= 1 contract");
  return f;
}

}  // namespace

Matrix step_exp(const Problem& p, const Matrix& w, const Sample& z, double gamma) {
  return p.manifold->exp(w, -gamma * p.grad(z, w));
}

Matrix step_retract(const Problem& p, const Matrix& w, const Sample& z, double gamma) {
  return p.manifold->retract(w, -gamma * p.grad(z, w));
}

Matrix step_adaptive(const Problem& p, const Matrix& w, const Sample& z, double gamma) {
  return p.manifold->exp(w, -(gamma / adaptive_divisor(p, w)) * p.grad(z, w));
}

RunResult run(const Problem& p, const Matrix& w0, const StepSchedule& schedule,
              long iters, UpdateRule rule, Rng& rng, int record_every) {
  if (p.manifold == nullptr || !p.sample || !p.loss || !p.grad)
    throw std::invalid_argument("run: incomplete problem definition");
  if (iters < 0) throw std::invalid_argument("run: iters must be >= 0");
  if (record_every < 1) throw std::invalid_argument("run: record_every must be >= 1");

  const auto t_start = std::chrono::steady_clock::now();
  RunResult result;
  result.w = w0;
  double grad_norm_ema = 0.0;
  double last_loss = kNan;

  auto record = [&](long iter, double gamma) {
    TrajectoryRecord rec;
    rec.iter = iter;
    rec.gamma = gamma;
    rec.loss = last_loss;
    rec.batch_cost = p.batch_cost ? p.batch_cost(result.w) : kNan;
    rec.grad_norm = grad_norm_ema;
    rec.error = p.error_metric ? p.error_metric(result.w) : kNan;
    rec.wall_time_s =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t_start)
            .count();
    result.trajectory.push_back(rec);
  };

  record(0, schedule(0));
  for (long t = 0; t < iters; ++t) {
    const double gamma = schedule(t);
    const Sample z = p.sample(rng);
    last_loss = p.loss(z, result.w);

    try {
      switch (rule) {
        case UpdateRule::Exp:
          result.w = step_exp(p, result.w, z, gamma);
          break;
        case UpdateRule::Retract:
          result.w = step_retract(p, result.w, z, gamma);
          break;
        case UpdateRule::Adaptive:
          result.w = step_adaptive(p, result.w, z, gamma);
          break;
      }
    } catch (const GeometryError& e) {
      throw DivergenceError(std::string("manifold error: ") + e.what(), t);
    }

    if (!result.w.allFinite())
      throw DivergenceError("non-finite coordinate in iterate", t);
    if (!(last_loss < kLossCeiling) || !std::isfinite(last_loss))
      throw DivergenceError("loss exceeded the divergence ceiling", t);

    grad_norm_ema = kEmaFactor * grad_norm_ema +
                    (1.0 - kEmaFactor) * p.manifold->norm(result.w, p.grad(z, result.w));

    if ((t + 1) % record_every == 0 || t + 1 == iters) record(t + 1, gamma);
  }
  return result;
}

AssumptionReport assumption_diagnostics(const Problem& p, const Matrix& v, double s,
                                        double kappa, int points, int samples,
                                        Rng& rng) {
  if (s <= 0.0) throw std::invalid_argument("assumption_diagnostics: s must be > 0");
  const Manifold& m = *p.manifold;
  AssumptionReport report;
  report.worst_inner = -std::numeric_limits<double>::infinity();
  report.min_f_margin = std::numeric_limits<double>::infinity();

  std::uniform_real_distribution<double> unif(0.8, 2.0);
  const double sqrt_s = std::sqrt(s);
  for (int k = 0; k < points; ++k) {
    const double radius = sqrt_s * unif(rng);
    Matrix w = m.exp(v, radius * m.random_tangent(v, rng));
    const double dd = m.dist(w, v);
    if (dd * dd <= s) {  // inside the ball: assumption 1 says nothing here
      ++report.skipped;
      continue;
    }
    ++report.tested;

    Matrix grad_mean = Matrix::Zero(m.rows(), m.cols());
    double m1 = 0.0, m2 = 0.0;  // the two assumption-3 moment estimates
    for (int j = 0; j < samples; ++j) {
      const Sample z = p.sample(rng);
      Matrix h = p.grad(z, w);
      grad_mean += h;
      const double hn = m.norm(w, h);
      m1 += hn * hn * (1.0 + std::sqrt(std::abs(kappa)) * (dd + hn));
      const double b = 2.0 * hn * dd + hn * hn;
      m2 += b * b;
    }
    grad_mean /= samples;
    m1 /= samples;
    m2 /= samples;

    const double inner = m.inner(w, m.log(w, v), grad_mean);
    report.worst_inner = std::max(report.worst_inner, inner);
    if (inner < 0.0) ++report.negative_inner;

    const double f = p.adaptive_f ? p.adaptive_f(w) : 1.0;
    const double margin = f * f - std::max({1.0, m1, m2});
    report.min_f_margin = std::min(report.min_f_margin, margin);
    if (margin >= 0.0) ++report.f_dominated;
  }
  return report;
}

}  // namespace rsgd
