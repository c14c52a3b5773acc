#include "rsgd/checks.hpp"

#include <algorithm>
#include <cmath>
#include <memory>

#include "rsgd/euclidean.hpp"
#include "rsgd/grassmann.hpp"
#include "rsgd/poincare_disk.hpp"
#include "rsgd/psd_fixed_rank.hpp"
#include "rsgd/sphere.hpp"
#include "rsgd/spd_cone.hpp"

namespace rsgd {

double check_gradient(const Manifold& m, const ScalarField& f,
                      const GradientField& grad_f, const Matrix& x,
                      int directions, Rng& rng, double step) {
  const Matrix g = grad_f(x);
  double worst = 0.0;
  for (int k = 0; k < directions; ++k) {
    Matrix v = m.random_tangent(x, rng);
    const double fd =
        (f(m.exp(x, step * v)) - f(m.exp(x, -step * v))) / (2.0 * step);
    const double an = m.inner(x, v, g);
    const double denom = std::max({std::abs(fd), std::abs(an), 1e-8});
    worst = std::max(worst, std::abs(fd - an) / denom);
  }
  return worst;
}

std::vector<double> check_retraction_order(const Manifold& m, const Matrix& x,
                                           const Matrix& v,
                                           const std::vector<double>& steps) {
  std::vector<double> ratios;
  ratios.reserve(steps.size());
  for (double t : steps) {
    const double d = m.dist(m.retract(x, t * v), m.exp(x, t * v));
    ratios.push_back(d / (t * t));
  }
  return ratios;
}

namespace {

struct Accumulator {
  double worst = 0.0;
  bool ok = true;
  void observe(double value, double budget) {
    worst = std::max(worst, value);
    if (!(value <= budget)) ok = false;
  }
};

// Target point for exp/log roundtrips, kept inside the injectivity radius
// and clear of rank-collapse boundaries (retries with shrinking radius).
Matrix sample_target(const Manifold& m, const Matrix& x, Rng& rng) {
  double radius = std::min(1.5, 0.8 * m.injectivity_radius(x));
  std::uniform_real_distribution<double> unif(0.2, 1.0);
  double scale = radius * unif(rng);
  for (int attempt = 0; attempt < 8; ++attempt) {
    try {
      return m.exp(x, scale * m.random_tangent(x, rng));
    } catch (const GeometryError&) {
      scale *= 0.5;
    }
  }
  return x;
}

}  // namespace

std::vector<CheckResult> run_geometry_suite(const Manifold& m, int cases, Rng& rng,
                                            const SuiteTolerances& tol) {
  Accumulator metric, roundtrip, norm_dist, triangle, dist_axioms, gradient,
      retraction, projection;

  const std::vector<double> steps = {1e-1, 1e-2, 1e-3};
  for (int c = 0; c < cases; ++c) {
    const Matrix x = m.random_point(rng);
    const Matrix y = sample_target(m, x, rng);
    const Matrix z = sample_target(m, x, rng);

    // metric axioms on random tangent pairs
    {
      Matrix u = m.random_tangent(x, rng);
      Matrix w = m.random_tangent(x, rng);
      metric.observe(std::abs(m.inner(x, u, w) - m.inner(x, w, u)),
                     tol.metric_symmetry);
      const double uu = m.inner(x, u, u);
      metric.observe(uu > 0.0 ? 0.0 : 1.0, tol.metric_symmetry);
      const double lin = std::abs(m.inner(x, 2.5 * u + w, w) -
                                  (2.5 * m.inner(x, u, w) + m.inner(x, w, w)));
      metric.observe(lin / std::max(1.0, std::abs(m.inner(x, w, w))),
                     tol.metric_symmetry);
    }

    // exp/log inversion and norm-distance consistency
    {
      Matrix v = m.log(x, y);
      roundtrip.observe(m.dist(m.exp(x, v), y), tol.exp_log_roundtrip);
      norm_dist.observe(std::abs(m.norm(x, v) - m.dist(x, y)), tol.norm_dist);
    }

    // distance axioms
    {
      dist_axioms.observe(std::abs(m.dist(x, y) - m.dist(y, x)), tol.triangle);
      dist_axioms.observe(m.dist(x, x), tol.triangle);
      triangle.observe(m.dist(x, z) - (m.dist(x, y) + m.dist(y, z)), tol.triangle);
    }

    // gradient of the half-squared distance to y: grad f(x) = -log_x(y)
    {
      auto f = [&](const Matrix& w) {
        const double d = m.dist(y, w);
        return 0.5 * d * d;
      };
      auto grad = [&](const Matrix& w) -> Matrix { return -m.log(w, y); };
      gradient.observe(check_gradient(m, f, grad, x, 3, rng), tol.gradient_rel);
    }

    // retraction-order boundedness
    {
      Matrix v = m.random_tangent(x, rng);
      std::vector<double> ratios = check_retraction_order(m, x, v, steps);
      bool finite = true;
      for (double r : ratios) finite = finite && std::isfinite(r);
      // the absolute floor absorbs distance rounding noise amplified by
      // 1/t^2 when the retraction coincides with exp
      const double allowed =
          std::max(tol.retraction_ratio_growth * ratios.front(), 1e-5);
      retraction.observe(finite ? ratios.back() : 1e300, allowed);
    }

    // tangent projection: idempotent, complement g-orthogonal to tangents
    {
      Matrix a = random_gaussian(m.rows(), m.cols(), rng);
      Matrix p1 = m.project_tangent(x, a);
      Matrix p2 = m.project_tangent(x, p1);
      projection.observe((p2 - p1).norm() / std::max(1.0, p1.norm()),
                         tol.projection_idempotence);
      Matrix t = m.random_tangent(x, rng);
      projection.observe(std::abs(m.inner(x, a - p1, t)) / std::max(1.0, a.norm()),
                         1e-9);
    }
  }

  auto result = [&](const char* check, const Accumulator& acc, double budget) {
    return CheckResult{m.name(), check, acc.ok, acc.worst, budget};
  };
  return {
      result("metric-axioms", metric, tol.metric_symmetry),
      result("exp-log-roundtrip", roundtrip, tol.exp_log_roundtrip),
      result("norm-dist-consistency", norm_dist, tol.norm_dist),
      result("dist-symmetry-zero", dist_axioms, tol.triangle),
      result("triangle-inequality", triangle, tol.triangle),
      result("gradient-check", gradient, tol.gradient_rel),
      result("retraction-order", retraction, tol.retraction_ratio_growth),
      result("tangent-projection", projection, tol.projection_idempotence),
  };
}

std::vector<CheckResult> run_all_geometry_suites(int cases, unsigned long long seed,
                                                 const SuiteTolerances& tol) {
  std::vector<std::unique_ptr<Manifold>> geometries;
  geometries.push_back(std::make_unique<EuclideanSpace>(4));
  geometries.push_back(std::make_unique<Sphere>(5));
  geometries.push_back(std::make_unique<Grassmann>(6, 2));
  geometries.push_back(std::make_unique<PoincareDisk>());
  geometries.push_back(std::make_unique<FixedRankPsdQuotient>(5, 2));
  geometries.push_back(std::make_unique<SpdCone>(4));

  std::vector<CheckResult> all;
  unsigned long long k = 0;
  for (const auto& m : geometries) {
    Rng rng(seed + 1000 * k++);
    auto results = run_geometry_suite(*m, cases, rng, tol);
    all.insert(all.end(), results.begin(), results.end());
  }
  return all;
}

}  // namespace rsgd
