#include "rsgd/problems/psd_lms.hpp"

#include <cmath>

#include "rsgd/linalg.hpp"

namespace rsgd {

namespace {

double factor_gain_divisor(const Matrix& g) {
  const double n = g.norm();
  return std::max(1.0, n * n * n * n * n * n);
}

}  // namespace

PsdLmsProblem PsdLmsProblem::random(int n, int r, Rng& rng) {
  if (r < 1 || r > n) throw std::invalid_argument("PsdLmsProblem: need 1 <= r <= n");
  Matrix vf = random_gaussian(n, r, rng);
  PsdLmsProblem p{.n = n,
                  .r = r,
                  .v_factor = vf,
                  .v = vf * vf.transpose(),
                  .factor_space = EuclideanSpace(n, r)};
  return p;
}

Sample PsdLmsProblem::draw(Rng& rng) const {
  Vector x = random_gaussian(n, 1, rng).col(0);
  return Sample{x, x.dot(v * x)};
}

Matrix PsdLmsProblem::initial_factor(Rng& rng) const {
  Matrix g = random_gaussian(n, r, rng);
  const double target = v.norm();
  const double current = (g * g.transpose()).norm();
  return g * std::sqrt(target / current);
}

double PsdLmsProblem::estimation_error(const Matrix& g) const {
  return (g * g.transpose() - v).norm();
}

double PsdLmsProblem::output_mse(const Matrix& g) const {
  Matrix m = g * g.transpose() - v;
  const double tr = m.trace();
  return 2.0 * m.squaredNorm() + tr * tr;
}

Problem PsdLmsProblem::problem() const {
  Problem p;
  p.manifold = &factor_space;
  p.sample = [this](Rng& rng) { return draw(rng); };
  p.loss = [](const Sample& z, const Matrix& g) {
    const double residual = (g.transpose() * z.x).squaredNorm() - z.y;
    return 0.5 * residual * residual;
  };
  p.grad = [](const Sample& z, const Matrix& g) -> Matrix {
    return psd_grad(z.x, z.y, g);
  };
  p.adaptive_f = [](const Matrix& g) { return factor_gain_divisor(g); };
  p.batch_cost = [this](const Matrix& g) { return 0.5 * output_mse(g); };
  p.error_metric = [this](const Matrix& g) { return estimation_error(g); };
  return p;
}

Matrix psd_grad(const Vector& x, double y, const Matrix& g) {
  const double residual = (g.transpose() * x).squaredNorm() - y;
  return 2.0 * residual * (x * (x.transpose() * g));
}

Matrix psd_step(const Matrix& g, const Vector& x, double y, double gamma) {
  const double residual = (g.transpose() * x).squaredNorm() - y;
  const double gain = gamma / factor_gain_divisor(g);
  Matrix next = g - gain * residual * (x * (x.transpose() * g));
  Eigen::JacobiSVD<Matrix> svd(next);
  if (svd.singularValues().minCoeff() <= 1e-10)
    throw GeometryError("psd_step: rank collapse of the factor");
  return next;
}

Matrix psd_averaged_step(const Matrix& j, const Matrix& v, double gamma, double a,
                         double b) {
  const double gain = gamma / factor_gain_divisor(j);
  return j - gain * (u_map_closed(j * j.transpose() - v, a, b) * j);
}

Matrix psd_naive_step(const Matrix& p, const Vector& x, double y, double gamma) {
  const double residual = x.dot(p * x) - y;
  Matrix stepped = sym(p - gamma * residual * (x * x.transpose()));
  Eigen::SelfAdjointEigenSolver<Matrix> es(stepped);
  if (es.info() != Eigen::Success)
    throw GeometryError("psd_naive_step: eigendecomposition failed");
  Vector lam = es.eigenvalues().cwiseMax(0.0);
  return sym(es.eigenvectors() * lam.asDiagonal() * es.eigenvectors().transpose());
}

Matrix u_map_closed(const Matrix& m, double a, double b) {
  if (!(b > a * a) || !(a > 0.0))
    throw std::invalid_argument("u_map_closed: need b > a^2 > 0");
  if (m.rows() != m.cols())
    throw std::invalid_argument("u_map_closed: M must be square");
  const int n = static_cast<int>(m.rows());
  const double tr = m.trace();
  Matrix u(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j)
        u(i, j) = tr * a * a + m(i, i) * (b - a * a);
      else
        u(i, j) = a * a * (m(i, j) + m(j, i));
    }
  }
  return u;
}

Matrix u_map_mc(const Matrix& m, const std::function<double(Rng&)>& component_law,
                long samples, Rng& rng) {
  if (samples < 1) throw std::invalid_argument("u_map_mc: samples must be >= 1");
  const int n = static_cast<int>(m.rows());
  Matrix acc = Matrix::Zero(n, n);
  Vector x(n);
  for (long k = 0; k < samples; ++k) {
    for (int i = 0; i < n; ++i) x(i) = component_law(rng);
    acc += x.dot(m * x) * (x * x.transpose());
  }
  return acc / static_cast<double>(samples);
}

}  // namespace rsgd
