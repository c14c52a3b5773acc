#include "rsgd/problems/karcher.hpp"

#include <cmath>

namespace rsgd {

KarcherDiskProblem KarcherDiskProblem::from_points(std::vector<Matrix> points,
                                                   double s_margin) {
  if (points.empty())
    throw std::invalid_argument("KarcherDiskProblem: need at least one point");
  if (s_margin <= 0.0)
    throw std::invalid_argument("KarcherDiskProblem: s_margin must be > 0");
  Matrix origin = Matrix::Zero(2, 1);
  double max_sq = 0.0;
  for (const Matrix& z : points) {
    const double d = disk_distance(origin, z);
    max_sq = std::max(max_sq, d * d);
  }
  KarcherDiskProblem p;
  p.data = std::move(points);
  p.s = (1.0 + s_margin) * std::max(max_sq, 1e-6);
  return p;
}

KarcherDiskProblem KarcherDiskProblem::random(int n_points, double radius, Rng& rng,
                                              double s_margin) {
  if (radius <= 0.0 || radius >= 1.0)
    throw std::invalid_argument("KarcherDiskProblem: radius must be in (0, 1)");
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  std::vector<Matrix> points;
  points.reserve(n_points);
  for (int i = 0; i < n_points; ++i) {
    const double r = radius * std::sqrt(unif(rng));
    const double phi = 2.0 * 3.14159265358979323846 * unif(rng);
    Matrix z(2, 1);
    z << r * std::cos(phi), r * std::sin(phi);
    points.push_back(z);
  }
  return from_points(std::move(points), s_margin);
}

double KarcherDiskProblem::batch_cost(const Matrix& w) const {
  double sum = 0.0;
  for (const Matrix& z : data) {
    const double d = disk_distance(w, z);
    sum += d * d;
  }
  return sum / (2.0 * static_cast<double>(data.size()));
}

Matrix KarcherDiskProblem::batch_grad(const Matrix& w) const {
  Matrix g = Matrix::Zero(2, 1);
  for (const Matrix& z : data) g += karcher_grad(z, w);
  return g / static_cast<double>(data.size());
}

Problem KarcherDiskProblem::problem() const {
  Problem p;
  p.manifold = &manifold;
  p.sample = [this](Rng& rng) {
    std::uniform_int_distribution<size_t> pick(0, data.size() - 1);
    return Sample{data[pick(rng)].col(0), 0.0};
  };
  p.loss = [](const Sample& z, const Matrix& w) {
    const double d = disk_distance(z.x, w);
    return 0.5 * d * d;
  };
  p.grad = [](const Sample& z, const Matrix& w) -> Matrix {
    return karcher_grad(z.x, w);
  };
  p.adaptive_f = [this](const Matrix& w) { return karcher_f(w, s); };
  p.batch_cost = [this](const Matrix& w) { return batch_cost(w); };
  return p;
}

Matrix karcher_grad(const Matrix& z, const Matrix& w) {
  const double d = disk_distance(z, w);
  if (d == 0.0) return Matrix::Zero(2, 1);
  // Euclidean direction (1-|w|^2)(w-z) + |w-z|^2 w; the gradient is this
  // unit direction scaled so its Riemannian norm equals d, i.e. by
  // d (1-|w|^2)/2 in disk coordinates.
  Matrix n = (1.0 - w.squaredNorm()) * (w - z) + (w - z).squaredNorm() * w;
  const double nn = n.norm();
  if (nn < 1e-300) return Matrix::Zero(2, 1);
  return (d * 0.5 * (1.0 - w.squaredNorm()) / nn) * n;
}

double karcher_f(const Matrix& w, double s) {
  if (s <= 0.0) throw std::invalid_argument("karcher_f: s must be > 0");
  const double d0 = disk_distance(Matrix::Zero(2, 1), w);
  const double alpha = d0 + std::sqrt(s);
  const double f_sq = std::max(
      {1.0, alpha * alpha * (1.0 + d0 + alpha),
       (2.0 * alpha * d0 + alpha * alpha) * (2.0 * alpha * d0 + alpha * alpha)});
  return std::sqrt(f_sq);
}

Matrix karcher_batch_mean(const std::vector<Matrix>& points, double tol,
                          int max_iters) {
  if (points.empty())
    throw std::invalid_argument("karcher_batch_mean: need at least one point");
  PoincareDisk disk;
  Matrix w = points.front();
  for (int it = 0; it < max_iters; ++it) {
    Matrix g = Matrix::Zero(2, 1);
    for (const Matrix& z : points) g += karcher_grad(z, w);
    g /= static_cast<double>(points.size());
    if (disk.norm(w, g) < tol) return w;
    w = disk_exp(w, -0.5 * g);
  }
  throw GeometryError("karcher_batch_mean: gradient descent did not reach tol");
}

}  // namespace rsgd
