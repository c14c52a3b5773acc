#include "rsgd/manifold.hpp"

#include <cmath>

namespace rsgd {

double Manifold::norm(const Matrix& x, const Matrix& v) const {
  return std::sqrt(std::max(0.0, inner(x, v, v)));
}

Matrix Manifold::exp(const Matrix& x, const Matrix& v) const {
  require_shape(x, "exp: point");
  require_tangent(x, v, "exp");
  return exp_impl(x, v);
}

Matrix Manifold::log(const Matrix& x, const Matrix& y) const {
  require_shape(x, "log: base point");
  require_shape(y, "log: target point");
  if (!log_defined(x, y))
    throw GeometryError(name() + ": log undefined (target at or beyond the cut locus)");
  return log_impl(x, y);
}

bool Manifold::log_defined(const Matrix& x, const Matrix& y) const {
  (void)x;
  (void)y;
  return true;
}

Matrix Manifold::retract(const Matrix& x, const Matrix& v) const {
  require_shape(x, "retract: point");
  require_tangent(x, v, "retract");
  return retract_impl(x, v);
}

Matrix Manifold::random_tangent(const Matrix& x, Rng& rng) const {
  for (int attempt = 0; attempt < 16; ++attempt) {
    Matrix v = project_tangent(x, random_gaussian(rows(), cols(), rng));
    const double n = norm(x, v);
    if (n > 1e-12) return v / n;
  }
  throw GeometryError(name() + ": could not sample a unit tangent vector");
}

void Manifold::require_shape(const Matrix& m, const char* what) const {
  if (!has_shape(m))
    throw std::invalid_argument(name() + ": " + what + " has shape " +
                                std::to_string(m.rows()) + "x" +
                                std::to_string(m.cols()) + ", expected " +
                                std::to_string(rows()) + "x" + std::to_string(cols()));
}

void Manifold::require_tangent(const Matrix& x, const Matrix& v,
                               const char* what) const {
  require_shape(v, "tangent vector");
  const double residual = tangency_residual(x, v);
  if (!(residual <= kTangencyReject))
    throw GeometryError(name() + ": " + what + " rejected non-tangent vector (residual " +
                        std::to_string(residual) + ")");
}

}  // namespace rsgd
