#pragma once

#include <Eigen/Dense>
#include <random>

namespace rsgd {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using Rng = std::mt19937_64;

inline Matrix sym(const Matrix& a) { return 0.5 * (a + a.transpose()); }

Matrix random_gaussian(int rows, int cols, Rng& rng);

// Matrix functions of symmetric matrices via eigendecomposition.
// spd_logm / spd_sqrtm / spd_inv_sqrtm / spd_power require a positive
// definite argument and throw GeometryError otherwise. All results are
// re-symmetrized.
Matrix spd_expm(const Matrix& s);
Matrix spd_logm(const Matrix& p);
Matrix spd_sqrtm(const Matrix& p);
Matrix spd_inv_sqrtm(const Matrix& p);
Matrix spd_power(const Matrix& p, double exponent);

double min_eigenvalue_sym(const Matrix& p);

// Orthonormal factor of a thin QR decomposition, with the sign convention
// that R has positive diagonal (makes the factor unique). Throws
// GeometryError when the input is rank deficient.
Matrix qr_orthonormal_factor(const Matrix& b);

}  // namespace rsgd
