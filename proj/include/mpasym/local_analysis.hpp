#pragma once

#include <Eigen/Dense>

#include <complex>
#include <functional>
#include <vector>

#include "mpasym/cone_geometry.hpp"

namespace mpasym {

/// Hessian of theta -> -log(alpha . v(z_hat* e^{i theta})) at theta = 0.
/// With rational sheet jets the entries are exactly rational (the odd
/// imaginary contributions cancel); the complex view is provided for the
/// block matrix M.
struct QMatrix {
  std::vector<std::vector<Rational>> exact;  // d x d, symmetric

  int dim() const { return int(exact.size()); }
  Eigen::MatrixXcd entries() const;
  Rational det_exact() const;
};

QMatrix q_matrix(const std::vector<SheetJet>& sheets, const std::vector<Rational>& alpha,
                 const PointSpec& point);

/// Block matrix [[0, -i cbar], [-i cbar^T, Q]] of size (rho + d).
Eigen::MatrixXcd m_matrix(const QMatrix& Q, const ProjectedMatrix& P);

struct SqrtDet {
  std::complex<double> value;  // product of principal square roots of eigenvalues
  std::complex<double> det;
};

/// Throws std::domain_error when M is singular (relative eigenvalue
/// threshold 1e-12).
SqrtDet sqrt_det(const Eigen::MatrixXcd& M);

/// Midpoint quadrature of f over the standard n-simplex with respect to
/// the normalized measure (total mass 1).  Cube points are mapped to the
/// simplex by sorting; roughly 4^level cells in total across dimensions.
std::complex<double> simplex_quadrature(
    const std::function<std::complex<double>(const std::vector<double>&)>& f, int n, int level);

}  // namespace mpasym
