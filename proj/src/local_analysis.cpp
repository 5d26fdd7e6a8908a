#include "mpasym/local_analysis.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "mpasym/univariate.hpp"

namespace mpasym {

Eigen::MatrixXcd QMatrix::entries() const {
  Eigen::MatrixXcd m(dim(), dim());
  for (int k = 0; k < dim(); ++k)
    for (int l = 0; l < dim(); ++l)
      m(k, l) = std::complex<double>(to_double(exact[size_t(k)][size_t(l)]), 0.0);
  return m;
}

Rational QMatrix::det_exact() const {
  std::vector<std::vector<Rational>> m = exact;
  return rational_determinant(std::move(m));
}

QMatrix q_matrix(const std::vector<SheetJet>& sheets, const std::vector<Rational>& alpha,
                 const PointSpec& point) {
  const int d = point.dim() - 1;
  if (alpha.size() != sheets.size())
    throw std::invalid_argument("q_matrix: alpha size does not match sheet count");
  const Rational vstar = Rational(1) / point.coordinates.back();

  // first derivative of g_j at 0 is i * z*_k dv_j/dz_k; second is
  // -z*_k z*_l d2v_j - delta_{kl} z*_k dv_j.  Convex-combine over alpha.
  std::vector<Rational> w1(size_t(d), Rational(0));
  std::vector<std::vector<Rational>> w2(size_t(d), std::vector<Rational>(size_t(d), Rational(0)));
  for (size_t j = 0; j < sheets.size(); ++j) {
    const SheetJet& s = sheets[j];
    for (int k = 0; k < d; ++k) {
      const Rational& zk = point.coordinates[size_t(k)];
      w1[size_t(k)] += alpha[j] * zk * s.grad_v[size_t(k)];
      for (int l = 0; l < d; ++l) {
        const Rational& zl = point.coordinates[size_t(l)];
        Rational term = -zk * zl * s.hess_v[size_t(k)][size_t(l)];
        if (k == l) term -= zk * s.grad_v[size_t(k)];
        w2[size_t(k)][size_t(l)] += alpha[j] * term;
      }
    }
  }
  QMatrix Q;
  Q.exact.assign(size_t(d), std::vector<Rational>(size_t(d), Rational(0)));
  for (int k = 0; k < d; ++k)
    for (int l = 0; l < d; ++l)
      Q.exact[size_t(k)][size_t(l)] =
          -w2[size_t(k)][size_t(l)] / vstar - w1[size_t(k)] * w1[size_t(l)] / (vstar * vstar);
  return Q;
}

Eigen::MatrixXcd m_matrix(const QMatrix& Q, const ProjectedMatrix& P) {
  const int rho = P.rho, d = Q.dim();
  if (P.cbar.cols() != d) throw std::invalid_argument("m_matrix: dimension mismatch");
  Eigen::MatrixXcd M = Eigen::MatrixXcd::Zero(rho + d, rho + d);
  const std::complex<double> minus_i(0.0, -1.0);
  for (int i = 0; i < rho; ++i)
    for (int k = 0; k < d; ++k) {
      M(i, rho + k) = minus_i * P.cbar(i, k);
      M(rho + k, i) = minus_i * P.cbar(i, k);
    }
  M.block(rho, rho, d, d) = Q.entries();
  return M;
}

SqrtDet sqrt_det(const Eigen::MatrixXcd& M) {
  if (M.rows() == 0) return {std::complex<double>(1, 0), std::complex<double>(1, 0)};
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(M, false);
  SqrtDet out{std::complex<double>(1, 0), std::complex<double>(1, 0)};
  double lmax = 0;
  for (int i = 0; i < es.eigenvalues().size(); ++i)
    lmax = std::max(lmax, std::abs(es.eigenvalues()(i)));
  if (lmax == 0) throw std::domain_error("sqrt_det: singular matrix");
  for (int i = 0; i < es.eigenvalues().size(); ++i) {
    std::complex<double> lam = es.eigenvalues()(i);
    if (std::abs(lam) < 1e-12 * lmax) throw std::domain_error("sqrt_det: singular matrix");
    out.value *= std::sqrt(lam);  // principal branch
    out.det *= lam;
  }
  return out;
}

std::complex<double> simplex_quadrature(
    const std::function<std::complex<double>(const std::vector<double>&)>& f, int n, int level) {
  if (n < 0) throw std::invalid_argument("simplex_quadrature: negative dimension");
  if (n == 0) return f({1.0});
  long k = std::max<long>(2, std::llround(std::pow(4.0, double(level) / double(n))));
  std::vector<long> idx(size_t(n), 0);
  std::vector<double> u(size_t(n), 0.0), alpha(size_t(n) + 1, 0.0);
  std::complex<double> acc = 0;
  long cells = 0;
  for (;;) {
    for (int i = 0; i < n; ++i) u[size_t(i)] = (double(idx[size_t(i)]) + 0.5) / double(k);
    std::sort(u.begin(), u.end(), std::greater<double>());
    alpha[0] = 1.0 - u[0];
    for (int i = 0; i + 1 < n; ++i) alpha[size_t(i) + 1] = u[size_t(i)] - u[size_t(i) + 1];
    alpha[size_t(n)] = u[size_t(n) - 1];
    acc += f(alpha);
    ++cells;
    int i = n - 1;
    while (i >= 0) {
      if (++idx[size_t(i)] < k) break;
      idx[size_t(i)] = 0;
      --i;
    }
    if (i < 0) break;
  }
  return acc / double(cells);
}

}  // namespace mpasym
