#pragma once

#include <complex>
#include <vector>

#include "mpasym/mpoly.hpp"

namespace mpasym {

/// Dense univariate polynomials; entry k multiplies x^k.
using QPolyU = std::vector<Rational>;
using CPolyU = std::vector<std::complex<double>>;

int upoly_degree(const QPolyU& p);
void upoly_trim(QPolyU& p);

Rational upoly_eval(const QPolyU& p, const Rational& x);
std::complex<double> upoly_eval(const CPolyU& p, std::complex<double> x);

QPolyU upoly_diff(const QPolyU& p);
CPolyU upoly_diff(const CPolyU& p);

/// Monic gcd over the rationals (Euclid); gcd(0,0) = 0.
QPolyU upoly_gcd(QPolyU a, QPolyU b);

CPolyU upoly_to_complex(const QPolyU& p);

/// All complex roots via the companion matrix.  Leading coefficients below
/// tol * max|coeff| are stripped first (degree drop, not spurious huge
/// roots).  Constant input yields no roots.
std::vector<std::complex<double>> upoly_roots(const CPolyU& p, double tol = 1e-13);
std::vector<std::complex<double>> upoly_roots(const QPolyU& p, double tol = 1e-13);

/// Newton iteration from x0; returns the refined root (best residual seen).
std::complex<double> newton_refine(const CPolyU& p, std::complex<double> x0, int iters = 50);

/// Numeric restriction z -> p(prefix, z) to the last variable.
CPolyU restrict_last_complex(const RPoly& p, const std::vector<std::complex<double>>& prefix);

/// Exact resultant of two bivariate polynomials with respect to the
/// eliminated variable; the result is univariate in the other variable.
/// Computed by evaluating the Sylvester determinant at enough rational
/// sample points and interpolating.  Zero iff the inputs share a factor
/// involving the eliminated variable.
QPolyU resultant_bivariate(const RPoly& a, const RPoly& b, int elim_var);

/// Exact determinant by rational Gaussian elimination.
Rational rational_determinant(std::vector<std::vector<Rational>> m);

}  // namespace mpasym
