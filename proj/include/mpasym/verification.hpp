#pragma once

#include <complex>
#include <string>
#include <vector>

#include "mpasym/asymptotics.hpp"
#include "mpasym/series_table.hpp"
#include "mpasym/univariate.hpp"

namespace mpasym {

struct ComparisonRow {
  std::vector<long> r;
  Rational oracle;
  double predicted = 0;
  double abs_err = 0;
  double rel_err = 0;
};

struct FitSummary {
  std::string model;  // "log-linear" (constant predictions) or "power-law"
  double slope = 0;
  double residual = 0;
};

struct ComparisonTable {
  std::vector<ComparisonRow> rows;
  FitSummary fit;
};

/// Exact oracle values along r = round(scale * direction) against the
/// engine prediction.  Constant predictions get a log-error fit versus
/// |r| (negative slope = exponential decay); power predictions get a
/// log-log fit of the normalized coefficient versus s.  Fits use the last
/// half of the rows.
ComparisonTable compare_direction(const RationalGF& gf, const AsymptoticResult& res,
                                  const std::vector<Rational>& direction,
                                  const std::vector<long>& scales);

/// CSV: r columns, oracle (decimal), predicted, abs_err, rel_err.
std::string comparison_csv(const ComparisonTable& t);

/// Exact check of
///   h[v_0, ..., v_n] = integral over the simplex of h^(n)(alpha . v)
/// (Hermite-Genocchi; Lebesgue measure of mass 1/n!), using confluent
/// divided differences on the left and the monomial moments
/// m!/(n+m)! h_m(v) on the right.  Repeated v allowed.
bool divided_difference_identity_check(const std::vector<Rational>& v, const QPolyU& h,
                                       Rational* lhs_out = nullptr, Rational* rhs_out = nullptr);

struct CriticalSetReport {
  double grad_norm_at_A = 0;   // expect ~0
  double min_grad_off_A = 0;   // expect bounded away from 0
  double min_re_f = 0;         // over sampled theta != 0; expect > 0
  bool pass = false;
};

/// Numeric check that the phase f(theta, alpha) = i delta.theta
/// - log(alpha . v(z_hat* e^{i theta}) z*_{d+1}) is stationary exactly on
/// A(delta) and has positive real part away from theta = 0.  Requires a
/// factored denominator (sheets are continued as actual root functions).
CriticalSetReport critical_set_check(const RationalGF& gf, const MultiplePointData& mp,
                                     const std::vector<Rational>& delta, int samples = 32);

/// Max entry-wise relative error between q_matrix and Richardson central
/// differences of theta -> -log(alpha . v(z_hat* e^{i theta})), with the
/// sheets continued from the given factors.
double hessian_fd_check(const std::vector<RPoly>& factors, const std::vector<Rational>& alpha,
                        const PointSpec& point);

/// Numeric evaluation of the residue-sum torus integral for d = 1 with a
/// factored denominator at z* = 1:
///   a_{r,s} ~ (2 pi)^{-1} int e^{-i r theta} int_simplex
///               h_s^{(n)}(alpha . v(e^{i theta})) d mu d theta
/// with h_s(y) = y^{s+n} phi(e^{i theta}, 1/y), evaluated via
/// p_k(s) = n!(s+n)!/(k!(n-k)!(s+k)!) and Cauchy-circle derivatives of
/// phi.  Doubling the resolution must move the value by <= 1e-8
/// relatively, else this throws.
ComparisonTable fl_quadrature_check(const RationalGF& gf, const MultiplePointData& mp,
                                    const Rational& delta, const std::vector<long>& s_list,
                                    int resolution = 256);

}  // namespace mpasym
