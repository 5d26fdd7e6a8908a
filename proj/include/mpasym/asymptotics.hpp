#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mpasym/cone_geometry.hpp"
#include "mpasym/local_analysis.hpp"

namespace mpasym {

enum class TheoremTag {
  DoublePoint2D,
  CompletelyNondegenerate,
  NondegeneratePiecewise,
  Transverse,
  FullyTangent,
  Tangent2DOrderM,
};

std::string theorem_name(TheoremTag t);

/// Leading-term asymptotics a_r ~ (z*)^{-r} * b0 * s^power with s = r_{d+1}.
struct AsymptoticResult {
  PointSpec point;
  TheoremTag theorem = TheoremTag::DoublePoint2D;
  std::vector<double> prefactor_log;  // -log z*_k
  double b0 = 0;
  std::optional<Rational> b0_exact;  // set when the constant is exactly rational
  double power = 0;
  bool boundary_halved = false;
  Cone cone;
  std::vector<std::string> warnings;
};

/// Forces a particular theorem path (consistency testing); Auto dispatches
/// on the classification.
enum class Dispatch { Auto, DoublePoint2D, CompletelyNondegenerate, Nondegenerate, Transverse };

AsymptoticResult leading_term(const RationalGF& gf, const MultiplePointData& mp,
                              const std::vector<Rational>& r, Dispatch force = Dispatch::Auto,
                              double rank_tol = 1e-9);

/// Piecewise linear leading coefficient for three tangent curves in 2D
/// with slopes c0 <= c1 <= c2 (at least one inequality strict):
/// P(r,s) = phi (r - c0 s) / ((c1-c0)(c2-c0)) on c0 <= r/s <= c1 and the
/// mirrored form on [c1, c2].  Exact; normalization pinned by the
/// coefficient oracle.
Rational piecewise_polynomial_3curves(const Rational& c0, const Rational& c1, const Rational& c2,
                                      const Rational& phi, const Rational& r, const Rational& s);

/// Two sheets tangent to order exactly m (m even) in 2D: leading
/// coefficient and power n - 1/m.  The alternate printed constant for
/// m = 2 is reported alongside with a warning describing the sqrt(2)
/// discrepancy between the two published forms.
struct TangentOrderM {
  double b0 = 0;
  double power = 0;
  double alt_b0_m2 = 0;  // 2 phi / (sqrt(2 pi) (sqrt(d0)+sqrt(d1))), m = 2 only
  std::string warning;
};

TangentOrderM tangent_2d_order_m(double d0, double d1, double phi, int n, int m);

/// Numeric prediction (z*)^{-r} * b0 * (r_{d+1})^power at an integer
/// direction r.
double evaluate_prediction(const AsymptoticResult& res, const std::vector<long>& r);

}  // namespace mpasym
