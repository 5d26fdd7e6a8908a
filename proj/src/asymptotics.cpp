#include "mpasym/asymptotics.hpp"

#include <cmath>
#include <stdexcept>

#include "mpasym/univariate.hpp"

namespace mpasym {

namespace {

const double kTwoPi = 2.0 * std::acos(-1.0);

Rational rational_abs(const Rational& q) { return q < 0 ? Rational(-q) : q; }

}  // namespace

std::string theorem_name(TheoremTag t) {
  switch (t) {
    case TheoremTag::DoublePoint2D: return "double_point_2d";
    case TheoremTag::CompletelyNondegenerate: return "completely_nondegenerate";
    case TheoremTag::NondegeneratePiecewise: return "nondegenerate_piecewise";
    case TheoremTag::Transverse: return "transverse";
    case TheoremTag::FullyTangent: return "fully_tangent";
    case TheoremTag::Tangent2DOrderM: return "tangent_2d_order_m";
  }
  return "unknown";
}

AsymptoticResult leading_term(const RationalGF& gf, const MultiplePointData& mp,
                              const std::vector<Rational>& r, Dispatch force, double rank_tol) {
  const int d = gf.nvars() - 1;
  const int n = mp.multiplicity - 1;

  DirectionMatrix C = direction_matrix(mp.sheets, mp.point);
  Classification cl = classify(C, rank_tol);
  ConePosition pos = cone_membership(C, r);
  if (pos == ConePosition::Outside)
    throw UnsupportedError("leading_term: direction outside the cone of this point");

  AsymptoticResult res;
  res.point = mp.point;
  res.cone = cone_hull(C);
  for (const Rational& c : mp.point.coordinates) {
    if (c <= 0)
      throw UnsupportedError("leading_term: only positive real singular points are supported");
    res.prefactor_log.push_back(-std::log(to_double(c)));
  }
  if (mp.minimality.kind != MinimalityStatus::Kind::Pass)
    res.warnings.push_back("strict minimality was not confirmed by the sampling heuristic");

  std::vector<Rational> delta(r.size());
  for (size_t i = 0; i < r.size(); ++i) delta[i] = r[i] / r.back();

  const double phi = to_double(mp.phi_value);

  TheoremTag tag;
  switch (force) {
    case Dispatch::DoublePoint2D: tag = TheoremTag::DoublePoint2D; break;
    case Dispatch::CompletelyNondegenerate: tag = TheoremTag::CompletelyNondegenerate; break;
    case Dispatch::Nondegenerate: tag = TheoremTag::NondegeneratePiecewise; break;
    case Dispatch::Transverse: tag = TheoremTag::Transverse; break;
    case Dispatch::Auto:
    default: {
      if (d == 1 && n == 1 && !cl.single_ray) tag = TheoremTag::DoublePoint2D;
      else if (cl.single_ray && n >= 1) tag = TheoremTag::FullyTangent;
      else if (cl.completely_nondegenerate) tag = TheoremTag::CompletelyNondegenerate;
      else if (cl.nondegenerate) tag = TheoremTag::NondegeneratePiecewise;
      else if (cl.transverse) tag = TheoremTag::Transverse;
      else
        throw UnsupportedError("leading_term: degenerate non-single-ray configuration");
      break;
    }
  }
  if (pos == ConePosition::Boundary && tag != TheoremTag::DoublePoint2D)
    throw UnsupportedError("leading_term: boundary directions are only supported at 2D double points");

  res.theorem = tag;
  switch (tag) {
    case TheoremTag::DoublePoint2D: {
      if (d != 1 || n != 1)
        throw UnsupportedError("leading_term: double-point path needs one double point in 2D");
      DoublePointLocal dp = double_point_local_2d(gf.denominator, mp.point);
      if (dp.degenerate)
        throw UnsupportedError("leading_term: tangent sheets (zero Hessian determinant)");
      const Rational& zs = mp.point.coordinates[0];
      const Rational& ws = mp.point.coordinates[1];
      Rational arg = -zs * zs * ws * ws * dp.det_hess;
      if (arg <= 0)
        throw UnsupportedError("leading_term: Hessian determinant has the wrong sign");
      Rational g = poly_eval(gf.numerator, mp.point.coordinates);
      res.b0 = to_double(g) / std::sqrt(to_double(arg));
      if (auto s = exact_sqrt(arg)) res.b0_exact = g / *s;
      if (pos == ConePosition::Boundary) {
        // on a cone wall the limit is half the interior constant; the
        // first correction decays like s^(-1/2), so convergence is slow
        // (confirmed against the exact coefficient oracle)
        res.b0 /= 2;
        if (res.b0_exact) *res.b0_exact /= 2;
        res.boundary_halved = true;
        res.warnings.push_back(
            "boundary direction: leading coefficient halved; next term is O(s^(-1/2))");
      }
      break;
    }
    case TheoremTag::CompletelyNondegenerate: {
      if (!cl.completely_nondegenerate)
        throw UnsupportedError("leading_term: point is not completely nondegenerate");
      Rational det_c = rational_determinant(C.rows);
      Rational b = Rational(factorial(unsigned(d))) * mp.phi_value / rational_abs(det_c);
      res.b0_exact = b;
      res.b0 = to_double(b);
      break;
    }
    case TheoremTag::NondegeneratePiecewise: {
      if (!cl.nondegenerate || cl.rho != d)
        throw UnsupportedError("leading_term: point is not nondegenerate");
      // Laplace concentration of the simplex integral on the solution
      // slice A(delta): in the chart beta = (alpha_1..alpha_n) the local
      // Gaussian factors cancel against det Q, leaving
      //   b0 = phi * Vol_{n-d}(A in beta) / sqrt(det(Gamma Gamma^T))
      // with Gamma the Jacobian of beta -> (alpha C)_{1..d}.  Confirmed
      // against the exact coefficient oracle (the symmetric-embedding
      // normalization sigma/|det cbar| overcounts by 2 here).
      SolutionPolytope A = solve_A(C, delta);
      std::vector<std::vector<Rational>> beta;
      for (const auto& v : A.vertices)
        beta.emplace_back(v.begin() + 1, v.end());
      double vol = polytope_volume(beta, n - d);
      Eigen::MatrixXd Gamma(d, n);
      for (int k = 0; k < d; ++k)
        for (int j = 1; j <= n; ++j)
          Gamma(k, j - 1) =
              to_double(C.rows[size_t(j)][size_t(k)] - C.rows[0][size_t(k)]);
      double gram = std::sqrt((Gamma * Gamma.transpose()).determinant());
      res.b0 = phi * vol / gram;
      res.power = double(n - d);
      break;
    }
    case TheoremTag::Transverse: {
      if (!cl.transverse || cl.rho != n)
        throw UnsupportedError("leading_term: point is not transverse");
      SolutionPolytope A = solve_A(C, delta);
      QMatrix Q = q_matrix(mp.sheets, A.vertices.front(), mp.point);
      SqrtDet sd = sqrt_det(m_matrix(Q, project_Cbar(C)));
      std::complex<double> b = factorial(unsigned(n)).convert_to<double>() /
                               std::sqrt(double(n + 1)) *
                               std::pow(kTwoPi, 0.5 * double(n - d)) * phi / sd.value;
      if (std::abs(b.imag()) > 1e-9 * std::abs(b))
        res.warnings.push_back("transverse constant has a nontrivial imaginary part; real part kept");
      res.b0 = b.real();
      res.power = 0.5 * double(n - d);
      break;
    }
    case TheoremTag::FullyTangent: {
      auto integrand = [&](const std::vector<double>& a) -> std::complex<double> {
        std::vector<Rational> alpha;
        alpha.reserve(a.size());
        for (double x : a) alpha.push_back(rational_from_double(x));
        QMatrix Q = q_matrix(mp.sheets, alpha, mp.point);
        std::complex<double> det = sqrt_det(Q.entries()).det;
        return 1.0 / std::sqrt(det);
      };
      std::complex<double> lo = simplex_quadrature(integrand, n, 6);
      std::complex<double> hi = simplex_quadrature(integrand, n, 7);
      if (std::abs(hi - lo) > 1e-6 * std::abs(hi))
        throw std::runtime_error("leading_term: simplex quadrature did not converge");
      res.b0 = phi / std::pow(kTwoPi, 0.5 * double(d)) * hi.real();
      res.power = double(n) - 0.5 * double(d);
      break;
    }
    case TheoremTag::Tangent2DOrderM:
      throw UnsupportedError("leading_term: use tangent_2d_order_m directly");
  }
  return res;
}

Rational piecewise_polynomial_3curves(const Rational& c0, const Rational& c1, const Rational& c2,
                                      const Rational& phi, const Rational& r, const Rational& s) {
  if (!(c0 <= c1 && c1 <= c2 && c0 < c2))
    throw std::invalid_argument("piecewise_polynomial_3curves: slopes must satisfy c0 <= c1 <= c2");
  if (s <= 0) throw std::invalid_argument("piecewise_polynomial_3curves: s must be positive");
  Rational delta = r / s;
  if (delta < c0 || delta > c2)
    throw UnsupportedError("piecewise_polynomial_3curves: direction outside [c0, c2]");
  // tent function vanishing at c0 and c2 with peak at c1; the
  // normalization is fixed by the coefficient oracle
  if (delta <= c1 && c1 > c0) return phi * (r - c0 * s) / ((c1 - c0) * (c2 - c0));
  return phi * (c2 * s - r) / ((c2 - c1) * (c2 - c0));
}

TangentOrderM tangent_2d_order_m(double d0, double d1, double phi, int n, int m) {
  if (m <= 0 || m % 2 != 0)
    throw std::invalid_argument("tangent_2d_order_m: order must be even and positive");
  TangentOrderM out;
  double inv_m = 1.0 / double(m);
  double gamma = std::tgamma(inv_m);
  if (std::abs(d0 - d1) < 1e-12 * std::abs(d0)) {
    out.b0 = phi * gamma / (kTwoPi * std::pow(d0, inv_m));
  } else {
    out.b0 = phi * gamma / (kTwoPi * (1.0 - inv_m)) *
             (std::pow(d1, 1.0 - inv_m) - std::pow(d0, 1.0 - inv_m)) / (d1 - d0);
  }
  out.power = double(n) - inv_m;
  if (m == 2) {
    out.alt_b0_m2 = 2.0 * phi / (std::sqrt(kTwoPi) * (std::sqrt(d0) + std::sqrt(d1)));
    out.warning =
        "two published forms of the order-2 tangent constant differ by sqrt(2); emitting "
        "phi/(sqrt(pi)(sqrt(d0)+sqrt(d1))), the form confirmed by the coefficient oracle";
  }
  return out;
}

double evaluate_prediction(const AsymptoticResult& res, const std::vector<long>& r) {
  if (r.size() != res.prefactor_log.size())
    throw std::invalid_argument("evaluate_prediction: direction dimension mismatch");
  long s = r.back();
  if (s <= 0) throw std::invalid_argument("evaluate_prediction: r_{d+1} must be positive");
  double log_pref = 0;
  for (size_t k = 0; k < r.size(); ++k) log_pref += double(r[k]) * res.prefactor_log[k];
  return std::exp(log_pref) * res.b0 * std::pow(double(s), res.power);
}

}  // namespace mpasym
