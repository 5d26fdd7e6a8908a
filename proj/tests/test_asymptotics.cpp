#include <cmath>

#include "doctest.h"
#include "helpers.hpp"
#include "mpasym/asymptotics.hpp"

using namespace mpasym;
using namespace mpasym::testing;

namespace {

struct Loaded {
  RationalGF gf;
  MultiplePointData mp;
};

Loaded load(const std::string& name) {
  Problem p = load_problem(problem_path(name));
  Loaded L;
  L.gf = p.gf;
  L.mp = analyze_multiple_point(p.gf, *p.point, p.options);
  return L;
}

std::vector<Rational> rq(std::initializer_list<Rational> v) { return std::vector<Rational>(v); }

const double kPi = std::acos(-1.0);

}  // namespace

TEST_CASE("double point constants in 2D") {
  Loaded lem = load("lemniscate");
  AsymptoticResult diag = leading_term(lem.gf, lem.mp, rq({Rational(1), Rational(1)}));
  CHECK(diag.theorem == TheoremTag::DoublePoint2D);
  REQUIRE(diag.b0_exact.has_value());
  CHECK(*diag.b0_exact == Rational(1, 6));
  CHECK(diag.power == doctest::Approx(0.0));
  CHECK_FALSE(diag.boundary_halved);

  // boundary ray: the limit is half the interior constant, approached at
  // rate s^(-1/2)
  AsymptoticResult bd = leading_term(lem.gf, lem.mp, rq({Rational(2), Rational(1)}));
  REQUIRE(bd.b0_exact.has_value());
  CHECK(*bd.b0_exact == Rational(1, 12));
  CHECK(bd.power == doctest::Approx(0.0));
  CHECK(bd.boundary_halved);
  CHECK_FALSE(bd.warnings.empty());

  CHECK_THROWS_AS(leading_term(lem.gf, lem.mp, rq({Rational(3), Rational(1)})),
                  UnsupportedError);
}

TEST_CASE("dice diagonal constant agrees across theorem paths") {
  Loaded dice = load("dice");
  const auto dir = rq({Rational(1), Rational(1)});

  AsymptoticResult a = leading_term(dice.gf, dice.mp, dir, Dispatch::DoublePoint2D);
  REQUIRE(a.b0_exact.has_value());
  CHECK(*a.b0_exact == Rational(3));

  AsymptoticResult b = leading_term(dice.gf, dice.mp, dir, Dispatch::CompletelyNondegenerate);
  REQUIRE(b.b0_exact.has_value());
  CHECK(*b.b0_exact == Rational(3));
  CHECK(std::abs(a.b0 - b.b0) <= 1e-12);

  AsymptoticResult c = leading_term(dice.gf, dice.mp, dir, Dispatch::Nondegenerate);
  CHECK(std::abs(c.b0 - 3.0) <= 1e-12);
  CHECK(c.power == doctest::Approx(0.0));

  AsymptoticResult d = leading_term(dice.gf, dice.mp, dir, Dispatch::Transverse);
  CHECK(std::abs(d.b0 - 3.0) <= 1e-10);
}

TEST_CASE("transverse planes in 3D") {
  Loaded tp = load("two_planes");
  AsymptoticResult r =
      leading_term(tp.gf, tp.mp, rq({Rational(3), Rational(3), Rational(2)}));
  CHECK(r.theorem == TheoremTag::Transverse);
  CHECK(r.b0 == doctest::Approx(16.0 / std::sqrt(24.0 * kPi)).epsilon(1e-10));
  CHECK(r.power == doctest::Approx(-0.5));
  // all-ones point: no exponential prefactor
  for (double l : r.prefactor_log) CHECK(l == doctest::Approx(0.0));
}

TEST_CASE("nondegenerate piecewise regime for three tangent curves") {
  Loaded c3 = load("three_curves");
  AsymptoticResult r = leading_term(c3.gf, c3.mp, rq({Rational(3), Rational(4)}));
  CHECK(r.theorem == TheoremTag::NondegeneratePiecewise);
  CHECK(r.power == doctest::Approx(1.0));
  CHECK(r.b0 == doctest::Approx(1.0 / 3.0).epsilon(1e-9));
}

TEST_CASE("piecewise_polynomial_3curves") {
  const Rational c0(1, 2), c1(1), c2(2), phi(1);
  CHECK(piecewise_polynomial_3curves(c0, c1, c2, phi, Rational(3), Rational(4)) ==
        Rational(4, 3));
  // vanishes at the outer tangent slopes
  CHECK(piecewise_polynomial_3curves(c0, c1, c2, phi, Rational(1), Rational(2)) == Rational(0));
  CHECK(piecewise_polynomial_3curves(c0, c1, c2, phi, Rational(2), Rational(1)) == Rational(0));
  // continuous at the middle slope: both closed forms agree there
  Rational left = piecewise_polynomial_3curves(c0, c1, c2, phi, Rational(9999), Rational(10000));
  Rational right = piecewise_polynomial_3curves(c0, c1, c2, phi, Rational(10001), Rational(10000));
  Rational mid = piecewise_polynomial_3curves(c0, c1, c2, phi, Rational(10000), Rational(10000));
  CHECK(mid == Rational(10000) * (Rational(1) - c0) / ((c1 - c0) * (c2 - c0)));
  CHECK(std::abs(to_double(left - right)) <= 3.0);  // kink, not a jump
  CHECK(std::abs(to_double(left - mid)) <= 3.0);
  // scales linearly in s at fixed slope
  CHECK(piecewise_polynomial_3curves(c0, c1, c2, phi, Rational(30), Rational(40)) ==
        Rational(10) * piecewise_polynomial_3curves(c0, c1, c2, phi, Rational(3), Rational(4)));
  CHECK_THROWS_AS(piecewise_polynomial_3curves(c1, c0, c2, phi, Rational(1), Rational(1)),
                  std::invalid_argument);
}

TEST_CASE("fully tangent pair in 2D") {
  Loaded td = load("tangent_double");
  AsymptoticResult r = leading_term(td.gf, td.mp, rq({Rational(1), Rational(1)}));
  CHECK(r.theorem == TheoremTag::FullyTangent);
  CHECK(r.power == doctest::Approx(0.5));
  // curvature-separated tangency: 1/(sqrt(pi) (sqrt(d0) + sqrt(d1))),
  // d0 = 1, d1 = 1/2
  double expect = 1.0 / (std::sqrt(kPi) * (1.0 + 1.0 / std::sqrt(2.0)));
  CHECK(r.b0 == doctest::Approx(expect).epsilon(1e-6));
}

TEST_CASE("tangent_2d_order_m closed forms") {
  TangentOrderM eq = tangent_2d_order_m(2.0, 2.0, 1.0, 1, 2);
  // equal curvatures collapse to phi Gamma(1/m) / (2 pi d^{1/m}) .. m = 2
  CHECK(eq.b0 == doctest::Approx(std::tgamma(0.5) / (2.0 * kPi * std::sqrt(2.0))));
  CHECK(eq.power == doctest::Approx(1.0 - 0.5));

  TangentOrderM t = tangent_2d_order_m(1.0, 4.0, 1.0, 1, 2);
  CHECK(t.b0 == doctest::Approx(1.0 / (3.0 * std::sqrt(kPi))));
  CHECK(t.alt_b0_m2 == doctest::Approx(2.0 / (std::sqrt(2.0 * kPi) * 3.0)));
  CHECK_FALSE(t.warning.empty());
  CHECK(t.alt_b0_m2 / t.b0 == doctest::Approx(std::sqrt(2.0)));

  CHECK_THROWS_AS(tangent_2d_order_m(1.0, 4.0, 1.0, 1, 3), std::invalid_argument);
}

TEST_CASE("evaluate_prediction") {
  Loaded dice = load("dice");
  AsymptoticResult r = leading_term(dice.gf, dice.mp, rq({Rational(1), Rational(1)}));
  CHECK(evaluate_prediction(r, {100, 100}) == doctest::Approx(3.0));

  Loaded tp = load("two_planes");
  AsymptoticResult t =
      leading_term(tp.gf, tp.mp, rq({Rational(3), Rational(3), Rational(2)}));
  CHECK(evaluate_prediction(t, {90, 90, 60}) ==
        doctest::Approx(16.0 / std::sqrt(24.0 * kPi * 60.0)).epsilon(1e-9));
  CHECK(evaluate_prediction(t, {90, 90, 60}) == doctest::Approx(0.23788).epsilon(1e-4));
  CHECK_THROWS_AS(evaluate_prediction(t, {90, 90, 0}), std::invalid_argument);
}

TEST_CASE("theorem_name strings are stable") {
  CHECK(theorem_name(TheoremTag::DoublePoint2D) == "double_point_2d");
  CHECK(theorem_name(TheoremTag::Transverse) == "transverse");
}
