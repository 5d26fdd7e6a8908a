#include <cmath>
#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "mpasym/verification.hpp"

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

}  // namespace

TEST_CASE("compare_direction: constant predictions decay exponentially") {
  Loaded dice = load("dice");
  AsymptoticResult res = leading_term(dice.gf, dice.mp, rq({Rational(1), Rational(1)}));
  ComparisonTable t = compare_direction(dice.gf, res, rq({Rational(1), Rational(1)}),
                                        {20, 40, 60, 80, 100});
  REQUIRE(t.rows.size() == 5);
  CHECK(t.fit.model == "log-linear");
  CHECK(t.fit.slope < -0.01);
  CHECK(t.rows.back().rel_err <= 1e-4);
  // errors shrink monotonically along the diagonal
  for (size_t i = 1; i < t.rows.size(); ++i)
    CHECK(t.rows[i].rel_err < t.rows[i - 1].rel_err);
}

TEST_CASE("compare_direction: boundary constant with a slow polynomial tail") {
  Loaded lem = load("lemniscate");
  AsymptoticResult res = leading_term(lem.gf, lem.mp, rq({Rational(2), Rational(1)}));
  ComparisonTable t = compare_direction(lem.gf, res, rq({Rational(2), Rational(1)}),
                                        {20, 40, 60, 80, 100});
  CHECK(t.fit.slope < 0);
  CHECK(t.rows.back().rel_err <= 0.05);
  // the residual a_{2s,s} - 1/12 decays like s^(-1/2)
  double lo = std::log(t.rows[0].abs_err), hi = std::log(t.rows.back().abs_err);
  double p = (hi - lo) / (std::log(100.0) - std::log(20.0));
  CHECK(p == doctest::Approx(-0.5).epsilon(0.25));
}

TEST_CASE("comparison_csv shape") {
  Loaded dice = load("dice");
  AsymptoticResult res = leading_term(dice.gf, dice.mp, rq({Rational(1), Rational(1)}));
  ComparisonTable t = compare_direction(dice.gf, res, rq({Rational(1), Rational(1)}), {10, 20});
  std::string csv = comparison_csv(t);
  CHECK(csv.rfind("r1,r2,oracle,predicted,abs_err,rel_err\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 3);
}

TEST_CASE("divided difference identity, hand-checked cases") {
  // h = y^2 over nodes (a, b): [a,b] of y^2 is a + b
  QPolyU h = {Rational(0), Rational(0), Rational(1)};
  Rational lhs, rhs;
  CHECK(divided_difference_identity_check({Rational(2), Rational(5)}, h, &lhs, &rhs));
  CHECK(lhs == Rational(7));
  CHECK(rhs == Rational(7));

  // confluent pair: [v0, v0] of h is h'(v0)
  CHECK(divided_difference_identity_check({Rational(3), Rational(3)}, h, &lhs, &rhs));
  CHECK(lhs == Rational(6));

  // cubic over three nodes: [0,1,2] of y^3 = 0 + 1 + 2
  QPolyU c = {Rational(0), Rational(0), Rational(0), Rational(1)};
  CHECK(divided_difference_identity_check({Rational(0), Rational(1), Rational(2)}, c, &lhs,
                                          &rhs));
  CHECK(lhs == Rational(3));
}

TEST_CASE("divided difference identity, randomized") {
  std::mt19937 rng(424242);
  std::uniform_int_distribution<int> npick(1, 4);
  std::uniform_int_distribution<int> dpick(0, 8);
  int checked = 0;
  for (int trial = 0; trial < 200; ++trial) {
    int n = npick(rng);
    QPolyU h(size_t(dpick(rng)) + 1, Rational(0));
    for (auto& c : h) c = random_rational(rng);
    std::vector<Rational> v;
    for (int i = 0; i <= n; ++i) v.push_back(random_rational(rng, 8, 3));
    if (trial % 5 == 0 && n >= 1) v[1] = v[0];  // force a confluent pair
    Rational lhs, rhs;
    CHECK(divided_difference_identity_check(v, h, &lhs, &rhs));
    CHECK(lhs == rhs);
    ++checked;
  }
  CHECK(checked == 200);
}

TEST_CASE("critical_set_check on the dice diagonal") {
  Loaded dice = load("dice");
  CriticalSetReport rep = critical_set_check(dice.gf, dice.mp, rq({Rational(1), Rational(1)}));
  CHECK(rep.pass);
  CHECK(rep.grad_norm_at_A <= 1e-8);
  CHECK(rep.min_grad_off_A > 1e-3);
  CHECK(rep.min_re_f > 0);
}

TEST_CASE("critical_set_check on the transverse planes") {
  Loaded tp = load("two_planes");
  CriticalSetReport rep =
      critical_set_check(tp.gf, tp.mp, rq({Rational(3, 2), Rational(3, 2), Rational(1)}));
  CHECK(rep.pass);
  CHECK(rep.min_re_f > 0);
}

TEST_CASE("hessian_fd_check agrees with the exact Hessian") {
  const std::vector<std::string> xyz = {"x", "y", "z"};
  std::vector<RPoly> planes = {P("4 - 2*x - y - z", xyz), P("4 - x - 2*y - z", xyz)};
  CHECK(hessian_fd_check(planes, {Rational(1, 2), Rational(1, 2)}, ones(3)) <= 1e-6);
  CHECK(hessian_fd_check(planes, {Rational(1), Rational(0)}, ones(3)) <= 1e-6);

  const std::vector<std::string> xy = {"x", "y"};
  std::vector<RPoly> dice = {P("1 - 1/3*x - 2/3*y", xy), P("1 - 2/3*x - 1/3*y", xy)};
  CHECK(hessian_fd_check(dice, {Rational(2, 5), Rational(3, 5)}, ones(2)) <= 1e-6);
}

TEST_CASE("hessian_fd_check on randomized affine sheets") {
  std::mt19937 rng(515151);
  const std::vector<std::string> xy = {"x", "y"};
  int done = 0;
  for (int trial = 0; trial < 14; ++trial) {
    // factor 1 - a x - b y with a + b = 1, b != 0: vanishes at (1,1)
    Rational a = random_rational(rng, 4, 3);
    Rational b = Rational(1) - a;
    if (b == 0) continue;
    RPoly f(2);
    f.add_term({0, 0}, Rational(1));
    f.add_term({1, 0}, -a);
    f.add_term({0, 1}, -b);
    CHECK(hessian_fd_check({f}, {Rational(1)}, ones(2)) <= 1e-6);
    ++done;
  }
  CHECK(done >= 8);
}

TEST_CASE("fl_quadrature_check reproduces the dice diagonal") {
  Loaded dice = load("dice");
  ComparisonTable t = fl_quadrature_check(dice.gf, dice.mp, Rational(1), {20, 40}, 128);
  REQUIRE(t.rows.size() == 2);
  CHECK(t.rows[0].rel_err <= 1e-6);
  CHECK(t.rows[1].rel_err <= 1e-6);
  CHECK(t.rows[1].rel_err <= t.rows[0].rel_err * 10);  // no blow-up with s
  CHECK(t.fit.model == "log-linear");
}

TEST_CASE("fl_quadrature_check off-diagonal direction") {
  Loaded dice = load("dice");
  ComparisonTable t = fl_quadrature_check(dice.gf, dice.mp, Rational(5, 4), {24}, 128);
  REQUIRE(t.rows.size() == 1);
  CHECK(t.rows[0].rel_err <= 1e-6);
}

TEST_CASE("fl_quadrature_check rejects unsupported shapes") {
  Loaded tp = load("two_planes");
  CHECK_THROWS_AS(fl_quadrature_check(tp.gf, tp.mp, Rational(3, 2), {10}, 64),
                  UnsupportedError);

  Loaded lem = load("lemniscate");  // no factored denominator
  CHECK_THROWS_AS(fl_quadrature_check(lem.gf, lem.mp, Rational(1), {10}, 64), UnsupportedError);
}
