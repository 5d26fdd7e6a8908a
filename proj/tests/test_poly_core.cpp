#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "mpasym/mpoly.hpp"
#include "mpasym/series_table.hpp"

using namespace mpasym;
using namespace mpasym::testing;

namespace {

RPoly random_poly(std::mt19937& rng, int nvars, int max_deg, int terms) {
  RPoly p(nvars);
  std::uniform_int_distribution<int> e(0, max_deg);
  for (int t = 0; t < terms; ++t) {
    Monomial m(size_t(nvars), 0);
    for (auto& mk : m) mk = e(rng);
    p.add_term(m, random_rational(rng));
  }
  return p;
}

}  // namespace

TEST_CASE("poly_eval exact values") {
  const std::vector<std::string> xy = {"x", "y"};
  RPoly H = P(kLemniscateH, xy);
  CHECK(poly_eval(H, std::vector<Rational>{Rational(1), Rational(1)}) == Rational(0));
  CHECK(poly_eval(H, std::vector<Rational>{Rational(0), Rational(0)}) == Rational(19));
  RPoly s = P("x + y", xy);
  CHECK(poly_eval(s, std::vector<Rational>{Rational(1), Rational(2)}) == Rational(3));
  CHECK_THROWS_AS(poly_eval(s, std::vector<Rational>{Rational(1)}), std::invalid_argument);
}

TEST_CASE("poly_diff exact derivatives") {
  const std::vector<std::string> xy = {"x", "y"};
  RPoly p = P("x^2", xy);
  CHECK(poly_diff(p, 0) == P("2*x", xy));
  CHECK(poly_diff(p, 0, 2) == P("2", xy));
  CHECK(poly_diff(p, 0, 3).is_zero());
  CHECK(poly_diff(p, 1).is_zero());

  // second derivative in the last variable at the dice double point
  RPoly Hd = P("(1 - 1/3*x - 2/3*y)*(1 - 2/3*x - 1/3*y)", xy);
  RPoly Hyy = poly_diff(Hd, 1, 2);
  CHECK(poly_eval(Hyy, std::vector<Rational>{Rational(1), Rational(1)}) == Rational(4, 9));

  const std::vector<std::string> xyz = {"x", "y", "z"};
  RPoly Hp = P("(4 - 2*x - y - z)*(4 - x - 2*y - z)", xyz);
  RPoly Hzz = poly_diff(Hp, 2, 2);
  CHECK(poly_eval(Hzz, std::vector<Rational>{Rational(1), Rational(1), Rational(1)}) ==
        Rational(2));
}

TEST_CASE("poly_diff commutes across variables") {
  std::mt19937 rng(7101);
  for (int trial = 0; trial < 40; ++trial) {
    RPoly p = random_poly(rng, 3, 5, 8);
    CHECK(poly_diff(poly_diff(p, 0), 2) == poly_diff(poly_diff(p, 2), 0));
  }
}

TEST_CASE("poly_eval respects ring operations") {
  std::mt19937 rng(7102);
  const std::vector<Rational> pt = {Rational(2, 3), Rational(-1, 2)};
  for (int trial = 0; trial < 40; ++trial) {
    RPoly a = random_poly(rng, 2, 4, 6);
    RPoly b = random_poly(rng, 2, 4, 6);
    CHECK(poly_eval(a * b, pt) == poly_eval(a, pt) * poly_eval(b, pt));
    CHECK(poly_eval(a + b, pt) == poly_eval(a, pt) + poly_eval(b, pt));
  }
}

TEST_CASE("coefficients_box exact entries") {
  const std::vector<std::string> xyz = {"x", "y", "z"};
  RPoly G3 = P("16", xyz);
  RPoly H3 = P("(4 - 2*x - y - z)*(4 - x - 2*y - z)", xyz);
  SeriesTable t3 = coefficients_box(G3, H3, {2, 2, 2});
  CHECK(t3.at({0, 0, 0}) == Rational(1));
  CHECK(series_multiply_check(t3, H3, G3));

  const std::vector<std::string> xy = {"x", "y"};
  RPoly Hl = P(kLemniscateH, xy);
  RPoly one = P("1", xy);
  SeriesTable tl = coefficients_box(one, Hl, {3, 3});
  CHECK(tl.at({0, 0}) == Rational(1, 19));
  CHECK(series_multiply_check(tl, Hl, one));
}

TEST_CASE("coefficients_box matches the known diagonal limit") {
  const std::vector<std::string> xy = {"x", "y"};
  RPoly G = P("1", xy);
  RPoly H = P("(1 - 1/3*x - 2/3*y)*(1 - 2/3*x - 1/3*y)", xy);
  SeriesTable t = coefficients_box(G, H, {100, 100});
  double a = to_double(t.at({100, 100}));
  CHECK(std::abs(a - 3.0) <= 1e-4);
}

TEST_CASE("coefficients_box rejects H(0) = 0 and empty shapes work") {
  const std::vector<std::string> xy = {"x", "y"};
  CHECK_THROWS_AS(coefficients_box(P("1", xy), P("x + y", xy), {2, 2}), std::domain_error);
  SeriesTable t = coefficients_box(P("1", xy), P("1 - x - y", xy), {0, 0});
  CHECK(t.at({0, 0}) == Rational(1));
  CHECK(series_multiply_check(t, P("1 - x - y", xy), P("1", xy)));
}

TEST_CASE("series_multiply_check detects a corrupted entry") {
  const std::vector<std::string> xy = {"x", "y"};
  RPoly G = P("1", xy);
  RPoly H = P("1 - x - y", xy);
  SeriesTable t = coefficients_box(G, H, {4, 4});
  CHECK(series_multiply_check(t, H, G));
  t.set({2, 1}, t.at({2, 1}) + Rational(1));
  CHECK_FALSE(series_multiply_check(t, H, G));
}

TEST_CASE("coefficients_box against randomized multiply checks") {
  std::mt19937 rng(7103);
  for (int trial = 0; trial < 25; ++trial) {
    RPoly G = random_poly(rng, 2, 3, 5);
    RPoly H = random_poly(rng, 2, 3, 5);
    // force analyticity at the origin
    H.add_term({0, 0}, Rational(1) - H.coefficient({0, 0}));
    SeriesTable t = coefficients_box(G, H, {6, 5});
    CHECK(series_multiply_check(t, H, G));
  }
}

TEST_CASE("poly_to_string round-trips") {
  const std::vector<std::string> xy = {"x", "y"};
  std::mt19937 rng(7104);
  for (int trial = 0; trial < 25; ++trial) {
    RPoly p = random_poly(rng, 2, 5, 7);
    if (p.is_zero()) continue;
    CHECK(P(poly_to_string(p, xy), xy) == p);
  }
}
