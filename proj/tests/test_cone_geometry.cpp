#include <cmath>
#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "mpasym/cone_geometry.hpp"
#include "mpasym/univariate.hpp"

using namespace mpasym;
using namespace mpasym::testing;

namespace {

const std::vector<std::string> xy = {"x", "y"};
const std::vector<std::string> xyz = {"x", "y", "z"};

DirectionMatrix planes_C() {
  auto jets = sheet_jets({P("4 - 2*x - y - z", xyz), P("4 - x - 2*y - z", xyz)}, ones(3));
  return direction_matrix(jets, ones(3));
}

DirectionMatrix dice_C() {
  auto jets =
      sheet_jets({P("1 - 1/3*x - 2/3*y", xy), P("1 - 2/3*x - 1/3*y", xy)}, ones(2));
  return direction_matrix(jets, ones(2));
}

DirectionMatrix curves3_C() {
  auto jets = sheet_jets({P("1 - 1/3*(2*x + y)", xy), P("1 - 1/2*(x + y)", xy),
                          P("1 - 1/3*(x + 2*y)", xy)},
                         ones(2));
  return direction_matrix(jets, ones(2));
}

std::vector<Rational> rq(std::initializer_list<Rational> v) { return std::vector<Rational>(v); }

}  // namespace

TEST_CASE("direction_matrix rows at the all-ones point") {
  DirectionMatrix C = planes_C();
  REQUIRE(C.nplus1() == 2);
  REQUIRE(C.dplus1() == 3);
  CHECK(C.rows[0] == rq({Rational(2), Rational(1), Rational(1)}));
  CHECK(C.rows[1] == rq({Rational(1), Rational(2), Rational(1)}));

  DirectionMatrix D = dice_C();
  CHECK(D.rows[0] == rq({Rational(1, 2), Rational(1)}));
  CHECK(D.rows[1] == rq({Rational(2), Rational(1)}));
}

TEST_CASE("classify separates the three regimes") {
  Classification dice = classify(dice_C());
  CHECK(dice.rank == 2);
  CHECK(dice.nondegenerate);
  CHECK(dice.transverse);
  CHECK(dice.completely_nondegenerate);
  CHECK_FALSE(dice.single_ray);

  Classification planes = classify(planes_C());
  CHECK(planes.rank == 2);
  CHECK(planes.transverse);       // rank = n+1 = 2
  CHECK_FALSE(planes.nondegenerate);  // rank < d+1 = 3
  CHECK_FALSE(planes.completely_nondegenerate);

  Classification c3 = classify(curves3_C());
  CHECK(c3.rank == 2);
  CHECK(c3.nondegenerate);        // rank = d+1 = 2
  CHECK_FALSE(c3.transverse);     // rank < n+1 = 3
  CHECK_FALSE(c3.completely_nondegenerate);

  // two proportional factors: identical sheets, one ray
  auto jets = sheet_jets({P("2 - x - y", xy), P("1 - 1/2*x - 1/2*y", xy)}, ones(2));
  DirectionMatrix S = direction_matrix(jets, ones(2));
  Classification ray = classify(S);
  CHECK(ray.single_ray);
  CHECK(ray.rank == 1);
}

TEST_CASE("cone_hull of the dice directions") {
  Cone cone = cone_hull(dice_C());
  CHECK(cone.dim == 2);
  REQUIRE(cone.rays.size() == 2);
  CHECK(cone.rays[0] == rq({Rational(1), Rational(2)}));
  CHECK(cone.rays[1] == rq({Rational(2), Rational(1)}));
}

TEST_CASE("cone_membership interior / boundary / outside") {
  DirectionMatrix D = dice_C();
  CHECK(cone_membership(D, rq({Rational(1), Rational(1)})) == ConePosition::Interior);
  CHECK(cone_membership(D, rq({Rational(2), Rational(1)})) == ConePosition::Boundary);
  CHECK(cone_membership(D, rq({Rational(1), Rational(2)})) == ConePosition::Boundary);
  CHECK(cone_membership(D, rq({Rational(3), Rational(1)})) == ConePosition::Outside);
  CHECK(cone_membership(D, rq({Rational(1, 3), Rational(1)})) == ConePosition::Outside);
}

TEST_CASE("rows of C are never outside their own cone") {
  for (const DirectionMatrix& C : {dice_C(), planes_C(), curves3_C()}) {
    for (const auto& row : C.rows)
      CHECK(cone_membership(C, row) != ConePosition::Outside);
  }
}

TEST_CASE("solve_A vertices") {
  // transverse case: unique solution
  SolutionPolytope A = solve_A(planes_C(), rq({Rational(3, 2), Rational(3, 2), Rational(1)}));
  REQUIRE(A.vertices.size() == 1);
  CHECK(A.affine_dim == 0);
  CHECK(A.vertices[0] == rq({Rational(1, 2), Rational(1, 2)}));

  // three tangent curves, delta = 3/4: a segment of solutions (sheet order
  // follows the factor list: slopes 2, 1, 1/2)
  SolutionPolytope B = solve_A(curves3_C(), rq({Rational(3, 4), Rational(1)}));
  REQUIRE(B.vertices.size() == 2);
  CHECK(B.affine_dim == 1);
  bool match = (B.vertices[0] == rq({Rational(0), Rational(1, 2), Rational(1, 2)}) &&
                B.vertices[1] == rq({Rational(1, 6), Rational(0), Rational(5, 6)})) ||
               (B.vertices[1] == rq({Rational(0), Rational(1, 2), Rational(1, 2)}) &&
                B.vertices[0] == rq({Rational(1, 6), Rational(0), Rational(5, 6)}));
  CHECK(match);

  CHECK_THROWS_AS(solve_A(dice_C(), rq({Rational(3), Rational(1)})), UnsupportedError);
}

TEST_CASE("solve_A at a row recovers the unit vector") {
  DirectionMatrix C = curves3_C();
  SolutionPolytope A = solve_A(C, C.rows[1]);
  bool has_unit = false;
  for (const auto& v : A.vertices)
    if (v == rq({Rational(0), Rational(1), Rational(0)})) has_unit = true;
  CHECK(has_unit);
}

TEST_CASE("sigma_measure") {
  // singleton: counting measure n!/sqrt(n+1)
  SolutionPolytope pt;
  pt.vertices = {rq({Rational(1, 2), Rational(1, 2)})};
  pt.affine_dim = 0;
  CHECK(sigma_measure(pt, 1, 1) == doctest::Approx(1.0 / std::sqrt(2.0)));

  // wall of the cone: the slice degenerates, measure zero
  SolutionPolytope wall = solve_A(curves3_C(), rq({Rational(1, 2), Rational(1)}));
  CHECK(sigma_measure(wall, 2, 1) == doctest::Approx(0.0));

  // 1-dimensional slice: |A| / (sqrt(3)/2)
  SolutionPolytope seg = solve_A(curves3_C(), rq({Rational(3, 4), Rational(1)}));
  double len = 0;
  {
    double dx = to_double(seg.vertices[0][0] - seg.vertices[1][0]);
    double dy = to_double(seg.vertices[0][1] - seg.vertices[1][1]);
    double dz = to_double(seg.vertices[0][2] - seg.vertices[1][2]);
    len = std::sqrt(dx * dx + dy * dy + dz * dz);
  }
  CHECK(sigma_measure(seg, 2, 1) == doctest::Approx(len / (std::sqrt(3.0) / 2.0)));
}

TEST_CASE("project_Cbar") {
  ProjectedMatrix dice = project_Cbar(dice_C());
  CHECK(dice.rho == 1);
  REQUIRE(dice.det_cbar_squared.has_value());
  CHECK(*dice.det_cbar_squared == Rational(9, 8));

  ProjectedMatrix planes = project_Cbar(planes_C());
  CHECK(planes.rho == 1);
  // cbar = (+-1/sqrt(2), -+1/sqrt(2), 0) projected onto the first 2 coords
  CHECK(std::abs(planes.cbar(0, 0)) == doctest::Approx(1.0 / std::sqrt(2.0)));
  CHECK(std::abs(planes.cbar(0, 1)) == doctest::Approx(1.0 / std::sqrt(2.0)));
  CHECK(planes.cbar(0, 0) * planes.cbar(0, 1) < 0);

  // a single ray has nothing to project
  auto jets = sheet_jets({P("2 - x - y", xy)}, ones(2));
  DirectionMatrix S = direction_matrix(jets, ones(2));
  ProjectedMatrix ray = project_Cbar(S);
  CHECK(ray.rho == 0);
}

TEST_CASE("det C determinant identity for n = d") {
  // |det C| = sqrt(d+1) |det cbar| whenever C is square
  DirectionMatrix D = dice_C();
  std::vector<std::vector<Rational>> m = D.rows;
  Rational detC = rational_determinant(m);
  ProjectedMatrix pr = project_Cbar(D);
  REQUIRE(pr.det_cbar_squared.has_value());
  double lhs = std::abs(to_double(detC));
  double rhs = std::sqrt(2.0) * std::sqrt(to_double(*pr.det_cbar_squared));
  CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
  CHECK(detC == Rational(-3, 2));
}

TEST_CASE("rational_rank") {
  CHECK(rational_rank({{Rational(1), Rational(2)}, {Rational(2), Rational(4)}}) == 1);
  CHECK(rational_rank({{Rational(1), Rational(2)}, {Rational(2), Rational(1)}}) == 2);
  CHECK(rational_rank({{Rational(0), Rational(0)}}) == 0);
}
