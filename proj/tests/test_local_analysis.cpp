#include <cmath>

#include "doctest.h"
#include "helpers.hpp"
#include "mpasym/local_analysis.hpp"

using namespace mpasym;
using namespace mpasym::testing;

namespace {

const std::vector<std::string> zw = {"z", "w"};
const std::vector<std::string> xyz = {"x", "y", "z"};

std::vector<SheetJet> planes_jets() {
  return sheet_jets({P("4 - 2*x - y - z", xyz), P("4 - x - 2*y - z", xyz)}, ones(3));
}

}  // namespace

TEST_CASE("q_matrix single affine sheet") {
  // v(z) = 2 - z: Q = -2 exactly (phase curvature of -log v on the circle)
  auto jets = sheet_jets({P("1 - 2*w + z*w", zw)}, ones(2));
  REQUIRE(jets.size() == 1);
  CHECK(jets[0].v_value == Rational(1));
  CHECK(jets[0].grad_v == std::vector<Rational>{Rational(-1)});
  QMatrix Q = q_matrix(jets, {Rational(1)}, ones(2));
  REQUIRE(Q.dim() == 1);
  CHECK(Q.exact[0][0] == Rational(-2));
}

TEST_CASE("q_matrix entry sum for the two planes") {
  auto jets = planes_jets();
  for (auto alpha : {std::vector<Rational>{Rational(1, 2), Rational(1, 2)},
                     std::vector<Rational>{Rational(1, 4), Rational(3, 4)},
                     std::vector<Rational>{Rational(1), Rational(0)}}) {
    QMatrix Q = q_matrix(jets, alpha, ones(3));
    Rational sum = 0;
    for (const auto& row : Q.exact)
      for (const auto& e : row) sum += e;
    CHECK(sum == Rational(12));
  }
}

TEST_CASE("q_matrix at a simplex vertex depends only on that sheet") {
  auto jets = planes_jets();
  QMatrix Qv = q_matrix(jets, {Rational(1), Rational(0)}, ones(3));
  QMatrix Q0 = q_matrix({jets[0]}, {Rational(1)}, ones(3));
  CHECK(Qv.exact == Q0.exact);
}

TEST_CASE("m_matrix determinant values") {
  auto jets = planes_jets();
  DirectionMatrix C = direction_matrix(jets, ones(3));
  ProjectedMatrix pr = project_Cbar(C);
  QMatrix Q = q_matrix(jets, {Rational(1, 2), Rational(1, 2)}, ones(3));
  Eigen::MatrixXcd M = m_matrix(Q, pr);
  REQUIRE(M.rows() == 3);
  SqrtDet sd = sqrt_det(M);
  CHECK(std::abs(sd.det - std::complex<double>(6.0, 0.0)) <= 1e-9);
  CHECK(std::abs(sd.value * sd.value - sd.det) <= 1e-9);
}

TEST_CASE("det M equals det(cbar)^2 in the completely nondegenerate case") {
  const std::vector<std::string> xy = {"x", "y"};
  auto jets = sheet_jets({P("1 - 1/3*x - 2/3*y", xy), P("1 - 2/3*x - 1/3*y", xy)}, ones(2));
  DirectionMatrix C = direction_matrix(jets, ones(2));
  ProjectedMatrix pr = project_Cbar(C);
  REQUIRE(pr.det_cbar_squared.has_value());
  CHECK(*pr.det_cbar_squared == Rational(9, 8));
  QMatrix Q = q_matrix(jets, {Rational(1, 2), Rational(1, 2)}, ones(2));
  Eigen::MatrixXcd M = m_matrix(Q, pr);
  SqrtDet sd = sqrt_det(M);
  CHECK(std::abs(sd.det - std::complex<double>(9.0 / 8.0, 0.0)) <= 1e-10);
}

TEST_CASE("m_matrix reduces to Q when rho = 0") {
  const std::vector<std::string> xy = {"x", "y"};
  auto jets = sheet_jets({P("2 - x - y", xy)}, ones(2));
  DirectionMatrix C = direction_matrix(jets, ones(2));
  ProjectedMatrix pr = project_Cbar(C);
  CHECK(pr.rho == 0);
  QMatrix Q = q_matrix(jets, {Rational(1)}, ones(2));
  Eigen::MatrixXcd M = m_matrix(Q, pr);
  REQUIRE(M.rows() == 1);
  CHECK(std::abs(M(0, 0) - std::complex<double>(to_double(Q.exact[0][0]), 0.0)) <= 1e-12);
}

TEST_CASE("sqrt_det basics") {
  Eigen::MatrixXcd I = Eigen::MatrixXcd::Identity(3, 3);
  SqrtDet si = sqrt_det(I);
  CHECK(std::abs(si.value - std::complex<double>(1, 0)) <= 1e-12);

  Eigen::MatrixXcd D = Eigen::MatrixXcd::Zero(2, 2);
  D(0, 0) = 4.0;
  D(1, 1) = 9.0;
  SqrtDet sd = sqrt_det(D);
  CHECK(std::abs(sd.value - std::complex<double>(6, 0)) <= 1e-12);
  CHECK(std::abs(sd.det - std::complex<double>(36, 0)) <= 1e-12);

  Eigen::MatrixXcd Z = Eigen::MatrixXcd::Zero(2, 2);
  CHECK_THROWS_AS(sqrt_det(Z), std::domain_error);
}

TEST_CASE("sqrt_det uses principal roots, not sqrt of det") {
  // repeated eigenvalue -1 + 0.3i near the negative axis: the product of
  // principal roots lands on the opposite side from sqrt(det)
  Eigen::MatrixXcd A = Eigen::MatrixXcd::Zero(2, 2);
  A(0, 0) = std::complex<double>(-1.0, 0.3);
  A(1, 1) = std::complex<double>(-1.0, 0.3);
  SqrtDet s = sqrt_det(A);
  CHECK(s.value.real() < 0);
  CHECK(std::sqrt(s.det).real() > 0);
  CHECK(std::abs(s.value * s.value - s.det) <= 1e-12);
}

TEST_CASE("simplex_quadrature normalized moments") {
  auto one = [](const std::vector<double>&) { return std::complex<double>(1, 0); };
  CHECK(std::abs(simplex_quadrature(one, 2, 5) - std::complex<double>(1, 0)) <= 1e-12);

  auto first = [](const std::vector<double>& a) { return std::complex<double>(a[0], 0); };
  CHECK(std::abs(simplex_quadrature(first, 1, 8) - std::complex<double>(0.5, 0)) <= 1e-6);

  // int_0^1 (1 + 3t)^{-1/2} dt = 2/3 with alpha = (1-t, t)
  auto g = [](const std::vector<double>& a) {
    return std::complex<double>(1.0 / std::sqrt(a[0] + 4.0 * (1.0 - a[0])), 0);
  };
  std::complex<double> v6 = simplex_quadrature(g, 1, 6);
  std::complex<double> v7 = simplex_quadrature(g, 1, 7);
  CHECK(std::abs(v6 - v7) <= 1e-6);
  CHECK(std::abs(v7 - std::complex<double>(2.0 / 3.0, 0)) <= 1e-5);
}
