#pragma once

#include <Eigen/Dense>

#include <optional>
#include <vector>

#include "mpasym/singular_locus.hpp"

namespace mpasym {

/// (n+1) x (d+1) matrix of logarithmic normal directions; row j comes from
/// sheet j, last column identically 1.
struct DirectionMatrix {
  std::vector<std::vector<Rational>> rows;

  int nplus1() const { return int(rows.size()); }
  int dplus1() const { return rows.empty() ? 0 : int(rows.front().size()); }
  Eigen::MatrixXd to_double() const;
};

DirectionMatrix direction_matrix(const std::vector<SheetJet>& sheets, const PointSpec& point);

/// Positive hull of the rows; rays are a minimal generating set with
/// integer-normalized coordinates when the inputs are rational.
struct Cone {
  std::vector<std::vector<Rational>> rays;
  int dim = 0;
};

Cone cone_hull(const DirectionMatrix& C);

struct Classification {
  int rank = 0;  // rank of C
  int rho = 0;   // rank of cbar = dim A_perp
  bool nondegenerate = false;            // rank = d+1
  bool transverse = false;               // rank = n+1
  bool completely_nondegenerate = false; // both (forces n = d)
  bool single_ray = false;               // all rows equal
};

/// Rank by singular values with relative threshold tol, cross-checked
/// against the exact rational rank; disagreement throws.
Classification classify(const DirectionMatrix& C, double tol = 1e-9);

enum class ConePosition { Interior, Boundary, Outside };

/// Exact membership of direction r (r_{d+1} > 0) in the cone: feasibility
/// of alpha C = r / r_{d+1}, alpha in the simplex.  Boundary means every
/// feasible alpha has a zero coordinate.
ConePosition cone_membership(const DirectionMatrix& C, const std::vector<Rational>& r);

/// Vertex representation of {alpha in simplex : alpha C = delta}.
struct SolutionPolytope {
  std::vector<std::vector<Rational>> vertices;
  int affine_dim = 0;
};

/// Exact basic-feasible-solution enumeration.  Throws UnsupportedError
/// when delta lies outside the cone.
SolutionPolytope solve_A(const DirectionMatrix& C, const std::vector<Rational>& delta);

/// Euclidean m-volume of the convex hull of the given points inside its
/// affine hull; a singleton (m = 0) gives 1.  Supported for m <= 3.
double polytope_volume(const std::vector<std::vector<Rational>>& vertices, int m);

/// Complementary measure: (n - d_eff)-volume of the polytope divided by
/// the n-volume sqrt(n+1)/n! of the simplex; a singleton gives
/// n!/sqrt(n+1).  Supported for n - d_eff <= 3.
double sigma_measure(const SolutionPolytope& A, int n, int d_eff);

/// Orthonormal basis of A_perp (inside the sum-zero hyperplane) and the
/// projected matrix cbar (rho x d).  When rho = d the squared determinant
/// is also available exactly as a Gram determinant.
struct ProjectedMatrix {
  Eigen::MatrixXd basis;  // rho x (n+1), orthonormal rows, each sum zero
  Eigen::MatrixXd cbar;   // rho x d
  int rho = 0;
  std::optional<Rational> det_cbar_squared;
};

ProjectedMatrix project_Cbar(const DirectionMatrix& C);

/// Exact rank of a rational matrix (Gaussian elimination).
int rational_rank(std::vector<std::vector<Rational>> m);

}  // namespace mpasym
