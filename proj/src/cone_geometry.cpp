#include "mpasym/cone_geometry.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "mpasym/univariate.hpp"

namespace mpasym {

namespace {

using RMat = std::vector<std::vector<Rational>>;
using RVec = std::vector<Rational>;

// reduced row echelon form in place; returns pivot column list
std::vector<size_t> rref(RMat& m) {
  std::vector<size_t> pivots;
  if (m.empty()) return pivots;
  size_t rows = m.size(), cols = m.front().size(), r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t piv = r;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[r]);
    Rational lead = m[r][c];
    for (size_t k = c; k < cols; ++k) m[r][k] /= lead;
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      Rational f = m[i][c];
      for (size_t k = c; k < cols; ++k) m[i][k] -= f * m[r][k];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

// right nullspace basis of m (rows x cols)
std::vector<RVec> nullspace(RMat m, size_t cols) {
  std::vector<size_t> pivots = rref(m);
  std::vector<bool> is_pivot(cols, false);
  for (size_t c : pivots) is_pivot[c] = true;
  std::vector<RVec> basis;
  for (size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    RVec v(cols, Rational(0));
    v[free] = 1;
    for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

// unique solution of M x = rhs when rank(M) = #cols; nullopt otherwise
std::optional<RVec> solve_unique(RMat m, RVec rhs, size_t cols) {
  for (size_t i = 0; i < m.size(); ++i) m[i].push_back(rhs[i]);
  std::vector<size_t> pivots = rref(m);
  // inconsistent if a pivot lands in the rhs column
  if (!pivots.empty() && pivots.back() == cols) return std::nullopt;
  if (pivots.size() != cols) return std::nullopt;
  RVec x(cols, Rational(0));
  for (size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = m[r][cols];
  return x;
}

Rational dot(const RVec& a, const RVec& b) {
  Rational s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// vertices of {alpha >= 0 : alpha C = delta} by basic-solution enumeration
std::vector<RVec> feasible_vertices(const DirectionMatrix& C, const RVec& delta) {
  const size_t np1 = size_t(C.nplus1()), dp1 = size_t(C.dplus1());
  std::vector<RVec> vertices;
  for (unsigned mask = 1; mask < (1u << np1); ++mask) {
    std::vector<size_t> support;
    for (size_t j = 0; j < np1; ++j)
      if (mask & (1u << j)) support.push_back(j);
    if (support.size() > dp1) continue;
    RMat M(dp1, RVec(support.size()));
    for (size_t e = 0; e < dp1; ++e)
      for (size_t t = 0; t < support.size(); ++t) M[e][t] = C.rows[support[t]][e];
    RVec rhs(delta.begin(), delta.end());
    auto x = solve_unique(std::move(M), rhs, support.size());
    if (!x) continue;
    bool nonneg = true;
    for (const Rational& v : *x) nonneg = nonneg && v >= 0;
    if (!nonneg) continue;
    RVec alpha(np1, Rational(0));
    for (size_t t = 0; t < support.size(); ++t) alpha[support[t]] = (*x)[t];
    if (std::find(vertices.begin(), vertices.end(), alpha) == vertices.end())
      vertices.push_back(std::move(alpha));
  }
  return vertices;
}

int affine_dimension(const std::vector<RVec>& pts) {
  if (pts.size() <= 1) return 0;
  RMat diffs;
  for (size_t i = 1; i < pts.size(); ++i) {
    RVec d(pts[i].size());
    for (size_t k = 0; k < d.size(); ++k) d[k] = pts[i][k] - pts[0][k];
    diffs.push_back(std::move(d));
  }
  return rational_rank(std::move(diffs));
}

}  // namespace

int rational_rank(std::vector<std::vector<Rational>> m) {
  return int(rref(m).size());
}

Eigen::MatrixXd DirectionMatrix::to_double() const {
  Eigen::MatrixXd m(nplus1(), dplus1());
  for (int i = 0; i < nplus1(); ++i)
    for (int j = 0; j < dplus1(); ++j) m(i, j) = mpasym::to_double(rows[size_t(i)][size_t(j)]);
  return m;
}

DirectionMatrix direction_matrix(const std::vector<SheetJet>& sheets, const PointSpec& point) {
  if (sheets.empty()) throw std::invalid_argument("direction_matrix: no sheets");
  const int d = point.dim() - 1;
  const Rational& last = point.coordinates.back();
  DirectionMatrix C;
  for (const SheetJet& s : sheets) {
    RVec row(size_t(d) + 1);
    for (int k = 0; k < d; ++k)
      row[size_t(k)] = point.coordinates[size_t(k)] * last * s.grad_v[size_t(k)];
    row[size_t(d)] = 1;
    C.rows.push_back(std::move(row));
  }
  return C;
}

Cone cone_hull(const DirectionMatrix& C) {
  Cone cone;
  cone.dim = C.dplus1();
  // distinct rows (all normalized by last entry 1 already)
  std::vector<RVec> rows;
  for (const RVec& r : C.rows)
    if (std::find(rows.begin(), rows.end(), r) == rows.end()) rows.push_back(r);
  for (size_t i = 0; i < rows.size(); ++i) {
    DirectionMatrix others;
    for (size_t j = 0; j < rows.size(); ++j)
      if (j != i) others.rows.push_back(rows[j]);
    bool extreme = others.rows.empty() || feasible_vertices(others, rows[i]).empty();
    if (!extreme) continue;
    // integer normalization
    RVec ray = rows[i];
    Integer l = 1;
    for (const Rational& c : ray) l = boost::multiprecision::lcm(l, denominator(c));
    Integer g = 0;
    for (Rational& c : ray) {
      c *= Rational(l);
      g = boost::multiprecision::gcd(g, numerator(c));
    }
    if (g != 0)
      for (Rational& c : ray) c /= Rational(g);
    cone.rays.push_back(std::move(ray));
  }
  return cone;
}

Classification classify(const DirectionMatrix& C, double tol) {
  Classification cl;
  const int dp1 = C.dplus1(), np1 = C.nplus1();

  Eigen::JacobiSVD<Eigen::MatrixXd> svd(C.to_double());
  double smax = svd.singularValues().size() ? svd.singularValues()(0) : 0.0;
  int num_rank = 0;
  for (int i = 0; i < svd.singularValues().size(); ++i)
    if (svd.singularValues()(i) > tol * smax) ++num_rank;

  int exact_rank = rational_rank(C.rows);
  if (exact_rank != num_rank)
    throw std::runtime_error(
        "classify: numeric rank disagrees with exact rank; adjust rank_tolerance");

  cl.rank = exact_rank;
  cl.nondegenerate = (cl.rank == dp1);
  cl.transverse = (cl.rank == np1);
  cl.completely_nondegenerate = cl.nondegenerate && cl.transverse;
  cl.single_ray = true;
  for (const auto& row : C.rows) cl.single_ray = cl.single_ray && row == C.rows.front();
  cl.rho = project_Cbar(C).rho;
  return cl;
}

ConePosition cone_membership(const DirectionMatrix& C, const std::vector<Rational>& r) {
  if (int(r.size()) != C.dplus1())
    throw std::invalid_argument("cone_membership: direction dimension mismatch");
  if (r.back() <= 0) throw InputError("cone_membership: last direction entry must be positive");
  RVec delta(r.size());
  for (size_t i = 0; i < r.size(); ++i) delta[i] = r[i] / r.back();
  std::vector<RVec> vertices = feasible_vertices(C, delta);
  if (vertices.empty()) return ConePosition::Outside;
  // barycenter lies in the relative interior: a zero coordinate there is
  // zero on the whole feasible set
  RVec bary(size_t(C.nplus1()), Rational(0));
  for (const RVec& v : vertices)
    for (size_t k = 0; k < bary.size(); ++k) bary[k] += v[k];
  for (const Rational& b : bary)
    if (b == 0) return ConePosition::Boundary;
  return ConePosition::Interior;
}

SolutionPolytope solve_A(const DirectionMatrix& C, const std::vector<Rational>& delta) {
  if (int(delta.size()) != C.dplus1())
    throw std::invalid_argument("solve_A: direction dimension mismatch");
  SolutionPolytope P;
  P.vertices = feasible_vertices(C, delta);
  if (P.vertices.empty()) throw UnsupportedError("solve_A: direction outside the cone");
  P.affine_dim = affine_dimension(P.vertices);
  return P;
}

double polytope_volume(const std::vector<std::vector<Rational>>& vertices, int m) {
  if (m == 0) return 1.0;
  if (m > 3) throw UnsupportedError("polytope_volume: dimension > 3 unsupported");
  if (vertices.empty()) return 0.0;

  // orthonormal coordinates on the affine hull
  const size_t np1 = vertices.front().size();
  std::vector<Eigen::VectorXd> pts;
  for (const auto& v : vertices) {
    Eigen::VectorXd p(np1);
    for (size_t k = 0; k < np1; ++k) p(long(k)) = to_double(v[k]);
    pts.push_back(p);
  }
  std::vector<Eigen::VectorXd> basis;
  for (size_t i = 1; i < pts.size() && int(basis.size()) < m; ++i) {
    Eigen::VectorXd w = pts[i] - pts[0];
    for (const auto& b : basis) w -= b.dot(w) * b;
    if (w.norm() > 1e-12) basis.push_back(w.normalized());
  }
  if (int(basis.size()) != m) throw std::runtime_error("polytope_volume: degenerate vertex set");
  std::vector<Eigen::VectorXd> proj;
  for (const auto& p : pts) {
    Eigen::VectorXd q(m);
    for (int k = 0; k < m; ++k) q(k) = basis[size_t(k)].dot(p - pts[0]);
    proj.push_back(q);
  }

  double vol = 0;
  if (m == 1) {
    double lo = proj.front()(0), hi = lo;
    for (const auto& q : proj) {
      lo = std::min(lo, q(0));
      hi = std::max(hi, q(0));
    }
    vol = hi - lo;
  } else if (m == 2) {
    Eigen::Vector2d c = Eigen::Vector2d::Zero();
    for (const auto& q : proj) c += q.head<2>();
    c /= double(proj.size());
    std::vector<Eigen::Vector2d> ordered;
    for (const auto& q : proj) ordered.push_back(q.head<2>());
    std::sort(ordered.begin(), ordered.end(), [&](const auto& a, const auto& b) {
      return std::atan2(a(1) - c(1), a(0) - c(0)) < std::atan2(b(1) - c(1), b(0) - c(0));
    });
    for (size_t i = 0; i < ordered.size(); ++i) {
      const auto& a = ordered[i];
      const auto& b = ordered[(i + 1) % ordered.size()];
      vol += 0.5 * (a(0) * b(1) - b(0) * a(1) - c(0) * (b(1) - a(1)) + c(1) * (b(0) - a(0)));
    }
    vol = std::abs(vol);
  } else {  // m == 3: facet enumeration against the centroid
    Eigen::Vector3d c = Eigen::Vector3d::Zero();
    for (const auto& q : proj) c += q.head<3>();
    c /= double(proj.size());
    std::vector<Eigen::Vector4d> planes;  // (normal, offset), deduplicated
    for (size_t i = 0; i < proj.size(); ++i)
      for (size_t j = i + 1; j < proj.size(); ++j)
        for (size_t k = j + 1; k < proj.size(); ++k) {
          Eigen::Vector3d nvec = (proj[j].head<3>() - proj[i].head<3>())
                                     .cross(proj[k].head<3>() - proj[i].head<3>());
          if (nvec.norm() < 1e-12) continue;
          nvec.normalize();
          double off = nvec.dot(proj[i].head<3>());
          bool pos = true, neg = true;
          for (const auto& q : proj) {
            double s = nvec.dot(q.head<3>()) - off;
            if (s > 1e-10) pos = false;
            if (s < -1e-10) neg = false;
          }
          if (!pos && !neg) continue;
          if (neg && !pos) {
            nvec = -nvec;
            off = -off;
          }
          bool dup = false;
          for (const auto& pl : planes)
            if ((pl.head<3>() - nvec).norm() < 1e-9 && std::abs(pl(3) - off) < 1e-9) dup = true;
          if (dup) continue;
          planes.push_back((Eigen::Vector4d() << nvec, off).finished());
          // polygon of on-plane points, ordered around its centroid
          std::vector<Eigen::Vector3d> face;
          for (const auto& q : proj)
            if (std::abs(nvec.dot(q.head<3>()) - off) <= 1e-10) face.push_back(q.head<3>());
          if (face.size() < 3) continue;
          Eigen::Vector3d fc = Eigen::Vector3d::Zero();
          for (const auto& f : face) fc += f;
          fc /= double(face.size());
          Eigen::Vector3d u = (face[0] - fc).normalized();
          Eigen::Vector3d v = nvec.cross(u);
          std::sort(face.begin(), face.end(), [&](const auto& a, const auto& b) {
            return std::atan2(v.dot(a - fc), u.dot(a - fc)) <
                   std::atan2(v.dot(b - fc), u.dot(b - fc));
          });
          double area = 0;
          for (size_t t = 0; t < face.size(); ++t) {
            const auto& a = face[t];
            const auto& b = face[(t + 1) % face.size()];
            area += 0.5 * nvec.dot((a - fc).cross(b - fc));
          }
          vol += std::abs(area) * std::abs(nvec.dot(c) - off) / 3.0;
        }
  }
  return vol;
}

double sigma_measure(const SolutionPolytope& A, int n, int d_eff) {
  const int m = n - d_eff;
  if (A.affine_dim < m) return 0.0;  // degenerate slice (wall of the cone)
  if (A.affine_dim > m)
    throw std::invalid_argument("sigma_measure: polytope dimension inconsistent with n - d");
  const double simplex_factor =
      factorial(unsigned(n)).convert_to<double>() / std::sqrt(double(n + 1));
  return polytope_volume(A.vertices, m) * simplex_factor;
}

ProjectedMatrix project_Cbar(const DirectionMatrix& C) {
  const size_t np1 = size_t(C.nplus1()), dp1 = size_t(C.dplus1());
  const size_t d = dp1 - 1;
  ProjectedMatrix out;

  // A0 = left null space of C (automatically orthogonal to 1 through the
  // last, all-ones column)
  RMat Ct(dp1, RVec(np1));
  for (size_t i = 0; i < np1; ++i)
    for (size_t j = 0; j < dp1; ++j) Ct[j][i] = C.rows[i][j];
  std::vector<RVec> a0 = nullspace(Ct, np1);

  // A_perp = vectors orthogonal to 1 and to every A0 basis vector
  RMat constraints;
  constraints.push_back(RVec(np1, Rational(1)));
  for (const RVec& v : a0) constraints.push_back(v);
  std::vector<RVec> raw = nullspace(constraints, np1);

  // exact Gram-Schmidt, normalized at the end
  std::vector<RVec> ortho;
  std::vector<Rational> norms2;
  for (RVec w : raw) {
    for (size_t b = 0; b < ortho.size(); ++b) {
      Rational f = dot(ortho[b], w) / norms2[b];
      for (size_t k = 0; k < np1; ++k) w[k] -= f * ortho[b][k];
    }
    Rational n2 = dot(w, w);
    if (n2 == 0) continue;
    ortho.push_back(std::move(w));
    norms2.push_back(n2);
  }
  out.rho = int(ortho.size());

  out.basis.resize(out.rho, long(np1));
  for (int i = 0; i < out.rho; ++i) {
    double inv = 1.0 / std::sqrt(to_double(norms2[size_t(i)]));
    for (size_t k = 0; k < np1; ++k) out.basis(i, long(k)) = to_double(ortho[size_t(i)][k]) * inv;
  }

  // columns of C projected onto A_perp, coordinates in the orthonormal basis
  RMat bc(size_t(out.rho), RVec(d));  // exact b_i . col_k
  for (int i = 0; i < out.rho; ++i)
    for (size_t k = 0; k < d; ++k) {
      Rational s = 0;
      for (size_t j = 0; j < np1; ++j) s += ortho[size_t(i)][j] * C.rows[j][k];
      bc[size_t(i)][k] = s;
    }
  out.cbar.resize(out.rho, long(d));
  for (int i = 0; i < out.rho; ++i) {
    double inv = 1.0 / std::sqrt(to_double(norms2[size_t(i)]));
    for (size_t k = 0; k < d; ++k) out.cbar(i, long(k)) = to_double(bc[size_t(i)][k]) * inv;
  }

  if (size_t(out.rho) == d) {
    // Gram determinant of the projected columns: exact |det cbar|^2
    RMat gram(d, RVec(d, Rational(0)));
    for (size_t k = 0; k < d; ++k)
      for (size_t l = 0; l < d; ++l) {
        Rational s = 0;
        for (int i = 0; i < out.rho; ++i)
          s += bc[size_t(i)][k] * bc[size_t(i)][l] / norms2[size_t(i)];
        gram[k][l] = s;
      }
    out.det_cbar_squared = rational_determinant(std::move(gram));
  }
  return out;
}

}  // namespace mpasym
