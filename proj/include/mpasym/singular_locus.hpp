#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "mpasym/gf_model.hpp"
#include "mpasym/mpoly.hpp"

namespace mpasym {

/// Second-order local data of one sheet z_{d+1} = u_j(z_hat) of the
/// singular variety, stored for v_j = 1/u_j.  Exact rationals throughout.
struct SheetJet {
  Rational v_value;                         // v_j at z_hat*, equals 1/z*_{d+1}
  std::vector<Rational> grad_v;             // d entries
  std::vector<std::vector<Rational>> hess_v;  // d x d, symmetric
  bool condition_ii_ok = true;              // false when some dv_j/dz_k = 0
};

struct MinimalityStatus {
  enum class Kind { Pass, Fail, Unchecked } kind = Kind::Unchecked;
  double margin = 0;  // Pass: min over samples of |root| - |z*_{d+1}|
  std::vector<std::complex<double>> witness;  // Fail: point of V inside the polydisk
  long samples = 0;
};

struct MultiplePointData {
  PointSpec point;
  int multiplicity = 0;  // n + 1
  std::vector<SheetJet> sheets;
  Rational phi_value;
  MinimalityStatus minimality;
};

/// Result of the 2D candidate search for common zeros of H, H_z, H_w.
struct DoublePointSearch {
  std::vector<PointSpec> positive_real;  // exact when snapping verifies
  std::vector<std::vector<std::complex<double>>> other_solutions;
  bool positive_dimensional = false;
};

/// Locates all common zeros of H and grad H for bivariate H by resultant
/// elimination, numeric root isolation, and Newton refinement of grad H = 0
/// to residual 1e-12.  Real positive-quadrant solutions are snapped to
/// rationals and verified exactly when possible.
DoublePointSearch find_double_points_2d(const RPoly& H);

/// Multiplicity of z*_{d+1} as a root of z -> H(z_hat*, z), exact.
/// Throws std::invalid_argument when H(point) != 0.
int multiplicity_at(const RPoly& H, const PointSpec& point);

/// Implicit second-order jets of v_j = 1/u_j for each supplied smooth
/// factor vanishing at the point.  Throws UnsupportedError when a factor
/// has vanishing last-variable derivative there.
std::vector<SheetJet> sheet_jets(const std::vector<RPoly>& factors, const PointSpec& point);

/// Local data of a 2D double point of a possibly irreducible H.
struct DoublePointLocal {
  // c values are the scaled tangent slopes z* w* v_j'(z*), the roots of
  // (w*^2 H_ww) x^2 - 2 (z* w* H_zw) x + (z*^2 H_zz) = 0
  std::optional<Rational> c0_exact, c1_exact;  // set when the discriminant is a square
  double c0 = 0, c1 = 0;
  Rational det_hess;  // unscaled Hessian determinant of H at the point
  Rational h_ww;
  bool degenerate = false;  // c0 == c1 (tangent sheets)
  std::vector<SheetJet> sheets;  // first-order data only; hess_v unset (zero)
};

DoublePointLocal double_point_local_2d(const RPoly& H, const PointSpec& point);

/// phi(z*) = (n+1)! / (-z*_{d+1})^{n+1} * G(z*) / d^{n+1}H/dz_{d+1}^{n+1}(z*).
Rational compute_phi(const RPoly& G, const RPoly& H, const PointSpec& point, int n);

/// Sampling heuristic: angular grid on the torus through the point plus
/// 9 inner radial shells; every root of H(z_hat, .) must stay outside the
/// polydisk except for the point itself.  Never a proof.
MinimalityStatus check_strict_minimality(const RPoly& H, const PointSpec& point, int grid);

/// Full local analysis at a supplied point: multiplicity, sheets (from
/// factors, or the 2D double-point fallback, or a single smooth sheet),
/// phi, minimality.
MultiplePointData analyze_multiple_point(const RationalGF& gf, const PointSpec& point,
                                         const ProblemOptions& options);

}  // namespace mpasym
