#include "mpasym/singular_locus.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "mpasym/univariate.hpp"

namespace mpasym {

namespace {

std::complex<double> ceval(const RPoly& p, const std::vector<std::complex<double>>& pt) {
  std::complex<double> acc = 0;
  for (const auto& [m, c] : p.terms()) {
    std::complex<double> t(to_double(c), 0.0);
    for (size_t v = 0; v < m.size(); ++v)
      for (int k = 0; k < m[v]; ++k) t *= pt[v];
    acc += t;
  }
  return acc;
}

double coeff_scale(const RPoly& p) {
  double s = 0;
  for (const auto& [m, c] : p.terms()) s += std::abs(to_double(c));
  return std::max(s, 1.0);
}

// multiplicity of x0 as a root of the rational univariate polynomial
int root_multiplicity(QPolyU p, const Rational& x0) {
  upoly_trim(p);
  int mult = 0;
  while (!p.empty() && upoly_eval(p, x0) == 0) {
    // synthetic division by (x - x0)
    QPolyU q(p.size() - 1);
    Rational carry = 0;
    for (size_t k = p.size(); k-- > 1;) {
      carry = p[k] + carry * x0;
      q[k - 1] = carry;
    }
    p = std::move(q);
    ++mult;
  }
  return mult;
}

}  // namespace

int multiplicity_at(const RPoly& H, const PointSpec& point) {
  if (point.dim() != H.nvars()) throw std::invalid_argument("multiplicity_at: dimension mismatch");
  std::vector<Rational> prefix(point.coordinates.begin(), point.coordinates.end() - 1);
  QPolyU u = restrict_last(H, prefix);
  const Rational& w = point.coordinates.back();
  if (upoly_eval(u, w) != 0) throw std::invalid_argument("multiplicity_at: H(point) != 0");
  return root_multiplicity(u, w);
}

std::vector<SheetJet> sheet_jets(const std::vector<RPoly>& factors, const PointSpec& point) {
  const int nv = point.dim();
  const int d = nv - 1;
  std::vector<SheetJet> out;
  for (const RPoly& Hj : factors) {
    if (Hj.nvars() != nv) throw std::invalid_argument("sheet_jets: dimension mismatch");
    if (poly_eval(Hj, point.coordinates) != 0)
      throw std::invalid_argument("sheet_jets: factor does not vanish at the point");
    Rational Hz = poly_eval(poly_diff(Hj, d), point.coordinates);
    if (Hz == 0)
      throw UnsupportedError(
          "sheet_jets: factor not solvable for the last variable at the point "
          "(vanishing derivative); try permuting variables");

    std::vector<Rational> Hk(size_t(d), Rational(0)), uk(size_t(d), Rational(0));
    auto dHk = std::vector<RPoly>(size_t(d), RPoly(nv));
    for (int k = 0; k < d; ++k) {
      dHk[size_t(k)] = poly_diff(Hj, k);
      Hk[size_t(k)] = poly_eval(dHk[size_t(k)], point.coordinates);
      uk[size_t(k)] = -Hk[size_t(k)] / Hz;
    }
    Rational Hzz = poly_eval(poly_diff(Hj, d, 2), point.coordinates);
    std::vector<Rational> Hkz(size_t(d), Rational(0));
    for (int k = 0; k < d; ++k)
      Hkz[size_t(k)] = poly_eval(poly_diff(dHk[size_t(k)], d), point.coordinates);

    SheetJet jet;
    jet.v_value = Rational(1) / point.coordinates.back();
    const Rational v = jet.v_value;
    jet.grad_v.resize(size_t(d));
    jet.hess_v.assign(size_t(d), std::vector<Rational>(size_t(d), Rational(0)));
    for (int k = 0; k < d; ++k) {
      jet.grad_v[size_t(k)] = -v * v * uk[size_t(k)];
      if (jet.grad_v[size_t(k)] == 0) jet.condition_ii_ok = false;
    }
    for (int k = 0; k < d; ++k)
      for (int l = k; l < d; ++l) {
        Rational Hkl = poly_eval(poly_diff(dHk[size_t(k)], l), point.coordinates);
        Rational ukl = -(Hkl + Hkz[size_t(k)] * uk[size_t(l)] + Hkz[size_t(l)] * uk[size_t(k)] +
                         Hzz * uk[size_t(k)] * uk[size_t(l)]) /
                       Hz;
        Rational hv = 2 * v * v * v * uk[size_t(k)] * uk[size_t(l)] - v * v * ukl;
        jet.hess_v[size_t(k)][size_t(l)] = hv;
        jet.hess_v[size_t(l)][size_t(k)] = hv;
      }
    out.push_back(std::move(jet));
  }
  return out;
}

DoublePointLocal double_point_local_2d(const RPoly& H, const PointSpec& point) {
  if (H.nvars() != 2) throw std::invalid_argument("double_point_local_2d: need 2 variables");
  if (multiplicity_at(H, point) != 2)
    throw std::invalid_argument("double_point_local_2d: point is not a double point");
  const Rational& zs = point.coordinates[0];
  const Rational& ws = point.coordinates[1];
  Rational Hzz = poly_eval(poly_diff(poly_diff(H, 0), 0), point.coordinates);
  Rational Hzw = poly_eval(poly_diff(poly_diff(H, 0), 1), point.coordinates);
  Rational Hww = poly_eval(poly_diff(poly_diff(H, 1), 1), point.coordinates);
  if (Hww == 0)
    throw UnsupportedError(
        "double_point_local_2d: vanishing second derivative in the last variable; "
        "try swapping variables");

  DoublePointLocal out;
  out.det_hess = Hzz * Hww - Hzw * Hzw;
  out.h_ww = Hww;

  // scaled quadratic for the c values
  Rational A = ws * ws * Hww;
  Rational B = zs * ws * Hzw;
  Rational C = zs * zs * Hzz;
  Rational disc = B * B - A * C;
  if (disc < 0)
    throw UnsupportedError("double_point_local_2d: tangent directions are not real");
  out.degenerate = (disc == 0);
  if (auto sq = exact_sqrt(disc)) {
    Rational r0 = (B - *sq) / A, r1 = (B + *sq) / A;
    if (r0 > r1) std::swap(r0, r1);
    out.c0_exact = r0;
    out.c1_exact = r1;
    out.c0 = to_double(r0);
    out.c1 = to_double(r1);
  } else {
    double a = to_double(A), b = to_double(B), c = to_double(C);
    double s = std::sqrt(b * b - a * c);
    out.c0 = (b - s) / a;
    out.c1 = (b + s) / a;
    if (out.c0 > out.c1) std::swap(out.c0, out.c1);
  }

  // first-order sheet data: c_j = z* w* v_j'(z*)
  for (int j = 0; j < 2; ++j) {
    SheetJet jet;
    jet.v_value = Rational(1) / ws;
    Rational c = (j == 0) ? (out.c0_exact ? *out.c0_exact : rational_from_double(out.c0))
                          : (out.c1_exact ? *out.c1_exact : rational_from_double(out.c1));
    jet.grad_v = {c / (zs * ws)};
    jet.hess_v = {{Rational(0)}};
    jet.condition_ii_ok = (c != 0);
    out.sheets.push_back(std::move(jet));
  }
  return out;
}

Rational compute_phi(const RPoly& G, const RPoly& H, const PointSpec& point, int n) {
  Rational deriv = poly_eval(poly_diff(H, H.nvars() - 1, n + 1), point.coordinates);
  if (deriv == 0)
    throw std::invalid_argument("compute_phi: inconsistent multiplicity (vanishing derivative)");
  Rational g = poly_eval(G, point.coordinates);
  Rational denom = qpow(-point.coordinates.back(), n + 1) * deriv;
  return Rational(factorial(unsigned(n + 1))) * g / denom;
}

MinimalityStatus check_strict_minimality(const RPoly& H, const PointSpec& point, int grid) {
  const int nv = H.nvars();
  const int d = nv - 1;
  MinimalityStatus st;
  std::vector<double> coords = point.to_double();
  const double aw = std::abs(coords.back());
  const double scale = coeff_scale(H);
  const double two_pi = 2.0 * std::acos(-1.0);

  double min_margin = std::numeric_limits<double>::infinity();
  std::vector<std::complex<double>> zhat(size_t(d), std::complex<double>(0, 0));
  std::vector<int> idx(size_t(d), 0);
  for (int shell = 1; shell <= 10; ++shell) {
    double t = shell / 10.0;
    std::fill(idx.begin(), idx.end(), 0);
    for (;;) {
      for (int k = 0; k < d; ++k) {
        double theta = two_pi * idx[size_t(k)] / grid;
        zhat[size_t(k)] = std::polar(t * std::abs(coords[size_t(k)]), theta);
      }
      CPolyU u = restrict_last_complex(H, zhat);
      double umax = 0;
      for (const auto& c : u) umax = std::max(umax, std::abs(c));
      if (umax <= 1e-12 * scale) {
        // the whole fiber lies in V
        st.kind = MinimalityStatus::Kind::Fail;
        st.witness.assign(zhat.begin(), zhat.end());
        st.witness.push_back(std::complex<double>(coords.back(), 0.0));
        st.samples++;
        return st;
      }
      for (const std::complex<double>& root : upoly_roots(u)) {
        double dist = std::abs(root - std::complex<double>(coords.back(), 0.0));
        for (int k = 0; k < d; ++k)
          dist += std::abs(zhat[size_t(k)] - std::complex<double>(coords[size_t(k)], 0.0));
        if (dist < 1e-8 * std::max(1.0, aw)) continue;  // the point itself
        double margin = std::abs(root) - aw;
        if (margin <= 1e-9 * aw) {
          st.kind = MinimalityStatus::Kind::Fail;
          st.witness.assign(zhat.begin(), zhat.end());
          st.witness.push_back(root);
          st.samples++;
          return st;
        }
        min_margin = std::min(min_margin, margin);
      }
      st.samples++;
      int k = d - 1;
      while (k >= 0) {
        if (++idx[size_t(k)] < grid) break;
        idx[size_t(k)] = 0;
        --k;
      }
      if (k < 0) break;
    }
  }
  st.kind = MinimalityStatus::Kind::Pass;
  st.margin = std::isfinite(min_margin) ? min_margin : std::numeric_limits<double>::infinity();
  return st;
}

DoublePointSearch find_double_points_2d(const RPoly& H) {
  if (H.nvars() != 2) throw UnsupportedError("find_double_points_2d: automatic point discovery needs exactly 2 variables; supply the point");
  DoublePointSearch out;
  if (H.is_zero()) {
    out.positive_dimensional = true;
    return out;
  }
  if (H.degree() == 0) return out;  // nonzero constant, no zeros at all
  RPoly Hz = poly_diff(H, 0);
  RPoly Hw = poly_diff(H, 1);
  if (Hw.is_zero() || Hz.is_zero()) {
    // H depends on only one variable: any singular zero is a whole line
    int var = Hw.is_zero() ? 0 : 1;
    // gcd of H and its derivative in the only active variable
    QPolyU h(size_t(H.degree_in(var)) + 1, Rational(0));
    for (const auto& [m, c] : H.terms()) h[size_t(m[size_t(var)])] += c;
    QPolyU g = upoly_gcd(h, upoly_diff(h));
    if (upoly_degree(g) > 0) out.positive_dimensional = true;
    return out;
  }

  QPolyU R1 = resultant_bivariate(H, Hw, 1);
  QPolyU R2 = resultant_bivariate(H, Hz, 1);
  upoly_trim(R1);
  upoly_trim(R2);
  if (R1.empty() || R2.empty()) {
    out.positive_dimensional = true;  // H shares a factor with a partial: repeated factor
    return out;
  }
  QPolyU g = upoly_gcd(R1, R2);
  if (upoly_degree(g) <= 0) return out;

  const double scale = coeff_scale(H);
  RPoly Hzz = poly_diff(Hz, 0), Hzw = poly_diff(Hz, 1), Hww = poly_diff(Hw, 1);

  std::vector<std::vector<std::complex<double>>> found;
  for (std::complex<double> z0 : upoly_roots(g)) {
    CPolyU wp = restrict_last_complex(H, {z0});
    for (std::complex<double> w0 : upoly_roots(wp)) {
      std::vector<std::complex<double>> pt{z0, w0};
      if (std::abs(ceval(Hz, pt)) > 1e-5 * scale || std::abs(ceval(Hw, pt)) > 1e-5 * scale)
        continue;
      // Newton on grad H = 0
      for (int it = 0; it < 60; ++it) {
        std::complex<double> f1 = ceval(Hz, pt), f2 = ceval(Hw, pt);
        if (std::abs(f1) + std::abs(f2) < 1e-15 * scale) break;
        std::complex<double> a = ceval(Hzz, pt), b = ceval(Hzw, pt), c = ceval(Hww, pt);
        std::complex<double> det = a * c - b * b;
        if (std::abs(det) < 1e-14 * scale * scale) break;
        std::complex<double> dz = (c * f1 - b * f2) / det;
        std::complex<double> dw = (a * f2 - b * f1) / det;
        pt[0] -= dz;
        pt[1] -= dw;
      }
      if (std::abs(ceval(H, pt)) > 1e-12 * scale || std::abs(ceval(Hz, pt)) > 1e-12 * scale ||
          std::abs(ceval(Hw, pt)) > 1e-12 * scale)
        continue;
      bool dup = false;
      for (const auto& q : found)
        if (std::abs(q[0] - pt[0]) + std::abs(q[1] - pt[1]) < 1e-8) dup = true;
      if (dup) continue;
      found.push_back(pt);

      bool real_pos = pt[0].imag() == 0 || std::abs(pt[0].imag()) < 1e-9 * (1 + std::abs(pt[0]));
      real_pos = real_pos &&
                 (std::abs(pt[1].imag()) < 1e-9 * (1 + std::abs(pt[1]))) &&
                 pt[0].real() > 0 && pt[1].real() > 0;
      if (!real_pos) {
        out.other_solutions.push_back(pt);
        continue;
      }
      PointSpec ps;
      auto rz = snap_to_rational(pt[0].real());
      auto rw = snap_to_rational(pt[1].real());
      bool exact = false;
      if (rz && rw) {
        std::vector<Rational> cand{*rz, *rw};
        exact = poly_eval(H, cand) == 0 && poly_eval(Hz, cand) == 0 && poly_eval(Hw, cand) == 0;
        if (exact) ps.coordinates = cand;
      }
      if (!exact)
        ps.coordinates = {rational_from_double(pt[0].real()), rational_from_double(pt[1].real())};
      ps.exact = exact;
      out.positive_real.push_back(std::move(ps));
    }
  }
  return out;
}

MultiplePointData analyze_multiple_point(const RationalGF& gf, const PointSpec& point,
                                         const ProblemOptions& options) {
  const RPoly& H = gf.denominator;
  if (point.dim() != gf.nvars())
    throw InputError("point dimension does not match the generating function");
  if (poly_eval(H, point.coordinates) != 0)
    throw InputError("supplied point is not on the singular variety (H(point) != 0)");

  MultiplePointData mp;
  mp.point = point;
  mp.multiplicity = multiplicity_at(H, point);

  if (gf.has_factors()) {
    std::vector<RPoly> vanishing;
    for (const RPoly& f : gf.factors)
      if (poly_eval(f, point.coordinates) == 0) vanishing.push_back(f);
    mp.sheets = sheet_jets(vanishing, point);
    if (int(mp.sheets.size()) != mp.multiplicity)
      throw UnsupportedError(
          "factor multiplicity contributions do not add up to the point multiplicity");
  } else if (mp.multiplicity == 1) {
    mp.sheets = sheet_jets({H}, point);
  } else if (gf.nvars() == 2 && mp.multiplicity == 2) {
    mp.sheets = double_point_local_2d(H, point).sheets;
  } else {
    throw UnsupportedError(
        "multiplicity >= 3 or dimension > 2 without denominator_factors is unsupported");
  }

  mp.phi_value = compute_phi(gf.numerator, H, point, mp.multiplicity - 1);
  mp.minimality = check_strict_minimality(H, point, options.minimality_grid);
  return mp;
}

}  // namespace mpasym
