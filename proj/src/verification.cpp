#include "mpasym/verification.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <limits>
#include <stdexcept>

#include "mpasym/local_analysis.hpp"

namespace mpasym {

namespace {

const double kPi = std::acos(-1.0);

std::string fmt12(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12e", x);
  return buf;
}

std::pair<double, double> linear_fit(const std::vector<double>& x, const std::vector<double>& y) {
  // least squares y ~ a + b x; returns (slope, rms residual)
  const size_t n = x.size();
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (size_t i = 0; i < n; ++i) {
    sx += x[i];
    sy += y[i];
    sxx += x[i] * x[i];
    sxy += x[i] * y[i];
  }
  double denom = double(n) * sxx - sx * sx;
  double b = denom == 0 ? 0 : (double(n) * sxy - sx * sy) / denom;
  double a = (sy - b * sx) / double(n);
  double rss = 0;
  for (size_t i = 0; i < n; ++i) {
    double e = y[i] - (a + b * x[i]);
    rss += e * e;
  }
  return {b, std::sqrt(rss / double(n))};
}

// integral of f over the simplex {alpha >= 0, sum alpha = 1} against
// Lebesgue measure (total mass 1/n!), by nested composite Simpson with m
// intervals per level (m even); the domain is mapped to a cube by
// peeling one coordinate at a time
std::complex<double> simplex_simpson(
    const std::function<std::complex<double>(const std::vector<double>&)>& f, int n, int m) {
  std::vector<double> alpha(size_t(n) + 1, 0.0);
  std::function<std::complex<double>(int, double)> rec = [&](int i,
                                                             double rem) -> std::complex<double> {
    if (i == n) {
      alpha[size_t(n)] = rem;
      return f(alpha);
    }
    std::complex<double> acc = 0;
    for (int j = 0; j <= m; ++j) {
      double w = (j == 0 || j == m) ? 1.0 : (j % 2 == 1 ? 4.0 : 2.0);
      double t = double(j) / m;
      alpha[size_t(i)] = rem * t;
      acc += w * rec(i + 1, rem * (1.0 - t));
    }
    return acc * rem / (3.0 * m);
  };
  return rec(0, 1.0);
}

// u_j(z_hat* e^{i t theta}) for each factor, by continuation from t=0
std::vector<std::complex<double>> continue_sheets(const std::vector<RPoly>& factors,
                                                  const PointSpec& point,
                                                  const std::vector<double>& theta, int steps) {
  const int d = point.dim() - 1;
  std::vector<double> coords = point.to_double();
  std::vector<std::complex<double>> u(factors.size(),
                                      std::complex<double>(coords.back(), 0.0));
  std::vector<std::complex<double>> zhat(size_t(d), std::complex<double>(0, 0));
  for (int s = 1; s <= steps; ++s) {
    double t = double(s) / steps;
    for (int k = 0; k < d; ++k)
      zhat[size_t(k)] = coords[size_t(k)] * std::polar(1.0, t * theta[size_t(k)]);
    for (size_t j = 0; j < factors.size(); ++j) {
      CPolyU p = restrict_last_complex(factors[j], zhat);
      double best = std::numeric_limits<double>::infinity();
      std::complex<double> pick = u[j];
      for (const auto& root : upoly_roots(p)) {
        double dd = std::abs(root - u[j]);
        if (dd < best) {
          best = dd;
          pick = root;
        }
      }
      u[j] = pick;
    }
  }
  return u;
}

// f(theta, alpha) = i delta.theta - log(alpha.v * z*_{d+1}); f(0, alpha) = 0
std::complex<double> phase_f(const std::vector<RPoly>& factors, const PointSpec& point,
                             const std::vector<double>& delta_hat,
                             const std::vector<double>& theta,
                             const std::vector<double>& alpha) {
  std::vector<std::complex<double>> u = continue_sheets(factors, point, theta, 24);
  std::complex<double> y = 0;
  for (size_t j = 0; j < u.size(); ++j) y += alpha[j] / u[j];
  std::complex<double> it(0, 0);
  for (size_t k = 0; k < theta.size(); ++k)
    it += std::complex<double>(0, delta_hat[k] * theta[k]);
  return it - std::log(y * std::complex<double>(point.to_double().back(), 0.0));
}

}  // namespace

ComparisonTable compare_direction(const RationalGF& gf, const AsymptoticResult& res,
                                  const std::vector<Rational>& direction,
                                  const std::vector<long>& scales) {
  const int nv = gf.nvars();
  if (int(direction.size()) != nv)
    throw std::invalid_argument("compare_direction: direction dimension mismatch");
  std::vector<std::vector<long>> points;
  std::vector<int> shape(size_t(nv), 0);
  for (long sc : scales) {
    std::vector<long> r(size_t(nv), 0);
    for (int k = 0; k < nv; ++k) {
      r[size_t(k)] = std::llround(to_double(direction[size_t(k)]) * double(sc));
      shape[size_t(k)] = std::max(shape[size_t(k)], int(r[size_t(k)]));
    }
    points.push_back(std::move(r));
  }
  SeriesTable box = coefficients_box(gf.numerator, gf.denominator, shape);

  ComparisonTable t;
  for (const auto& r : points) {
    ComparisonRow row;
    row.r = r;
    Monomial m(r.begin(), r.end());
    row.oracle = box.at(m);
    std::vector<long> rl(r.begin(), r.end());
    row.predicted = evaluate_prediction(res, rl);
    double o = to_double(row.oracle);
    row.abs_err = std::abs(o - row.predicted);
    row.rel_err = o == 0 ? std::numeric_limits<double>::infinity() : row.abs_err / std::abs(o);
    t.rows.push_back(std::move(row));
  }

  // fit on the last half
  size_t start = t.rows.size() / 2;
  std::vector<double> xs, ys;
  if (res.power == 0) {
    t.fit.model = "log-linear";
    for (size_t i = start; i < t.rows.size(); ++i) {
      const auto& row = t.rows[i];
      double norm = 1;
      long abs_r = 0;
      for (size_t k = 0; k < row.r.size(); ++k) {
        norm *= std::exp(-double(row.r[k]) * res.prefactor_log[k]);
        abs_r += std::labs(row.r[k]);
      }
      double err = std::abs(to_double(row.oracle) * norm - res.b0);
      xs.push_back(double(abs_r));
      ys.push_back(std::log(std::max(err, 1e-300)));
    }
  } else {
    t.fit.model = "power-law";
    for (size_t i = start; i < t.rows.size(); ++i) {
      const auto& row = t.rows[i];
      double norm = 1;
      for (size_t k = 0; k < row.r.size(); ++k)
        norm *= std::exp(-double(row.r[k]) * res.prefactor_log[k]);
      double val = std::abs(to_double(row.oracle) * norm);
      xs.push_back(std::log(double(row.r.back())));
      ys.push_back(std::log(std::max(val, 1e-300)));
    }
  }
  auto [slope, resid] = linear_fit(xs, ys);
  t.fit.slope = slope;
  t.fit.residual = resid;
  return t;
}

std::string comparison_csv(const ComparisonTable& t) {
  std::string out;
  size_t rdim = t.rows.empty() ? 0 : t.rows.front().r.size();
  for (size_t k = 0; k < rdim; ++k) out += "r" + std::to_string(k + 1) + ",";
  out += "oracle,predicted,abs_err,rel_err\n";
  for (const auto& row : t.rows) {
    for (long rk : row.r) out += std::to_string(rk) + ",";
    out += fmt12(to_double(row.oracle)) + "," + fmt12(row.predicted) + "," +
           fmt12(row.abs_err) + "," + fmt12(row.rel_err) + "\n";
  }
  return out;
}

bool divided_difference_identity_check(const std::vector<Rational>& v, const QPolyU& h,
                                       Rational* lhs_out, Rational* rhs_out) {
  const int n = int(v.size()) - 1;
  if (n < 0) throw std::invalid_argument("divided_difference_identity_check: empty v");

  // LHS: confluent divided difference h[v_0, ..., v_n] on sorted nodes
  std::vector<Rational> nodes = v;
  std::sort(nodes.begin(), nodes.end());
  std::vector<QPolyU> deriv{h};
  for (int k = 1; k <= n; ++k) deriv.push_back(upoly_diff(deriv.back()));
  // dd[i][j] = h[nodes_i..nodes_j]
  std::vector<std::vector<Rational>> dd(size_t(n) + 1, std::vector<Rational>(size_t(n) + 1));
  for (int span = 0; span <= n; ++span)
    for (int i = 0; i + span <= n; ++i) {
      int j = i + span;
      if (nodes[size_t(i)] == nodes[size_t(j)])
        dd[size_t(i)][size_t(j)] = upoly_eval(deriv[size_t(span)], nodes[size_t(i)]) /
                                   Rational(factorial(unsigned(span)));
      else
        dd[size_t(i)][size_t(j)] =
            (dd[size_t(i) + 1][size_t(j)] - dd[size_t(i)][size_t(j) - 1]) /
            (nodes[size_t(j)] - nodes[size_t(i)]);
    }
  Rational lhs = dd[0][size_t(n)];

  // RHS: expand h^(n)(y) = sum d_m y^m; with Lebesgue measure on the
  // simplex (mass 1/n!, matching the raw divided difference) the moments
  // are integral of (alpha.v)^m = m!/(n+m)! h_m(v), h_m complete
  // homogeneous symmetric
  const QPolyU& hn = deriv[size_t(n)];
  int mmax = int(hn.size()) - 1;
  std::vector<Rational> hom(size_t(std::max(mmax, 0)) + 1, Rational(0));
  hom[0] = 1;
  for (const Rational& vj : v)
    for (int m = 1; m <= mmax; ++m) hom[size_t(m)] += vj * hom[size_t(m) - 1];
  Rational rhs = 0;
  for (int m = 0; m <= mmax; ++m) {
    if (hn[size_t(m)] == 0) continue;
    Rational moment = Rational(factorial(unsigned(m))) / Rational(factorial(unsigned(n + m)));
    rhs += hn[size_t(m)] * moment * hom[size_t(m)];
  }
  if (lhs_out) *lhs_out = lhs;
  if (rhs_out) *rhs_out = rhs;
  return lhs == rhs;
}

CriticalSetReport critical_set_check(const RationalGF& gf, const MultiplePointData& mp,
                                     const std::vector<Rational>& delta, int samples) {
  if (!gf.has_factors())
    throw UnsupportedError("critical_set_check: needs a factored denominator");
  const int d = gf.nvars() - 1;
  std::vector<RPoly> vanishing;
  for (const RPoly& f : gf.factors)
    if (poly_eval(f, mp.point.coordinates) == 0) vanishing.push_back(f);

  // accept delta with or without the trailing 1
  std::vector<Rational> full = delta;
  if (int(full.size()) == d) full.push_back(Rational(1));
  if (int(full.size()) != d + 1 || full.back() <= 0)
    throw std::invalid_argument("critical_set_check: bad direction");
  std::vector<double> delta_hat(size_t(d), 0.0);
  for (int k = 0; k < d; ++k)
    delta_hat[size_t(k)] = to_double(full[size_t(k)] / full.back());

  for (size_t k = 0; k + 1 < full.size(); ++k) full[k] /= full.back();
  full.back() = 1;

  DirectionMatrix C = direction_matrix(mp.sheets, mp.point);
  SolutionPolytope A = solve_A(C, full);
  std::vector<double> alpha_star(A.vertices.front().size(), 0.0);
  for (const auto& v : A.vertices)
    for (size_t j = 0; j < v.size(); ++j) alpha_star[j] += to_double(v[j]) / double(A.vertices.size());

  auto grad_norm = [&](const std::vector<double>& alpha) {
    const double h = 1e-5;
    double norm2 = 0;
    for (int k = 0; k < d; ++k) {
      std::vector<double> tp(size_t(d), 0.0), tm(size_t(d), 0.0);
      tp[size_t(k)] = h;
      tm[size_t(k)] = -h;
      std::complex<double> g = (phase_f(vanishing, mp.point, delta_hat, tp, alpha) -
                                phase_f(vanishing, mp.point, delta_hat, tm, alpha)) /
                               (2 * h);
      norm2 += std::norm(g);
    }
    return std::sqrt(norm2);
  };

  CriticalSetReport rep;
  rep.grad_norm_at_A = grad_norm(alpha_star);

  const int n = mp.multiplicity - 1;
  if (A.affine_dim >= n) {
    // A(delta) is the whole simplex: every alpha is critical and there is
    // nothing off A to test
    rep.min_grad_off_A = std::numeric_limits<double>::infinity();
  } else {
    std::vector<double> off = alpha_star;
    if (off.size() >= 2) {
      double shift = 0.1;
      // keep inside the open simplex
      shift = std::min({shift, 0.9 * (1.0 - off[0]), 0.9 * off[1]});
      off[0] += shift;
      off[1] -= shift;
    }
    rep.min_grad_off_A = grad_norm(off);
  }

  rep.min_re_f = std::numeric_limits<double>::infinity();
  for (int i = 0; i < samples; ++i) {
    std::vector<double> theta(size_t(d), 0.0);
    for (int k = 0; k < d; ++k) {
      // deterministic low-discrepancy-ish angles, bounded away from 0
      double t = std::fmod(0.113 + double(i) * 0.61803398875 + 0.37 * k, 1.0);
      theta[size_t(k)] = (t - 0.5) * 2.0 * (kPi * 0.9);
      if (std::abs(theta[size_t(k)]) < 0.1) theta[size_t(k)] += 0.3;
    }
    double re = phase_f(vanishing, mp.point, delta_hat, theta, alpha_star).real();
    rep.min_re_f = std::min(rep.min_re_f, re);
  }
  // the gradient is finite-differenced; 1e-7 sits well above the h^2
  // truncation error and far below any genuine non-critical gradient
  rep.pass = rep.grad_norm_at_A <= 1e-7 && rep.min_grad_off_A > 1e-3 && rep.min_re_f > 0;
  return rep;
}

double hessian_fd_check(const std::vector<RPoly>& factors, const std::vector<Rational>& alpha,
                        const PointSpec& point) {
  const int d = point.dim() - 1;
  std::vector<SheetJet> sheets = sheet_jets(factors, point);
  QMatrix Q = q_matrix(sheets, alpha, point);

  std::vector<double> alpha_d(alpha.size());
  for (size_t j = 0; j < alpha.size(); ++j) alpha_d[j] = to_double(alpha[j]);
  std::vector<double> zero_delta(size_t(d), 0.0);

  auto f_at = [&](const std::vector<double>& theta) {
    // delta term irrelevant for the Hessian; pass zeros
    return phase_f(factors, point, zero_delta, theta, alpha_d);
  };
  auto second = [&](int k, int l, double h) {
    std::vector<double> pp(size_t(d), 0.0), pm(size_t(d), 0.0), mp(size_t(d), 0.0),
        mm(size_t(d), 0.0);
    pp[size_t(k)] += h; pp[size_t(l)] += h;
    pm[size_t(k)] += h; pm[size_t(l)] -= h;
    mp[size_t(k)] -= h; mp[size_t(l)] += h;
    mm[size_t(k)] -= h; mm[size_t(l)] -= h;
    return (f_at(pp) - f_at(pm) - f_at(mp) + f_at(mm)) / (4 * h * h);
  };

  double max_rel = 0;
  const double h = 1e-4;
  for (int k = 0; k < d; ++k)
    for (int l = 0; l < d; ++l) {
      std::complex<double> c1 = second(k, l, h);
      std::complex<double> c2 = second(k, l, h / 2);
      std::complex<double> rich = (4.0 * c2 - c1) / 3.0;
      double exact = to_double(Q.exact[size_t(k)][size_t(l)]);
      double scale = std::max(std::abs(exact), 1.0);
      max_rel = std::max(max_rel, std::abs(rich - std::complex<double>(exact, 0)) / scale);
    }
  return max_rel;
}

ComparisonTable fl_quadrature_check(const RationalGF& gf, const MultiplePointData& mp,
                                    const Rational& delta, const std::vector<long>& s_list,
                                    int resolution) {
  const int d = gf.nvars() - 1;
  if (d != 1) throw UnsupportedError("fl_quadrature_check: implemented for d = 1 only");
  if (!gf.has_factors())
    throw UnsupportedError("fl_quadrature_check: needs a factored denominator");
  for (const Rational& c : mp.point.coordinates)
    if (c != 1)
      throw UnsupportedError("fl_quadrature_check: implemented at the all-ones point only");

  std::vector<RPoly> vanishing;
  for (const RPoly& f : gf.factors)
    if (poly_eval(f, mp.point.coordinates) == 0) vanishing.push_back(f);
  const int n = int(vanishing.size()) - 1;
  if (n + 1 != mp.multiplicity)
    throw UnsupportedError("fl_quadrature_check: factor multiplicities are not all one");

  // oracle box
  long smax = *std::max_element(s_list.begin(), s_list.end());
  long rmax = std::llround(to_double(delta) * double(smax));
  SeriesTable box =
      coefficients_box(gf.numerator, gf.denominator, {int(rmax), int(smax)});

  const double theta0 = kPi / 2;

  // per-theta sheet data, tracked continuously outward from 0
  struct Fiber {
    double theta;
    std::vector<std::complex<double>> u, v;
    CPolyU chi_quot;  // H(e^{i theta}, .) / prod (w - u_j)
    CPolyU gz;        // G(e^{i theta}, .)
    std::complex<double> u_prod;
    std::complex<double> zhat;
  };

  auto build_fibers = [&](int m) {
    // m+1 Simpson nodes on [0, theta0]; mirrored later
    std::vector<Fiber> fib(size_t(m) + 1);
    std::vector<std::complex<double>> u(vanishing.size(), std::complex<double>(1, 0));
    for (int i = 0; i <= m; ++i) {
      double th = theta0 * double(i) / double(m);
      std::complex<double> z = std::polar(1.0, th);
      for (size_t j = 0; j < vanishing.size(); ++j) {
        CPolyU p = restrict_last_complex(vanishing[j], {z});
        double best = std::numeric_limits<double>::infinity();
        std::complex<double> pick = u[j];
        for (const auto& root : upoly_roots(p)) {
          double dd = std::abs(root - u[j]);
          if (dd < best) {
            best = dd;
            pick = root;
          }
        }
        u[j] = pick;
      }
      Fiber& fb = fib[size_t(i)];
      fb.theta = th;
      fb.zhat = z;
      fb.u = u;
      fb.v.resize(u.size());
      fb.u_prod = 1;
      for (size_t j = 0; j < u.size(); ++j) {
        fb.v[j] = 1.0 / u[j];
        fb.u_prod *= u[j];
      }
      // synthetic division of H(z, .) by every (w - u_j)
      CPolyU q = restrict_last_complex(gf.denominator, {z});
      for (const auto& uj : u) {
        CPolyU next(q.size() - 1);
        std::complex<double> carry = 0;
        for (size_t k = q.size(); k-- > 1;) {
          carry = q[k] + carry * uj;
          next[k - 1] = carry;
        }
        q = std::move(next);
      }
      fb.chi_quot = q;
      fb.gz = restrict_last_complex(gf.numerator, {z});
    }
    return fib;
  };

  auto phi_at = [&](const Fiber& fb, std::complex<double> w) {
    // chi(w) = (-1)^{n+1} prod(u_j) * quotient(w); phi = G / chi
    std::complex<double> quot = upoly_eval(fb.chi_quot, w);
    std::complex<double> chi = fb.u_prod * quot;
    if ((n + 1) % 2 == 1) chi = -chi;
    return upoly_eval(fb.gz, w) / chi;
  };

  auto inner = [&](const Fiber& fb, long s) {
    // integral over the simplex of h^{(n)}(alpha.v),
    // h(y) = y^{s+n} phi(zhat, 1/y)
    std::vector<double> pk(size_t(n) + 1);
    for (int k = 0; k <= n; ++k) {
      double c = factorial(unsigned(n)).convert_to<double>() /
                 (factorial(unsigned(k)).convert_to<double>() *
                  factorial(unsigned(n - k)).convert_to<double>());
      for (int j = k + 1; j <= n; ++j) c *= double(s + j);
      pk[size_t(k)] = c;
    }
    auto f = [&](const std::vector<double>& alpha) -> std::complex<double> {
      std::complex<double> y = 0;
      for (size_t j = 0; j < fb.v.size(); ++j) y += alpha[j] * fb.v[j];
      // derivatives of y -> phi(zhat, 1/y) by a Cauchy circle
      const int mnodes = 16;
      const double rho = 0.05;
      std::vector<std::complex<double>> psi(size_t(n) + 1, std::complex<double>(0, 0));
      if (n == 0) {
        psi[0] = phi_at(fb, 1.0 / y);
      } else {
        for (int t = 0; t < mnodes; ++t) {
          std::complex<double> e = std::polar(1.0, 2 * kPi * t / mnodes);
          std::complex<double> val = phi_at(fb, 1.0 / (y + rho * e));
          std::complex<double> ek(1, 0);  // e^{-i k angle}
          for (int k = 0; k <= n; ++k) {
            psi[size_t(k)] += val * ek / double(mnodes);
            ek *= std::conj(e);
          }
        }
        double fk = 1;
        for (int k = 0; k <= n; ++k) {
          psi[size_t(k)] *= fk / std::pow(rho, k);
          fk *= double(k + 1);
        }
      }
      std::complex<double> ys = std::pow(y, double(s));
      std::complex<double> acc = 0;
      std::complex<double> yk = 1;
      for (int k = 0; k <= n; ++k) {
        acc += pk[size_t(k)] * ys * yk * psi[size_t(k)];
        yk *= y;
      }
      return acc;
    };
    // the divided difference equals the Lebesgue simplex integral of
    // h^(n); mass 1/n!, no normalization.  The integrand carries y^s, so
    // the node count scales with s.
    int m2 = std::max<long>(n == 1 ? 128 : 64, 2 * ((s + 1) / 2));
    return simplex_simpson(f, n, m2);
  };

  auto value_at = [&](long s, int m) {
    long r = std::llround(to_double(delta) * double(s));
    std::vector<Fiber> fib = build_fibers(m);
    // Simpson over [-theta0, theta0] using the symmetry fiber(-th) = conj
    std::complex<double> acc = 0;
    for (int i = 0; i <= m; ++i) {
      // composite Simpson weights on [-theta0, theta0] (2m intervals, m
      // even): the center node i = 0 is interior with full-grid index m
      double wgt = (i == m) ? 1.0 : (i == 0 ? 2.0 : (i % 2 == 1 ? 4.0 : 2.0));
      std::complex<double> ival = inner(fib[size_t(i)], s);
      std::complex<double> plus =
          std::polar(1.0, -double(r) * fib[size_t(i)].theta) * ival;
      // mirrored node: all data conjugates, e^{-ir(-th)} = conj factor
      std::complex<double> minus = std::conj(plus);
      acc += wgt * (i == 0 ? plus : plus + minus) * (theta0 / double(m)) / 3.0;
    }
    return acc.real() / (2 * kPi);
  };

  ComparisonTable t;
  for (long s : s_list) {
    int m = resolution;
    if (m % 2 == 1) ++m;
    double v1 = value_at(s, m);
    double v2 = value_at(s, 2 * m);
    if (std::abs(v2 - v1) > 1e-8 * std::max(std::abs(v2), 1e-12))
      throw std::runtime_error("fl_quadrature_check: quadrature did not converge");
    long r = std::llround(to_double(delta) * double(s));
    ComparisonRow row;
    row.r = {r, s};
    row.oracle = box.at({int(r), int(s)});
    row.predicted = v2;
    double o = to_double(row.oracle);
    row.abs_err = std::abs(o - v2);
    row.rel_err = o == 0 ? std::numeric_limits<double>::infinity() : row.abs_err / std::abs(o);
    t.rows.push_back(std::move(row));
  }
  // fit the error decay against s
  std::vector<double> xs, ys;
  for (const auto& row : t.rows) {
    xs.push_back(double(row.r.back()));
    ys.push_back(std::log(std::max(row.rel_err, 1e-300)));
  }
  auto [slope, resid] = linear_fit(xs, ys);
  t.fit.model = "log-linear";
  t.fit.slope = slope;
  t.fit.residual = resid;
  return t;
}

}  // namespace mpasym
