#include "mpasym/univariate.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <stdexcept>

namespace mpasym {

int upoly_degree(const QPolyU& p) {
  for (int k = int(p.size()) - 1; k >= 0; --k)
    if (p[size_t(k)] != 0) return k;
  return -1;
}

void upoly_trim(QPolyU& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Rational upoly_eval(const QPolyU& p, const Rational& x) {
  Rational acc = 0;
  for (size_t k = p.size(); k-- > 0;) acc = acc * x + p[k];
  return acc;
}

std::complex<double> upoly_eval(const CPolyU& p, std::complex<double> x) {
  std::complex<double> acc = 0;
  for (size_t k = p.size(); k-- > 0;) acc = acc * x + p[k];
  return acc;
}

QPolyU upoly_diff(const QPolyU& p) {
  QPolyU d;
  for (size_t k = 1; k < p.size(); ++k) d.push_back(p[k] * Rational(long(k)));
  return d;
}

CPolyU upoly_diff(const CPolyU& p) {
  CPolyU d;
  for (size_t k = 1; k < p.size(); ++k) d.push_back(p[k] * double(k));
  return d;
}

QPolyU upoly_gcd(QPolyU a, QPolyU b) {
  upoly_trim(a);
  upoly_trim(b);
  while (!b.empty()) {
    // a mod b
    QPolyU r = a;
    int db = int(b.size()) - 1;
    while (int(r.size()) - 1 >= db) {
      Rational q = r.back() / b.back();
      size_t shift = r.size() - b.size();
      for (size_t i = 0; i < b.size(); ++i) r[shift + i] -= q * b[i];
      // cancellation at the top is exact
      r.pop_back();
      while (!r.empty() && r.back() == 0) r.pop_back();
    }
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    Rational lc = a.back();
    for (Rational& c : a) c /= lc;
  }
  return a;
}

CPolyU upoly_to_complex(const QPolyU& p) {
  CPolyU out;
  out.reserve(p.size());
  for (const Rational& c : p) out.emplace_back(to_double(c), 0.0);
  return out;
}

std::vector<std::complex<double>> upoly_roots(const CPolyU& p, double tol) {
  double mx = 0;
  for (const auto& c : p) mx = std::max(mx, std::abs(c));
  if (mx == 0) return {};
  CPolyU q = p;
  while (!q.empty() && std::abs(q.back()) <= tol * mx) q.pop_back();
  int n = int(q.size()) - 1;
  if (n <= 0) return {};
  Eigen::MatrixXcd comp = Eigen::MatrixXcd::Zero(n, n);
  for (int i = 1; i < n; ++i) comp(i, i - 1) = 1.0;
  for (int i = 0; i < n; ++i) comp(i, n - 1) = -q[size_t(i)] / q.back();
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(comp, false);
  std::vector<std::complex<double>> roots;
  roots.reserve(size_t(n));
  for (int i = 0; i < n; ++i) roots.push_back(newton_refine(q, es.eigenvalues()(i), 8));
  return roots;
}

std::vector<std::complex<double>> upoly_roots(const QPolyU& p, double tol) {
  return upoly_roots(upoly_to_complex(p), tol);
}

std::complex<double> newton_refine(const CPolyU& p, std::complex<double> x0, int iters) {
  CPolyU d = upoly_diff(p);
  std::complex<double> best = x0;
  double best_res = std::abs(upoly_eval(p, x0));
  std::complex<double> x = x0;
  for (int it = 0; it < iters; ++it) {
    std::complex<double> fp = upoly_eval(d, x);
    if (std::abs(fp) == 0) break;
    x -= upoly_eval(p, x) / fp;
    double res = std::abs(upoly_eval(p, x));
    if (res < best_res) {
      best_res = res;
      best = x;
    }
    if (res == 0) break;
  }
  return best;
}

Rational rational_determinant(std::vector<std::vector<Rational>> m) {
  size_t n = m.size();
  Rational det = 1;
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    while (piv < n && m[piv][col] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != col) {
      std::swap(m[piv], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (size_t row = col + 1; row < n; ++row) {
      if (m[row][col] == 0) continue;
      Rational f = m[row][col] / m[col][col];
      for (size_t k = col; k < n; ++k) m[row][k] -= f * m[col][k];
    }
  }
  return det;
}

CPolyU restrict_last_complex(const RPoly& p, const std::vector<std::complex<double>>& prefix) {
  if (int(prefix.size()) + 1 != p.nvars())
    throw std::invalid_argument("restrict_last_complex: prefix dimension mismatch");
  int dz = p.degree_in(p.nvars() - 1);
  CPolyU out(size_t(dz) + 1, std::complex<double>(0));
  std::vector<std::vector<std::complex<double>>> pw(prefix.size());
  for (size_t v = 0; v < prefix.size(); ++v) {
    int d = p.degree_in(int(v));
    pw[v].resize(size_t(d) + 1, std::complex<double>(1));
    for (int k = 1; k <= d; ++k) pw[v][size_t(k)] = pw[v][size_t(k) - 1] * prefix[v];
  }
  for (const auto& [m, c] : p.terms()) {
    std::complex<double> t(to_double(c), 0.0);
    for (size_t v = 0; v + 1 < m.size(); ++v)
      if (m[v] > 0) t *= pw[v][size_t(m[v])];
    out[size_t(m.back())] += t;
  }
  return out;
}

namespace {

// coefficients of p as a polynomial in elim_var, each a univariate QPolyU
// in the kept variable
std::vector<QPolyU> split_bivariate(const RPoly& p, int elim_var) {
  int keep = 1 - elim_var;
  std::vector<QPolyU> out(size_t(p.degree_in(elim_var)) + 1);
  for (const auto& [m, c] : p.terms()) {
    QPolyU& u = out[size_t(m[size_t(elim_var)])];
    size_t k = size_t(m[size_t(keep)]);
    if (u.size() <= k) u.resize(k + 1, Rational(0));
    u[k] += c;
  }
  return out;
}

}  // namespace

QPolyU resultant_bivariate(const RPoly& a, const RPoly& b, int elim_var) {
  if (a.nvars() != 2 || b.nvars() != 2)
    throw std::invalid_argument("resultant_bivariate: need two bivariate polynomials");
  if (elim_var != 0 && elim_var != 1)
    throw std::invalid_argument("resultant_bivariate: bad variable index");
  if (a.is_zero() || b.is_zero()) return {};
  int keep = 1 - elim_var;
  int m = a.degree_in(elim_var);
  int n = b.degree_in(elim_var);
  if (m == 0 && n == 0) {
    // both constant in the eliminated variable: resultant degenerates to 1
    return {Rational(1)};
  }
  std::vector<QPolyU> ac = split_bivariate(a, elim_var);
  std::vector<QPolyU> bc = split_bivariate(b, elim_var);

  // degree bound for the resultant in the kept variable
  int D = m * b.degree_in(keep) + n * a.degree_in(keep);
  size_t size = size_t(m + n);

  auto eval_at = [](const QPolyU& u, const Rational& x) { return upoly_eval(u, x); };

  std::vector<Rational> xs, ys;
  for (int s = 0; s <= D; ++s) {
    Rational x(s);
    // specialize the Sylvester matrix entries and take its determinant
    std::vector<std::vector<Rational>> syl(size, std::vector<Rational>(size, Rational(0)));
    for (int row = 0; row < n; ++row)
      for (int j = 0; j <= m; ++j) syl[size_t(row)][size_t(row + j)] = eval_at(ac[size_t(m - j)], x);
    for (int row = 0; row < m; ++row)
      for (int j = 0; j <= n; ++j)
        syl[size_t(n + row)][size_t(row + j)] = eval_at(bc[size_t(n - j)], x);
    xs.push_back(x);
    ys.push_back(rational_determinant(std::move(syl)));
  }

  // Lagrange interpolation via Newton's divided differences
  std::vector<Rational> dd = ys;
  for (size_t lvl = 1; lvl < dd.size(); ++lvl)
    for (size_t i = dd.size() - 1; i >= lvl; --i)
      dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - lvl]);
  QPolyU res{};  // build sum dd[k] * prod_{i<k} (x - xs[i])
  QPolyU basis{Rational(1)};
  for (size_t k = 0; k < dd.size(); ++k) {
    if (res.size() < basis.size()) res.resize(basis.size(), Rational(0));
    for (size_t i = 0; i < basis.size(); ++i) res[i] += dd[k] * basis[i];
    // basis *= (x - xs[k])
    basis.insert(basis.begin(), Rational(0));
    for (size_t i = 0; i + 1 < basis.size(); ++i) basis[i] -= xs[k] * basis[i + 1];
  }
  upoly_trim(res);
  return res;
}

}  // namespace mpasym
