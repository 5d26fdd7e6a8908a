#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "mpasym/rational.hpp"

namespace mpasym {

/// Exponent multi-index; length equals the variable count of the owning
/// polynomial.
using Monomial = std::vector<int>;

inline int total_degree(const Monomial& m) {
  return std::accumulate(m.begin(), m.end(), 0);
}

/// Sparse multivariate polynomial.  Coefficients are exact rationals by
/// default; the scalar is a template parameter so the same machinery can
/// carry complex coefficients where the numerics need them.
template <class Scalar = Rational>
class MPoly {
 public:
  using TermMap = std::map<Monomial, Scalar>;

  MPoly() : nvars_(0) {}
  explicit MPoly(int nvars) : nvars_(nvars) {
    if (nvars < 0) throw std::invalid_argument("MPoly: negative nvars");
  }

  static MPoly constant(int nvars, const Scalar& c) {
    MPoly p(nvars);
    p.add_term(Monomial(size_t(nvars), 0), c);
    return p;
  }
  static MPoly variable(int nvars, int var) {
    MPoly p(nvars);
    Monomial m(size_t(nvars), 0);
    m.at(size_t(var)) = 1;
    p.add_term(m, Scalar(1));
    return p;
  }

  int nvars() const { return nvars_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  int degree() const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, total_degree(m));
    return d;
  }
  int degree_in(int var) const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.at(size_t(var)));
    return d;
  }

  void add_term(const Monomial& m, const Scalar& c) {
    if (int(m.size()) != nvars_) throw std::invalid_argument("MPoly: monomial arity mismatch");
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      if (!(c == Scalar(0))) terms_.emplace(m, c);
    } else {
      it->second += c;
      if (it->second == Scalar(0)) terms_.erase(it);
    }
  }

  Scalar coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Scalar(0) : it->second;
  }

  MPoly& operator+=(const MPoly& o) {
    check_same(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  MPoly& operator-=(const MPoly& o) {
    check_same(o);
    for (const auto& [m, c] : o.terms_) add_term(m, Scalar(-c));
    return *this;
  }
  MPoly& operator*=(const Scalar& s) {
    if (s == Scalar(0)) {
      terms_.clear();
      return *this;
    }
    for (auto& [m, c] : terms_) c *= s;
    return *this;
  }

  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(MPoly a, const Scalar& s) { return a *= s; }
  friend MPoly operator*(const Scalar& s, MPoly a) { return a *= s; }
  friend MPoly operator-(MPoly a) {
    for (auto& [m, c] : a.terms_) c = -c;
    return a;
  }

  friend MPoly operator*(const MPoly& a, const MPoly& b) {
    a.check_same(b);
    MPoly r(a.nvars_);
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) {
        Monomial m = ma;
        for (size_t i = 0; i < m.size(); ++i) m[i] += mb[i];
        r.add_term(m, ca * cb);
      }
    return r;
  }

  bool operator==(const MPoly& o) const {
    return nvars_ == o.nvars_ && terms_ == o.terms_;
  }

 private:
  void check_same(const MPoly& o) const {
    if (nvars_ != o.nvars_) throw std::invalid_argument("MPoly: variable count mismatch");
  }

  int nvars_;
  TermMap terms_;
};

/// Evaluation at a point; exact when both scalar kinds are rational.
template <class Scalar, class Point>
Point poly_eval(const MPoly<Scalar>& p, const std::vector<Point>& point) {
  if (int(point.size()) != p.nvars())
    throw std::invalid_argument("poly_eval: point dimension mismatch");
  // cache powers per variable up to the needed degree
  std::vector<std::vector<Point>> pw(point.size());
  for (size_t v = 0; v < point.size(); ++v) {
    int d = p.degree_in(int(v));
    pw[v].resize(size_t(d) + 1, Point(1));
    for (int k = 1; k <= d; ++k) pw[v][size_t(k)] = pw[v][size_t(k) - 1] * point[v];
  }
  Point acc(0);
  for (const auto& [m, c] : p.terms()) {
    Point t(c);
    for (size_t v = 0; v < m.size(); ++v)
      if (m[v] > 0) t *= pw[v][size_t(m[v])];
    acc += t;
  }
  return acc;
}

/// Exact partial derivative of the given order.
template <class Scalar>
MPoly<Scalar> poly_diff(const MPoly<Scalar>& p, int var, int order = 1) {
  if (var < 0 || var >= p.nvars()) throw std::invalid_argument("poly_diff: bad variable index");
  if (order < 0) throw std::invalid_argument("poly_diff: negative order");
  MPoly<Scalar> r = p;
  for (int k = 0; k < order; ++k) {
    MPoly<Scalar> d(r.nvars());
    for (const auto& [m, c] : r.terms()) {
      int e = m.at(size_t(var));
      if (e == 0) continue;
      Monomial mm = m;
      mm[size_t(var)] = e - 1;
      d.add_term(mm, c * Scalar(e));
    }
    r = std::move(d);
  }
  return r;
}

/// Restriction z -> p(prefix, z) to a univariate polynomial in the last
/// variable; coefficient k of the result multiplies z^k.
template <class Scalar, class Point>
std::vector<Point> restrict_last(const MPoly<Scalar>& p, const std::vector<Point>& prefix) {
  if (int(prefix.size()) + 1 != p.nvars())
    throw std::invalid_argument("restrict_last: prefix dimension mismatch");
  int dz = p.degree_in(p.nvars() - 1);
  std::vector<Point> out(size_t(dz) + 1, Point(0));
  std::vector<std::vector<Point>> pw(prefix.size());
  for (size_t v = 0; v < prefix.size(); ++v) {
    int d = p.degree_in(int(v));
    pw[v].resize(size_t(d) + 1, Point(1));
    for (int k = 1; k <= d; ++k) pw[v][size_t(k)] = pw[v][size_t(k) - 1] * prefix[v];
  }
  for (const auto& [m, c] : p.terms()) {
    Point t(c);
    for (size_t v = 0; v + 1 < m.size(); ++v)
      if (m[v] > 0) t *= pw[v][size_t(m[v])];
    out[size_t(m.back())] += t;
  }
  return out;
}

using RPoly = MPoly<Rational>;

/// Canonical textual form: graded-lex descending terms, rational
/// coefficients as p/q, explicit '*' and '^'.  parse_polynomial of the
/// output reproduces the term map exactly.
std::string poly_to_string(const RPoly& p, const std::vector<std::string>& variables);

}  // namespace mpasym
