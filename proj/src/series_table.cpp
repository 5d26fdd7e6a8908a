#include "mpasym/series_table.hpp"

#include <stdexcept>

namespace mpasym {

namespace {

Integer denominator_lcm(const RPoly& p) {
  Integer l = 1;
  for (const auto& [m, c] : p.terms()) l = boost::multiprecision::lcm(l, denominator(c));
  return l;
}

struct IntTerm {
  Monomial expo;
  Integer coeff;
  Integer h0_pow;  // h0^(|expo|-1), premultiplied into the recurrence
};

}  // namespace

size_t SeriesTable::index(const Monomial& r) const {
  if (r.size() != shape_.size()) throw std::invalid_argument("SeriesTable: index arity mismatch");
  size_t idx = 0;
  for (size_t i = 0; i < r.size(); ++i) {
    if (r[i] < 0 || r[i] > shape_[i]) throw std::out_of_range("SeriesTable: index outside box");
    idx += strides_[i] * size_t(r[i]);
  }
  return idx;
}

Rational SeriesTable::at(const Monomial& r) const {
  size_t idx = index(r);
  int deg = total_degree(r);
  return Rational(scaled_[idx]) / Rational(h0_pow_[size_t(deg) + 1]);
}

void SeriesTable::set(const Monomial& r, const Rational& value) {
  size_t idx = index(r);
  int deg = total_degree(r);
  Rational scaled = value * Rational(h0_pow_[size_t(deg) + 1]);
  if (denominator(scaled) != 1)
    throw std::invalid_argument("SeriesTable::set: value not representable on the integer grid");
  scaled_[idx] = numerator(scaled);
}

SeriesTable coefficients_box(const RPoly& G, const RPoly& H, const std::vector<int>& shape) {
  if (G.nvars() != H.nvars()) throw std::invalid_argument("coefficients_box: nvars mismatch");
  if (int(shape.size()) != H.nvars())
    throw std::invalid_argument("coefficients_box: shape arity mismatch");
  const int nv = H.nvars();
  const Monomial zero(size_t(nv), 0);

  // clear denominators: a_r is unchanged under (G,H) -> (L G, L H)
  Integer L = boost::multiprecision::lcm(denominator_lcm(G), denominator_lcm(H));
  Integer h0 = numerator(H.coefficient(zero) * Rational(L));
  if (h0 == 0) throw std::domain_error("coefficients_box: H(0) = 0, F is not analytic at the origin");

  SeriesTable t;
  t.shape_ = shape;
  t.strides_.assign(shape.size(), 1);
  size_t total = 1;
  int max_deg = 0;
  for (int i = nv - 1; i >= 0; --i) {
    if (shape[size_t(i)] < 0) throw std::invalid_argument("coefficients_box: negative bound");
    t.strides_[size_t(i)] = total;
    total *= size_t(shape[size_t(i)]) + 1;
    max_deg += shape[size_t(i)];
  }
  t.h0_ = h0;
  t.h0_pow_.resize(size_t(max_deg) + 2);
  t.h0_pow_[0] = 1;
  for (size_t k = 1; k < t.h0_pow_.size(); ++k) t.h0_pow_[k] = t.h0_pow_[k - 1] * h0;

  std::vector<IntTerm> hterms;
  for (const auto& [m, c] : H.terms()) {
    if (m == zero) continue;
    hterms.push_back({m, numerator(c * Rational(L)), t.h0_pow_[size_t(total_degree(m)) - 1]});
  }
  std::map<Monomial, Integer> gterms;
  for (const auto& [m, c] : G.terms()) gterms.emplace(m, numerator(c * Rational(L)));

  t.scaled_.assign(total, Integer(0));

  // odometer over the box in lexicographic order; every r-k needed by the
  // recurrence precedes r
  Monomial r(size_t(nv), 0);
  Monomial rk(size_t(nv), 0);
  for (;;) {
    const int deg_r = total_degree(r);
    Integer acc = 0;
    auto git = gterms.find(r);
    if (git != gterms.end()) acc = t.h0_pow_[size_t(deg_r)] * git->second;
    for (const IntTerm& ht : hterms) {
      bool inside = true;
      for (size_t i = 0; i < r.size(); ++i) {
        rk[i] = r[i] - ht.expo[i];
        if (rk[i] < 0) {
          inside = false;
          break;
        }
      }
      if (!inside) continue;
      acc -= ht.coeff * ht.h0_pow * t.scaled_[t.index(rk)];
    }
    t.scaled_[t.index(r)] = acc;

    // advance odometer
    int i = nv - 1;
    while (i >= 0) {
      if (r[size_t(i)] < shape[size_t(i)]) {
        ++r[size_t(i)];
        break;
      }
      r[size_t(i)] = 0;
      --i;
    }
    if (i < 0) break;
  }
  return t;
}

bool series_multiply_check(const SeriesTable& a, const RPoly& H, const RPoly& G) {
  const int nv = H.nvars();
  if (int(a.shape().size()) != nv) throw std::invalid_argument("series_multiply_check: arity");
  Monomial r(size_t(nv), 0);
  Monomial rk(size_t(nv), 0);
  for (;;) {
    Rational conv = 0;
    for (const auto& [k, hk] : H.terms()) {
      bool inside = true;
      for (size_t i = 0; i < r.size(); ++i) {
        rk[i] = r[i] - k[i];
        if (rk[i] < 0) {
          inside = false;
          break;
        }
      }
      if (!inside) continue;
      conv += hk * a.at(rk);
    }
    if (conv != G.coefficient(r)) return false;

    int i = nv - 1;
    while (i >= 0) {
      if (r[size_t(i)] < a.shape()[size_t(i)]) {
        ++r[size_t(i)];
        break;
      }
      r[size_t(i)] = 0;
      --i;
    }
    if (i < 0) break;
  }
  return true;
}

}  // namespace mpasym
