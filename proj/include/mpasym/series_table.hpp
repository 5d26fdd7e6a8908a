#pragma once

#include <vector>

#include "mpasym/mpoly.hpp"

namespace mpasym {

/// Dense box of Taylor coefficients a_r of G/H for 0 <= r <= shape
/// (componentwise, bounds inclusive).  This is the ground-truth oracle:
/// everything is exact.
///
/// Internally the entries are stored as the integers a_r * h0^(|r|+1)
/// where h0 is the constant term of the denominator after clearing
/// denominators; the recurrence then runs entirely over integers.  The
/// accessor converts back, so observable values are exact rationals.
class SeriesTable {
 public:
  const std::vector<int>& shape() const { return shape_; }
  int nvars() const { return int(shape_.size()); }

  Rational at(const Monomial& r) const;

  /// Overwrites one entry; the new value must be representable on the
  /// internal integer grid (adding integers to entries always is).
  void set(const Monomial& r, const Rational& value);

  friend SeriesTable coefficients_box(const RPoly& G, const RPoly& H,
                                      const std::vector<int>& shape);

 private:
  size_t index(const Monomial& r) const;

  std::vector<int> shape_;
  std::vector<size_t> strides_;
  std::vector<Integer> scaled_;  // a_r * h0^(|r|+1)
  Integer h0_ = 1;
  std::vector<Integer> h0_pow_;  // h0^k, k = 0..max|r|+1
};

/// Builds the coefficient box by the exact division recurrence
/// a_r = (g_r - sum_{0<k<=r} h_k a_{r-k}) / h_0.
/// Throws std::domain_error when H(0) = 0 (F not analytic at the origin).
SeriesTable coefficients_box(const RPoly& G, const RPoly& H, const std::vector<int>& shape);

/// True iff (sum a_r z^r) * H == G on every coefficient of the box that
/// truncation cannot touch (which, H being a polynomial, is all of them).
bool series_multiply_check(const SeriesTable& a, const RPoly& H, const RPoly& G);

}  // namespace mpasym
