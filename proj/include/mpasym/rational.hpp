#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>

#include <optional>
#include <string>

namespace mpasym {

/// Exact arbitrary-precision scalars used throughout the oracle and the
/// symbolic side of the analysis.  GMP-backed; Eigen interop comes from
/// boost/multiprecision/eigen.hpp.
using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

double to_double(const Rational& q);

Integer numerator(const Rational& q);
Integer denominator(const Rational& q);

Integer factorial(unsigned n);
Integer ipow(const Integer& base, unsigned e);
Rational qpow(const Rational& base, long e);

/// Exact square root when `q` is a perfect rational square (and >= 0).
std::optional<Rational> exact_sqrt(const Rational& q);

/// Parses "p", "p/q", or a plain decimal string ("0.25" -> 1/4) exactly.
/// Throws std::invalid_argument on malformed input or q == 0.
Rational rational_from_string(const std::string& text);

/// Canonical "p" or "p/q" form.
std::string rational_to_string(const Rational& q);

/// Nearest rational with denominator <= max_den (continued fractions),
/// or nullopt if no candidate reproduces x to within `tol`.
std::optional<Rational> snap_to_rational(double x, long max_den = 1000000,
                                         double tol = 1e-9);

/// Exact rational from the binary representation of a double.
Rational rational_from_double(double x);

}  // namespace mpasym
