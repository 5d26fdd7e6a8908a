#include "mpasym/rational.hpp"

#include <cmath>
#include <stdexcept>

namespace mpasym {

double to_double(const Rational& q) { return q.convert_to<double>(); }

Integer numerator(const Rational& q) { return Integer(boost::multiprecision::numerator(q)); }
Integer denominator(const Rational& q) { return Integer(boost::multiprecision::denominator(q)); }

Integer factorial(unsigned n) {
  Integer f = 1;
  for (unsigned k = 2; k <= n; ++k) f *= k;
  return f;
}

Integer ipow(const Integer& base, unsigned e) {
  Integer r = 1, b = base;
  while (e) {
    if (e & 1u) r *= b;
    b *= b;
    e >>= 1u;
  }
  return r;
}

Rational qpow(const Rational& base, long e) {
  if (e < 0) {
    if (base == 0) throw std::domain_error("qpow: zero to negative power");
    return 1 / qpow(base, -e);
  }
  Rational r = 1, b = base;
  while (e) {
    if (e & 1l) r *= b;
    b *= b;
    e >>= 1l;
  }
  return r;
}

std::optional<Rational> exact_sqrt(const Rational& q) {
  if (q < 0) return std::nullopt;
  Integer n = numerator(q), d = denominator(q);
  Integer rn = boost::multiprecision::sqrt(n);
  Integer rd = boost::multiprecision::sqrt(d);
  if (rn * rn != n || rd * rd != d) return std::nullopt;
  return Rational(rn) / Rational(rd);
}

namespace {

// Decimal integer from an optionally signed digit string.  Leading zeros
// are stripped first: GMP's string constructor would read them as an
// octal prefix.
Integer decimal_integer(std::string s) {
  bool neg = !s.empty() && s[0] == '-';
  if (!s.empty() && (s[0] == '-' || s[0] == '+')) s.erase(0, 1);
  if (s.empty()) throw std::invalid_argument("empty integer literal");
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw std::invalid_argument("non-digit in integer literal");
  size_t nz = s.find_first_not_of('0');
  s = nz == std::string::npos ? "0" : s.substr(nz);
  Integer v(s);
  return neg ? Integer(-v) : v;
}

}  // namespace

Rational rational_from_string(const std::string& text) {
  auto bad = [&]() -> std::invalid_argument {
    return std::invalid_argument("malformed rational literal: '" + text + "'");
  };
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw bad();

  auto slash = s.find('/');
  if (slash != std::string::npos) {
    std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    if (num.empty() || den.empty()) throw bad();
    try {
      Integer n = decimal_integer(num), d = decimal_integer(den);
      if (d == 0) throw bad();
      return Rational(n) / Rational(d);
    } catch (const std::invalid_argument&) {
      throw bad();
    }
  }
  auto dot = s.find('.');
  if (dot != std::string::npos) {
    std::string head = s.substr(0, dot), tail = s.substr(dot + 1);
    bool neg = !head.empty() && head[0] == '-';
    if (neg) head.erase(0, 1);
    if (!head.empty() && head[0] == '+') head.erase(0, 1);
    if (head.empty()) head = "0";
    if (tail.empty()) throw bad();
    try {
      Integer scaled = decimal_integer(head + tail);
      Rational r = Rational(scaled) / Rational(ipow(Integer(10), unsigned(tail.size())));
      return neg ? -r : r;
    } catch (const std::invalid_argument&) {
      throw bad();
    }
  }
  try {
    return Rational(decimal_integer(s));
  } catch (const std::invalid_argument&) {
    throw bad();
  }
}

std::string rational_to_string(const Rational& q) {
  Integer n = numerator(q), d = denominator(q);
  if (d == 1) return n.str();
  return n.str() + "/" + d.str();
}

std::optional<Rational> snap_to_rational(double x, long max_den, double tol) {
  if (!std::isfinite(x)) return std::nullopt;
  // continued fraction convergents
  long long p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  double v = x;
  for (int it = 0; it < 64; ++it) {
    double fl = std::floor(v);
    if (fl > 9e17 || fl < -9e17) break;
    long long a = static_cast<long long>(fl);
    long long p2 = a * p1 + p0, q2 = a * q1 + q0;
    if (q2 > max_den || q2 < 0) break;
    p0 = p1; q0 = q1; p1 = p2; q1 = q2;
    double approx = double(p1) / double(q1);
    if (std::abs(approx - x) <= tol * std::max(1.0, std::abs(x)))
      return Rational(Integer(p1)) / Rational(Integer(q1));
    double rem = v - fl;
    if (rem < 1e-15) break;
    v = 1.0 / rem;
  }
  return std::nullopt;
}

Rational rational_from_double(double x) {
  if (!std::isfinite(x)) throw std::invalid_argument("rational_from_double: non-finite");
  if (x == 0.0) return Rational(0);
  int exp = 0;
  double m = std::frexp(x, &exp);  // x = m * 2^exp, 0.5 <= |m| < 1
  // 53 bits of mantissa
  long long mant = static_cast<long long>(std::ldexp(m, 53));
  exp -= 53;
  Rational r = Rational(Integer(mant));
  if (exp >= 0)
    r *= Rational(ipow(Integer(2), unsigned(exp)));
  else
    r /= Rational(ipow(Integer(2), unsigned(-exp)));
  return r;
}

}  // namespace mpasym
