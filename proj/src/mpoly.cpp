#include "mpasym/mpoly.hpp"

#include <sstream>

namespace mpasym {

namespace {

bool graded_lex_less(const Monomial& a, const Monomial& b) {
  int da = total_degree(a), db = total_degree(b);
  if (da != db) return da < db;
  return a < b;
}

}  // namespace

std::string poly_to_string(const RPoly& p, const std::vector<std::string>& variables) {
  if (int(variables.size()) != p.nvars())
    throw std::invalid_argument("poly_to_string: variable name count mismatch");
  if (p.is_zero()) return "0";

  std::vector<const Monomial*> order;
  order.reserve(p.terms().size());
  for (const auto& [m, c] : p.terms()) order.push_back(&m);
  std::sort(order.begin(), order.end(),
            [](const Monomial* a, const Monomial* b) { return graded_lex_less(*b, *a); });

  std::ostringstream os;
  bool first = true;
  for (const Monomial* m : order) {
    Rational c = p.coefficient(*m);
    bool neg = c < 0;
    Rational ac = neg ? Rational(-c) : c;
    if (first) {
      if (neg) os << "-";
      first = false;
    } else {
      os << (neg ? " - " : " + ");
    }
    bool has_vars = total_degree(*m) > 0;
    bool coeff_shown = !(ac == 1 && has_vars);
    if (coeff_shown) os << rational_to_string(ac);
    bool need_star = coeff_shown;
    for (size_t v = 0; v < m->size(); ++v) {
      int e = (*m)[v];
      if (e == 0) continue;
      if (need_star) os << "*";
      os << variables[v];
      if (e > 1) os << "^" << e;
      need_star = true;
    }
  }
  return os.str();
}

}  // namespace mpasym
