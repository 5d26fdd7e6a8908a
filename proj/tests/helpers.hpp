#pragma once

#include <random>
#include <string>
#include <vector>

#include "mpasym/gf_model.hpp"
#include "mpasym/parse.hpp"

namespace mpasym::testing {

inline std::string problems_dir() {
#ifdef PROBLEMS_DIR
  return PROBLEMS_DIR;
#else
  return "problems";
#endif
}

inline std::string problem_path(const std::string& name) {
  return problems_dir() + "/" + name + ".toml";
}

inline RPoly P(const std::string& text, const std::vector<std::string>& vars) {
  return parse_polynomial(text, vars);
}

inline Rational R(const std::string& text) { return rational_from_string(text); }

// Irreducible bivariate double-point example used across the suite.
inline const char* kLemniscateH =
    "19 - 20*x - 20*y + 5*x^2 + 14*x*y + 5*y^2 - 2*x^2*y - 2*x*y^2 + x^2*y^2";

inline PointSpec ones(int d) {
  PointSpec pt;
  pt.coordinates.assign(size_t(d), Rational(1));
  return pt;
}

// Small random rational in [-max_num/den, max_num/den], never with a zero
// denominator; deterministic given the engine state.
inline Rational random_rational(std::mt19937& rng, int max_num = 6, int max_den = 4) {
  std::uniform_int_distribution<int> num(-max_num, max_num);
  std::uniform_int_distribution<int> den(1, max_den);
  return Rational(num(rng), den(rng));
}

}  // namespace mpasym::testing
