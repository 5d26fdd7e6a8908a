#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mpasym/errors.hpp"
#include "mpasym/mpoly.hpp"

namespace mpasym {

/// Rational generating function F = G/H.  The last declared variable is
/// the distinguished one (the coordinate the Weierstrass-style local
/// analysis solves for).
struct RationalGF {
  std::vector<std::string> variables;
  RPoly numerator;
  RPoly denominator;
  std::vector<RPoly> factors;  // optional; exact product equals denominator

  int nvars() const { return int(variables.size()); }
  bool has_factors() const { return !factors.empty(); }
};

/// A candidate singular point with all coordinates nonzero.
struct PointSpec {
  std::vector<Rational> coordinates;
  bool exact = true;  // false when the coordinates approximate a numeric root

  int dim() const { return int(coordinates.size()); }
  std::vector<double> to_double() const;
};

struct ProblemOptions {
  std::optional<int> oracle_max_total_degree;
  double rank_tolerance = 1e-9;
  int minimality_grid = 64;
};

struct Problem {
  RationalGF gf;
  std::optional<PointSpec> point;
  ProblemOptions options;
};

/// Checks H(0) != 0, nonzero denominator, and (when factors are present)
/// the exact product identity; reports the first differing coefficient on
/// mismatch.  Idempotent.
RationalGF validate_gf(RationalGF gf);

/// Loads and validates a problem file (TOML: [gf] with variables /
/// numerator / denominator / optional denominator_factors, optional
/// [point].coordinates, optional [options]).
Problem load_problem(const std::string& path);

/// Same, from file contents (for tests).  `where` labels error messages.
Problem parse_problem(const std::string& text, const std::string& where = "<string>");

}  // namespace mpasym
