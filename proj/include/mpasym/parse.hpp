#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "mpasym/mpoly.hpp"

namespace mpasym {

struct ParseError : std::runtime_error {
  ParseError(const std::string& what, size_t offset)
      : std::runtime_error(what + " at offset " + std::to_string(offset)), offset(offset) {}
  size_t offset;
};

/// Parses an expression over the named variables into an expanded sparse
/// polynomial.  Grammar: integer and p/q literals, '+', '-', '*', '/',
/// '^' with a nonnegative integer exponent, unary minus, parentheses.
/// '/' requires a nonzero constant divisor; implicit multiplication is
/// not accepted.
RPoly parse_polynomial(const std::string& text, const std::vector<std::string>& variables);

}  // namespace mpasym
