#pragma once

#include <stdexcept>
#include <string>

namespace mpasym {

/// Bad input: malformed files, invalid generating functions.  CLI exit 2.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Structurally valid input outside the implemented taxonomy.  CLI exit 3.
struct UnsupportedError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace mpasym
