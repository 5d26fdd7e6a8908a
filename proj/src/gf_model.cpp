#include "mpasym/gf_model.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

#include "mpasym/parse.hpp"

namespace mpasym {

std::vector<double> PointSpec::to_double() const {
  std::vector<double> out;
  out.reserve(coordinates.size());
  for (const Rational& c : coordinates) out.push_back(mpasym::to_double(c));
  return out;
}

namespace {

// Minimal TOML subset reader: [section] headers, key = value, values are
// strings, integers, floats, or single-level arrays.  Enough for the
// problem-file schema; anything else is rejected with a location.
struct TomlValue {
  enum class Kind { String, Int, Float, Array } kind;
  std::string str;
  long long integer = 0;
  double real = 0;
  std::vector<TomlValue> array;
};

using TomlTable = std::map<std::string, std::map<std::string, TomlValue>>;

struct TomlCursor {
  const std::string& text;
  size_t pos = 0;
  const std::string& where;

  [[noreturn]] void fail(const std::string& msg) const {
    size_t line = 1;
    for (size_t i = 0; i < pos && i < text.size(); ++i)
      if (text[i] == '\n') ++line;
    throw InputError(where + ":" + std::to_string(line) + ": " + msg);
  }
  bool eof() const { return pos >= text.size(); }
  char peek() const { return text[pos]; }
  void skip_ws_and_comments(bool cross_lines) {
    while (!eof()) {
      char c = peek();
      if (c == '#') {
        while (!eof() && peek() != '\n') ++pos;
      } else if (c == ' ' || c == '\t' || c == '\r' || (cross_lines && c == '\n')) {
        ++pos;
      } else {
        break;
      }
    }
  }
};

TomlValue parse_value(TomlCursor& c);

TomlValue parse_scalar(TomlCursor& c) {
  TomlValue v{};
  if (c.peek() == '"') {
    ++c.pos;
    std::string s;
    while (!c.eof() && c.peek() != '"') {
      char ch = c.peek();
      if (ch == '\\') {
        ++c.pos;
        if (c.eof()) c.fail("unterminated escape");
        char e = c.peek();
        switch (e) {
          case '"': s += '"'; break;
          case '\\': s += '\\'; break;
          case 'n': s += '\n'; break;
          case 't': s += '\t'; break;
          default: c.fail("unsupported escape");
        }
      } else if (ch == '\n') {
        c.fail("unterminated string");
      } else {
        s += ch;
      }
      ++c.pos;
    }
    if (c.eof()) c.fail("unterminated string");
    ++c.pos;
    v.kind = TomlValue::Kind::String;
    v.str = s;
    return v;
  }
  // bare number
  size_t b = c.pos;
  while (!c.eof() && (std::isalnum(static_cast<unsigned char>(c.peek())) || c.peek() == '+' ||
                      c.peek() == '-' || c.peek() == '.' || c.peek() == '_'))
    ++c.pos;
  std::string tok = c.text.substr(b, c.pos - b);
  if (tok.empty()) c.fail("expected a value");
  if (tok.find('.') != std::string::npos || tok.find('e') != std::string::npos ||
      tok.find('E') != std::string::npos) {
    try {
      v.real = std::stod(tok);
    } catch (...) {
      c.fail("malformed float '" + tok + "'");
    }
    v.kind = TomlValue::Kind::Float;
  } else {
    try {
      v.integer = std::stoll(tok);
    } catch (...) {
      c.fail("malformed integer '" + tok + "'");
    }
    v.kind = TomlValue::Kind::Int;
  }
  return v;
}

TomlValue parse_value(TomlCursor& c) {
  c.skip_ws_and_comments(false);
  if (c.eof()) c.fail("expected a value");
  if (c.peek() == '[') {
    ++c.pos;
    TomlValue v{};
    v.kind = TomlValue::Kind::Array;
    c.skip_ws_and_comments(true);
    if (!c.eof() && c.peek() == ']') {
      ++c.pos;
      return v;
    }
    for (;;) {
      c.skip_ws_and_comments(true);
      v.array.push_back(parse_scalar(c));
      c.skip_ws_and_comments(true);
      if (c.eof()) c.fail("unterminated array");
      if (c.peek() == ',') {
        ++c.pos;
        c.skip_ws_and_comments(true);
        if (!c.eof() && c.peek() == ']') {  // trailing comma
          ++c.pos;
          return v;
        }
        continue;
      }
      if (c.peek() == ']') {
        ++c.pos;
        return v;
      }
      c.fail("expected ',' or ']' in array");
    }
  }
  return parse_scalar(c);
}

TomlTable parse_toml(const std::string& text, const std::string& where) {
  TomlTable table;
  TomlCursor c{text, 0, where};
  std::string section;
  while (!c.eof()) {
    c.skip_ws_and_comments(true);
    if (c.eof()) break;
    if (c.peek() == '[') {
      ++c.pos;
      size_t b = c.pos;
      while (!c.eof() && c.peek() != ']' && c.peek() != '\n') ++c.pos;
      if (c.eof() || c.peek() != ']') c.fail("unterminated section header");
      section = c.text.substr(b, c.pos - b);
      ++c.pos;
      continue;
    }
    // key = value
    size_t b = c.pos;
    while (!c.eof() && (std::isalnum(static_cast<unsigned char>(c.peek())) || c.peek() == '_'))
      ++c.pos;
    std::string key = c.text.substr(b, c.pos - b);
    if (key.empty()) c.fail("expected a key");
    c.skip_ws_and_comments(false);
    if (c.eof() || c.peek() != '=') c.fail("expected '=' after key '" + key + "'");
    ++c.pos;
    table[section][key] = parse_value(c);
    c.skip_ws_and_comments(false);
    if (!c.eof() && c.peek() != '\n') c.fail("trailing input after value for '" + key + "'");
  }
  return table;
}

const TomlValue& require(const TomlTable& t, const std::string& section, const std::string& key,
                         const std::string& where) {
  auto sit = t.find(section);
  if (sit == t.end()) throw InputError(where + ": missing [" + section + "] section");
  auto kit = sit->second.find(key);
  if (kit == sit->second.end())
    throw InputError(where + ": missing key '" + key + "' in [" + section + "]");
  return kit->second;
}

const TomlValue* lookup(const TomlTable& t, const std::string& section, const std::string& key) {
  auto sit = t.find(section);
  if (sit == t.end()) return nullptr;
  auto kit = sit->second.find(key);
  return kit == sit->second.end() ? nullptr : &kit->second;
}

std::vector<std::string> string_array(const TomlValue& v, const std::string& what,
                                      const std::string& where) {
  if (v.kind != TomlValue::Kind::Array)
    throw InputError(where + ": " + what + " must be an array of strings");
  std::vector<std::string> out;
  for (const TomlValue& e : v.array) {
    if (e.kind != TomlValue::Kind::String)
      throw InputError(where + ": " + what + " must be an array of strings");
    out.push_back(e.str);
  }
  return out;
}

RPoly parse_poly_or_rethrow(const std::string& text, const std::vector<std::string>& vars,
                            const std::string& what, const std::string& where) {
  try {
    return parse_polynomial(text, vars);
  } catch (const ParseError& e) {
    throw InputError(where + ": in " + what + ": " + e.what());
  }
}

}  // namespace

RationalGF validate_gf(RationalGF gf) {
  const std::string ctx = "generating function";
  if (gf.nvars() < 2) throw InputError(ctx + ": need at least 2 variables");
  if (gf.numerator.nvars() != gf.nvars() || gf.denominator.nvars() != gf.nvars())
    throw InputError(ctx + ": polynomial arity does not match variable list");
  if (gf.denominator.is_zero()) throw InputError(ctx + ": zero denominator");
  Monomial zero(size_t(gf.nvars()), 0);
  if (gf.denominator.coefficient(zero) == 0)
    throw InputError(ctx + ": H(0) = 0, F is not analytic at the origin");
  if (gf.has_factors()) {
    RPoly prod = RPoly::constant(gf.nvars(), Rational(1));
    for (const RPoly& f : gf.factors) {
      if (f.nvars() != gf.nvars()) throw InputError(ctx + ": factor arity mismatch");
      prod = prod * f;
    }
    RPoly diff = prod - gf.denominator;
    if (!diff.is_zero()) {
      const auto& [m, c] = *diff.terms().begin();
      std::ostringstream os;
      os << ctx << ": product of denominator_factors differs from denominator; "
         << "first differing monomial exponents (";
      for (size_t i = 0; i < m.size(); ++i) os << (i ? "," : "") << m[i];
      os << ") by " << rational_to_string(c);
      throw InputError(os.str());
    }
  }
  return gf;
}

Problem parse_problem(const std::string& text, const std::string& where) {
  TomlTable t = parse_toml(text, where);

  Problem p;
  p.gf.variables = string_array(require(t, "gf", "variables", where), "gf.variables", where);
  if (p.gf.variables.size() < 2) throw InputError(where + ": need at least 2 variables");

  const TomlValue& num = require(t, "gf", "numerator", where);
  const TomlValue& den = require(t, "gf", "denominator", where);
  if (num.kind != TomlValue::Kind::String || den.kind != TomlValue::Kind::String)
    throw InputError(where + ": numerator/denominator must be polynomial strings");
  p.gf.numerator = parse_poly_or_rethrow(num.str, p.gf.variables, "gf.numerator", where);
  p.gf.denominator = parse_poly_or_rethrow(den.str, p.gf.variables, "gf.denominator", where);

  if (const TomlValue* f = lookup(t, "gf", "denominator_factors")) {
    for (const std::string& s : string_array(*f, "gf.denominator_factors", where))
      p.gf.factors.push_back(
          parse_poly_or_rethrow(s, p.gf.variables, "gf.denominator_factors", where));
  }
  p.gf = validate_gf(std::move(p.gf));

  if (const TomlValue* pt = lookup(t, "point", "coordinates")) {
    PointSpec ps;
    for (const std::string& s : string_array(*pt, "point.coordinates", where)) {
      try {
        ps.coordinates.push_back(rational_from_string(s));
      } catch (const std::invalid_argument& e) {
        throw InputError(where + ": point.coordinates: " + e.what());
      }
    }
    if (ps.dim() != p.gf.nvars())
      throw InputError(where + ": point.coordinates arity does not match variables");
    for (const Rational& c : ps.coordinates)
      if (c == 0) throw InputError(where + ": point coordinates must all be nonzero");
    p.point = std::move(ps);
  } else if (t.count("point")) {
    throw InputError(where + ": [point] section requires 'coordinates'");
  }

  if (const TomlValue* v = lookup(t, "options", "oracle_max_total_degree")) {
    if (v->kind != TomlValue::Kind::Int || v->integer < 0)
      throw InputError(where + ": options.oracle_max_total_degree must be a nonnegative integer");
    p.options.oracle_max_total_degree = int(v->integer);
  }
  if (const TomlValue* v = lookup(t, "options", "rank_tolerance")) {
    double x = v->kind == TomlValue::Kind::Float ? v->real
               : v->kind == TomlValue::Kind::Int ? double(v->integer)
                                                 : -1.0;
    if (x <= 0) throw InputError(where + ": options.rank_tolerance must be positive");
    p.options.rank_tolerance = x;
  }
  if (const TomlValue* v = lookup(t, "options", "minimality_grid")) {
    if (v->kind != TomlValue::Kind::Int || v->integer < 4)
      throw InputError(where + ": options.minimality_grid must be an integer >= 4");
    p.options.minimality_grid = int(v->integer);
  }
  return p;
}

Problem load_problem(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open problem file: " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return parse_problem(os.str(), path);
}

}  // namespace mpasym
