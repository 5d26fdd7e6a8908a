#include "mpasym/parse.hpp"

#include <cctype>

namespace mpasym {

namespace {

enum class Tok { Number, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };

struct Token {
  Tok kind;
  std::string text;
  size_t offset;
};

class Lexer {
 public:
  explicit Lexer(const std::string& s) : s_(s) {}

  Token next() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    size_t at = pos_;
    if (pos_ >= s_.size()) return {Tok::End, "", at};
    char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t b = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return {Tok::Number, s_.substr(b, pos_ - b), at};
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t b = pos_;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
        ++pos_;
      return {Tok::Ident, s_.substr(b, pos_ - b), at};
    }
    ++pos_;
    switch (c) {
      case '+': return {Tok::Plus, "+", at};
      case '-': return {Tok::Minus, "-", at};
      case '*': return {Tok::Star, "*", at};
      case '/': return {Tok::Slash, "/", at};
      case '^': return {Tok::Caret, "^", at};
      case '(': return {Tok::LParen, "(", at};
      case ')': return {Tok::RParen, ")", at};
      default: throw ParseError(std::string("unexpected character '") + c + "'", at);
    }
  }

 private:
  const std::string& s_;
  size_t pos_ = 0;
};

class Parser {
 public:
  Parser(const std::string& text, const std::vector<std::string>& vars)
      : lex_(text), vars_(vars) {
    advance();
  }

  RPoly parse() {
    RPoly p = expr();
    if (cur_.kind != Tok::End) throw ParseError("trailing input", cur_.offset);
    return p;
  }

 private:
  void advance() { cur_ = lex_.next(); }

  int var_index(const Token& t) const {
    for (size_t i = 0; i < vars_.size(); ++i)
      if (vars_[i] == t.text) return int(i);
    throw ParseError("unknown variable '" + t.text + "'", t.offset);
  }

  RPoly expr() {
    RPoly p = term();
    while (cur_.kind == Tok::Plus || cur_.kind == Tok::Minus) {
      bool minus = cur_.kind == Tok::Minus;
      advance();
      RPoly q = term();
      p = minus ? p - q : p + q;
    }
    return p;
  }

  RPoly term() {
    RPoly p = unary();
    while (cur_.kind == Tok::Star || cur_.kind == Tok::Slash) {
      bool div = cur_.kind == Tok::Slash;
      size_t at = cur_.offset;
      advance();
      RPoly q = unary();
      if (div) {
        if (q.degree() > 0)
          throw ParseError("division by a non-constant expression", at);
        Rational c = q.coefficient(Monomial(size_t(q.nvars()), 0));
        if (c == 0) throw ParseError("division by zero", at);
        p *= Rational(1) / c;
      } else {
        p = p * q;
      }
    }
    return p;
  }

  RPoly unary() {
    if (cur_.kind == Tok::Minus) {
      advance();
      return -unary();
    }
    if (cur_.kind == Tok::Plus) {
      advance();
      return unary();
    }
    return power();
  }

  RPoly power() {
    RPoly base = atom();
    if (cur_.kind != Tok::Caret) return base;
    size_t at = cur_.offset;
    advance();
    if (cur_.kind == Tok::Minus)
      throw ParseError("negative exponent", cur_.offset);
    if (cur_.kind != Tok::Number)
      throw ParseError("exponent must be a nonnegative integer", at);
    long e = 0;
    try {
      e = std::stol(cur_.text);
    } catch (...) {
      throw ParseError("exponent out of range", cur_.offset);
    }
    advance();
    if (cur_.kind == Tok::Slash || cur_.kind == Tok::Caret)
      throw ParseError("exponent must be a nonnegative integer", cur_.offset);
    RPoly r = RPoly::constant(int(vars_.size()), Rational(1));
    for (long k = 0; k < e; ++k) r = r * base;
    return r;
  }

  RPoly atom() {
    switch (cur_.kind) {
      case Tok::Number: {
        // rational_from_string strips leading zeros (GMP would read an
        // octal prefix)
        Rational c = rational_from_string(cur_.text);
        advance();
        return RPoly::constant(int(vars_.size()), c);
      }
      case Tok::Ident: {
        int v = var_index(cur_);
        advance();
        return RPoly::variable(int(vars_.size()), v);
      }
      case Tok::LParen: {
        advance();
        RPoly p = expr();
        if (cur_.kind != Tok::RParen) throw ParseError("expected ')'", cur_.offset);
        advance();
        return p;
      }
      default:
        throw ParseError("expected a number, variable, or '('", cur_.offset);
    }
  }

  Lexer lex_;
  const std::vector<std::string>& vars_;
  Token cur_;
};

}  // namespace

RPoly parse_polynomial(const std::string& text, const std::vector<std::string>& variables) {
  return Parser(text, variables).parse();
}

}  // namespace mpasym
