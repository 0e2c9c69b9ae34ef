#include "fewopt/parse.hpp"

#include <cctype>

namespace fewopt {

namespace {

class Parser {
 public:
  Parser(const std::string& s, mpfr_prec_t prec) : s_(s), prec_(prec) {}

  Real run() {
    Real v = expr();
    skip_ws();
    if (pos_ != s_.size()) throw ParseError("unexpected trailing input", pos_);
    return v;
  }

 private:
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  Real expr() {
    Real v = term();
    while (true) {
      if (eat('+'))
        v += term();
      else if (eat('-'))
        v -= term();
      else
        return v;
    }
  }

  Real term() {
    Real v = factor();
    while (true) {
      if (eat('*'))
        v *= factor();
      else if (eat('/')) {
        size_t at = pos_;
        Real d = factor();
        if (d.is_zero()) throw ParseError("division by zero", at);
        v /= d;
      } else {
        return v;
      }
    }
  }

  Real factor() {
    if (eat('-')) return -factor();
    return primary();
  }

  bool eat_word(const char* w) {
    skip_ws();
    size_t len = 0;
    while (w[len]) ++len;
    if (s_.compare(pos_, len, w) != 0) return false;
    // Reject identifier characters immediately after the keyword.
    size_t end = pos_ + len;
    if (end < s_.size() && std::isalnum(static_cast<unsigned char>(s_[end]))) return false;
    pos_ = end;
    return true;
  }

  Real primary() {
    skip_ws();
    if (pos_ >= s_.size()) throw ParseError("unexpected end of expression", pos_);
    if (eat_word("sqrt")) {
      size_t at = pos_;
      if (!eat('(')) throw ParseError("expected '(' after sqrt", pos_);
      Real v = expr();
      if (!eat(')')) throw ParseError("expected ')'", pos_);
      if (v.sign() < 0) throw ParseError("sqrt of negative value", at);
      return sqrt(v);
    }
    if (eat_word("pi")) return Real::pi(prec_);
    if (eat_word("e")) return Real::euler_e(prec_);
    if (eat('(')) {
      Real v = expr();
      if (!eat(')')) throw ParseError("expected ')'", pos_);
      return v;
    }
    char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
    throw ParseError("expected a number, constant, or parenthesized expression", pos_);
  }

  Real number() {
    size_t start = pos_;
    while (pos_ < s_.size() &&
           (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '.'))
      ++pos_;
    if (pos_ == start) throw ParseError("expected digits", pos_);
    try {
      return Real::from_decimal(s_.substr(start, pos_ - start), prec_);
    } catch (const ParseError&) {
      throw ParseError("malformed decimal literal", start);
    }
  }

  const std::string& s_;
  mpfr_prec_t prec_;
  size_t pos_ = 0;
};

}  // namespace

Real parse_scalar(const std::string& s, mpfr_prec_t prec) {
  return Parser(s, prec).run();
}

}  // namespace fewopt
