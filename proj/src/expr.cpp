#include "fom/expr.hpp"

#include <cctype>
#include <string>

#include "fom/error.hpp"

namespace fom {

namespace {

class Parser {
 public:
  Parser(std::string_view s, int n) : s_(s), n_(n) {}

  CycElt parse() {
    CycElt v = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected character '" + std::string(1, s_[pos_]) + "'");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  CycElt expr() {
    CycElt v = term();
    for (;;) {
      if (accept('+')) v += term();
      else if (accept('-')) v -= term();
      else return v;
    }
  }

  CycElt term() {
    CycElt v = unary();
    for (;;) {
      if (accept('*')) {
        v *= unary();
      } else if (accept('/')) {
        CycElt d = unary();
        if (d.is_zero()) throw DivisionByZero();
        v /= d;
      } else {
        return v;
      }
    }
  }

  CycElt unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  long exponent() {
    bool paren = accept('(');
    bool neg = accept('-');
    skip();
    if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
      fail("expected integer exponent");
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    std::string digits(s_.substr(start, pos_ - start));
    if (digits.size() > 9) fail("exponent too large");
    long e = std::stol(digits);
    if (paren) expect(')');
    return neg ? -e : e;
  }

  CycElt power() {
    CycElt base = primary();
    if (accept('^')) {
      long e = exponent();
      if (e < 0 && base.is_zero()) throw DivisionByZero();
      return base.pow(e);
    }
    return base;
  }

  CycElt primary() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of expression");
    char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      Integer v(std::string(s_.substr(start, pos_ - start)));
      return CycElt(Rational(v), n_);
    }
    if (accept('(')) {
      CycElt v = expr();
      expect(')');
      return v;
    }
    if (s_.substr(pos_, 4) == "conj") {
      pos_ += 4;
      expect('(');
      CycElt v = expr();
      expect(')');
      return conjugate(v);
    }
    if (c == 'z') {
      ++pos_;
      return CycElt::zeta(n_, 1);
    }
    fail("unexpected character '" + std::string(1, c) + "'");
  }

  std::string_view s_;
  int n_;
  std::size_t pos_ = 0;
};

}  // namespace

CycElt parse_element(std::string_view expr, int n) {
  if (n < 1) throw PreconditionError("conductor must be >= 1");
  return Parser(expr, n).parse();
}

}  // namespace fom
