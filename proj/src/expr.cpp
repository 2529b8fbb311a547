#include "kummer/expr.hpp"

#include <cctype>

#include "kummer/error.hpp"

namespace kummer {

namespace {

class Parser {
 public:
  Parser(const Field& f, std::string_view src) : f_(f), src_(src) {}

  FieldElem run() {
    FieldElem r = expr();
    skip_ws();
    if (pos_ != src_.size()) throw SyntaxError(pos_, "unexpected '" + std::string(1, src_[pos_]) + "'");
    return r;
  }

 private:
  void skip_ws() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < src_.size() && src_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  FieldElem expr() {
    FieldElem r = term();
    for (;;) {
      if (accept('+')) {
        r += term();
      } else if (accept('-')) {
        r -= term();
      } else {
        return r;
      }
    }
  }

  FieldElem term() {
    FieldElem r = unary();
    for (;;) {
      if (accept('*')) {
        r *= unary();
      } else if (accept('/')) {
        std::size_t at = pos_;
        FieldElem d = unary();
        if (d.is_zero()) throw Error(ErrorKind::DivisionByZero, "division by zero at position " + std::to_string(at));
        r = r / d;
      } else {
        return r;
      }
    }
  }

  FieldElem unary() {
    if (accept('-')) return -unary();
    return factor();
  }

  FieldElem factor() {
    FieldElem b = base();
    if (accept('^')) {
      bool neg = accept('-');
      skip_ws();
      std::size_t at = pos_;
      if (at >= src_.size() || !std::isdigit(static_cast<unsigned char>(src_[at])))
        throw SyntaxError(at, "expected integer exponent");
      mpz_class e = integer();
      if (e > 1000000) throw SyntaxError(at, "exponent too large");
      long k = e.get_si();
      if (neg) {
        if (b.is_zero()) throw Error(ErrorKind::DivisionByZero, "negative power of zero at position " + std::to_string(at));
        k = -k;
      }
      return b.pow(k);
    }
    return b;
  }

  mpz_class integer() {
    std::size_t start = pos_;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    return mpz_class(std::string(src_.substr(start, pos_ - start)));
  }

  FieldElem base() {
    skip_ws();
    if (pos_ >= src_.size()) throw SyntaxError(pos_, "unexpected end of input");
    char c = src_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) return f_.rational(mpq_class(integer()));
    if (c == '(') {
      ++pos_;
      FieldElem r = expr();
      if (!accept(')')) throw SyntaxError(pos_, "expected ')'");
      return r;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < src_.size() && std::isalnum(static_cast<unsigned char>(src_[pos_]))) ++pos_;
      std::string_view id = src_.substr(start, pos_ - start);
      if (id == "p") return f_.prime_elem();
      if (id == "z") return f_.z();
      if (id == "zeta") return f_.zeta();
      if (id == "u") {
        if (!f_.with_u()) throw Error(ErrorKind::NotAdjoined, "u used at position " + std::to_string(start) + " but not adjoined");
        return f_.u();
      }
      if (id == "s") {
        if (f_.tower_level() == 0) throw Error(ErrorKind::NotAdjoined, "s used at position " + std::to_string(start) + " but tower level is 0");
        return f_.s();
      }
      throw SyntaxError(start, "unknown identifier '" + std::string(id) + "'");
    }
    throw SyntaxError(pos_, "unexpected '" + std::string(1, c) + "'");
  }

  const Field& f_;
  std::string_view src_;
  std::size_t pos_ = 0;
};

}  // namespace

FieldElem eval_expr(const Field& field, std::string_view src) { return Parser(field, src).run(); }

}  // namespace kummer
