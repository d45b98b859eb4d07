#include "torusmod/expr.hpp"

#include <cctype>
#include <cstdlib>

namespace torusmod {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  Value parse() {
    Value v = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return v;
  }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& msg) const { throw ExprError(msg, pos_ + 1); }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!eat(c)) fail(std::string("expected '") + c + "'");
  }

  Value expr() {
    Value v = term();
    for (;;) {
      if (eat('+')) v = v + term();
      else if (eat('-')) v = v - term();
      else return v;
    }
  }

  Value term() {
    Value v = unary();
    for (;;) {
      if (eat('*')) {
        v = v * unary();
      } else if (eat('/')) {
        std::size_t at = pos_;
        Value d = unary();
        if (d.is_zero()) {
          pos_ = at;
          fail("division by zero");
        }
        v = v / d;
      } else {
        return v;
      }
    }
  }

  Value unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    return atom();
  }

  Value atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of expression");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Value v = expr();
      expect(')');
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      std::string_view id = s_.substr(start, pos_ - start);
      if (id == "pi") return Value::pi();
      if (id == "i") return Value::imag_unit();
      if (id == "sqrt" || id == "exp") {
        expect('(');
        Value arg = expr();
        expect(')');
        return id == "sqrt" ? torusmod::sqrt(arg) : torusmod::exp(arg);
      }
      pos_ = start;
      fail("unknown identifier '" + std::string(id) + "'");
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  Value number() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    bool is_float = false;
    if (pos_ < s_.size() && s_[pos_] == '.') {
      is_float = true;
      ++pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    if (pos_ < s_.size() && (s_[pos_] == 'e' || s_[pos_] == 'E')) {
      std::size_t save = pos_++;
      if (pos_ < s_.size() && (s_[pos_] == '+' || s_[pos_] == '-')) ++pos_;
      if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
        is_float = true;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      } else {
        pos_ = save;  // 'e' belongs to something else, e.g. "2exp" is rejected later
      }
    }
    std::string tok(s_.substr(start, pos_ - start));
    if (tok == ".") {
      pos_ = start;
      fail("malformed number");
    }
    if (is_float) return Value(Complex(std::strtod(tok.c_str(), nullptr), 0.0));
    return Value(Rational(parse_integer(tok)));
  }
};

}  // namespace

Value parse_expr(std::string_view text, bool exact) {
  Value v = Parser(text).parse();
  return exact ? v : v.as_float();
}

}  // namespace torusmod
