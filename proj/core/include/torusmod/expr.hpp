#pragma once

#include "torusmod/value.hpp"

#include <stdexcept>
#include <string>
#include <string_view>

namespace torusmod {

class ExprError : public std::runtime_error {
 public:
  ExprError(const std::string& msg, std::size_t column)
      : std::runtime_error(msg + " at column " + std::to_string(column)), column_(column) {}
  std::size_t column() const { return column_; }  // 1-based

 private:
  std::size_t column_;
};

// Grammar:
//   expr   := term (('+'|'-') term)*
//   term   := unary (('*'|'/') unary)*
//   unary  := ('+'|'-') unary | atom
//   atom   := number | 'pi' | 'i' | ('sqrt'|'exp') '(' expr ')' | '(' expr ')'
// Integers and p/q quotients stay exact; decimal or exponent literals are floats.
// With exact == false the result is always converted to a complex double.
Value parse_expr(std::string_view text, bool exact = true);

}  // namespace torusmod
