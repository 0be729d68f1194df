#pragma once

#include "saito/poly.hpp"
#include "saito/ratfn.hpp"

namespace saito {

struct ParseError : std::runtime_error {
    int line, column;
    ParseError(const std::string& msg, int line, int column)
        : std::runtime_error(msg + " at line " + std::to_string(line) + ", column " + std::to_string(column)),
          line(line), column(column) {}
};

// Grammar:
//   expr   := term (('+'|'-') term)*
//   term   := unary ('*' unary)*
//   unary  := '-' unary | power
//   power  := primary ('^' INT)?
//   primary:= INT ('/' INT)? | IDENT | '(' expr ')'
// '^' binds tighter than '*' binds tighter than '+'/'-'; '+','-','*' are
// left-associative; whitespace is insignificant; implicit multiplication is
// a syntax error.
Poly parse_poly(const std::string& source, const std::vector<std::string>& variables);

// Accepts either a polynomial expression or the printed quotient form
// "(num)/(den)".
RatFn parse_ratfn(const std::string& source, const std::vector<std::string>& variables);

}  // namespace saito
