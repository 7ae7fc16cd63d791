#pragma once

#include <string_view>

#include "wdvvkit/poly.hpp"

namespace wdvvkit {

// Parses an arithmetic expression over the context's variables into a Poly.
//
//   expr   := term (('+' | '-') term)*
//   term   := factor (('*' | '/') factor)*
//   factor := '-' factor | power
//   power  := primary ('^' INTEGER)?
//   primary:= NUMBER | IDENT | '(' expr ')'
//
// NUMBER is an arbitrary-precision integer literal; ratios like 1/2 come out
// of the '/' operator.  '*' is never implicit.  '/' requires the divisor to
// evaluate to a nonzero constant.  Exponents are non-negative integer
// literals.
// Errors throw ParseError carrying the byte offset of the offending token.
Poly parse_expr(std::string_view text, const VarCtxPtr& ctx);

} // namespace wdvvkit
