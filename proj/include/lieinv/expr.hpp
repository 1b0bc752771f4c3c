#pragma once

#include <span>
#include <string>
#include <string_view>

#include "lieinv/algebra.hpp"
#include "lieinv/polynomial.hpp"

namespace lieinv {

// Recursive-descent parser for invariant expressions:
//
//   expr    := term (('+' | '-') term)*
//   term    := unary (('*' | '/') unary)*
//   unary   := '-' unary | power
//   power   := primary ('^' ['-'] integer)?
//   primary := integer | variable | 'pow' '(' expr ',' rational ')' | '(' expr ')'
//
// Any pow(...) routes the result to PowerProduct form; a constant prefactor
// becomes a constant base. Throws SyntaxError (with byte position),
// UnknownVariable, MixedForm (pow under + or -), ZeroDenominator.
Function parse_expr(std::string_view src, std::span<const std::string> names);
inline Function parse_expr(std::string_view src, const LieAlgebra& g) {
  return parse_expr(src, g.variable_names());
}

}  // namespace lieinv
