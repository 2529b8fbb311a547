#pragma once

#include <string_view>

#include "kummer/field.hpp"

namespace kummer {

// Parses and evaluates an element expression over the given field.
//   expr   := term (('+'|'-') term)*
//   term   := unary (('*'|'/') unary)*
//   unary  := '-' unary | factor
//   factor := base ('^' '-'? integer)?
//   base   := integer | 'p' | 'z' | 'zeta' | 'u' | 's' | '(' expr ')'
// Throws SyntaxError, Error(DivisionByZero), Error(NotAdjoined).
FieldElem eval_expr(const Field& field, std::string_view src);

}  // namespace kummer
