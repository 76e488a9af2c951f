#pragma once

#include <string_view>

namespace solitonlab::sym {

class DiffPoly;

/// Parse a polynomial expression.
///
///   expr    := term (('+' | '-') term)*
///   term    := unary ('*' unary)*
///   unary   := '-' unary | '+' unary | power
///   power   := primary ('^' integer)?
///   primary := integer ('/' integer)? | name "'"* | '(' expr ')'
///
/// Names come from the symbol registry; trailing apostrophes give the derivative
/// order. Throws ParseError (with byte position) on malformed text and
/// InvalidInput on unknown names.
DiffPoly parse_diff_poly(std::string_view text);

}  // namespace solitonlab::sym
