#pragma once

#include <string_view>

#include "juliasym/rational.hpp"

namespace juliasym {

// Expression grammar, variable `z`, imaginary unit `i`:
//
//   expr    := ['+'|'-'] term (('+'|'-') term)*
//   term    := factor (['*'|'/'] factor)*      juxtaposition multiplies: 3z^2, z(z-1)
//   factor  := ['+'|'-'] primary ['^' ['-'] integer]
//   primary := number ['i'] | 'i' | 'z' | '(' expr ')'
//
// e.g. "z^3 - 1/3", "z^3 - 1.2i*z", "3z^3/(3 - z^3)", "z*(z^3-1)".
// Errors throw ParseError carrying the 0-based character position.

RationalMap parse_map(std::string_view text, const ToleranceConfig& tol = {});

/// Throws ParseError if the expression has a non-constant denominator.
Polynomial parse_polynomial(std::string_view text, const ToleranceConfig& tol = {});

/// A constant expression such as "0.01", "-i", "1/3 + 2i".
Complex parse_complex(std::string_view text);

}  // namespace juliasym
