#pragma once

#include <string_view>

#include "fthresh/polynomial.hpp"

namespace fthresh {

// Parses the polynomial grammar
//
//   expr   := term (('+' | '-') term)*
//   term   := factor ('*' factor)*
//   factor := INT | VAR | '(' expr ')' | factor '^' INT
//
// Integer literals are reduced mod p. Whitespace is ignored between tokens.
// Throws ParseError (with byte offset) on unknown variables, malformed input
// and exponent overflow.
Polynomial parse_polynomial(std::string_view source, const PolyRingPtr& ring);

}  // namespace fthresh
