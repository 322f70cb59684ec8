#pragma once

#include <string_view>

#include "qid/poly.hpp"

namespace qid {

// Parses
//   expr   := term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := '-' factor | atom ('^' ['-'] integer)?
//   atom   := integer ('/' integer)? | identifier | '(' expr ')'
// into a canonical polynomial. Negative exponents are accepted only where the
// base is invertible (powers of q and x, nonzero constants). Throws
// SyntaxError with the byte offset of the offending input.
MultiPoly parse_expr(std::string_view text);

}  // namespace qid
