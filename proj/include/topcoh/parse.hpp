#pragma once

#include <string_view>

#include "topcoh/polynomial.hpp"

namespace topcoh {

// Parses the canonical polynomial syntax:
//
//   expression := ['+'|'-'] term (('+'|'-') term)*
//   term       := factor ('*' factor)*
//   factor     := '-' factor | base ['^' integer]
//   base       := number | variable | '(' expression ')'
//
// Numbers are nonnegative integers or rationals written n/d; '^' binds
// tighter than '*', which binds tighter than '+'/'-'; multiplication is
// always explicit. Exponents must be nonnegative integers. Unknown
// variables, malformed syntax and negative exponents raise ParseError with
// the byte offset of the offence. parse_polynomial inverts
// Polynomial::to_string exactly.
Polynomial parse_polynomial(std::string_view text, const RingPtr& ring);

} // namespace topcoh
