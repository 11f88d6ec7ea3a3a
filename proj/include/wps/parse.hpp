#pragma once
#include <string>

#include "wps/poly.hpp"

namespace wps {

// Parses the polynomial expression language into a canonical Poly.
//
// Tokens: integers, rationals "p/q" (no spaces around the slash), variables
// x{k} (k >= 1; x0 is an alias for x1) and t{k} (k >= 1), operators + - * ^,
// parentheses. Juxtaposition is not multiplication; whitespace between tokens
// is insignificant. Exponents are non-negative integers; an exponent > 1 on an
// odd variable is rejected. Errors carry the 1-based column offset.
Poly parse_polynomial(const std::string& text, int even_vars, int odd_vars);

} // namespace wps
