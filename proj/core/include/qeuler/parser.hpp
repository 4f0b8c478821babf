#pragma once

#include <string>

#include "qeuler/mpoly.hpp"

namespace qeuler {

// Parses the canonical polynomial syntax over the declared variables:
// integer and rational literals (e.g. 3, -5/2), variable names, binary
// + - *, unary -, ^ with nonnegative integer exponents, and parentheses.
// Implicit multiplication is a syntax error. Undeclared identifiers and
// malformed input raise ParseError with the character position.
MPoly<Rational> parse_poly(const std::string& text, const VarSetPtr& vars);

}  // namespace qeuler
