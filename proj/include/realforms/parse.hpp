#pragma once

#include <string>

#include "realforms/cyclo.hpp"
#include "realforms/unipoly.hpp"

namespace realforms {

// Scalar literal grammar: integers, fractions "3/7", "i", "zeta(N)"
// and "zeta(N)^k", combined with "*" and a leading sign.
// ParseError on malformed input.
CycloNum parse_scalar(const std::string& text);

// Polynomial literal grammar: sums of terms like "z^4 - 2*z^2 + 1" with
// scalar coefficients per parse_scalar. ParseError on malformed input.
UniPoly parse_poly(const std::string& text, const std::string& var = "z");

}  // namespace realforms
