#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "chw/laurent.hpp"

namespace chw {

// Default variable names of an ambient: x1..xn, then z (or z1, z2, ...) for
// extra variables.
std::vector<std::string> default_variable_names(const Ambient& amb);

// Polynomial grammar: sums of products of rational numbers, the parameter k,
// variables and parenthesized sub-expressions; '^' takes a signed integer.
// Division is allowed by monomials only. Errors carry a 1-based column.
//
//   "x1^2*x2^-1 - 3/2*x3",  "(1+1/2*k)*x1",  "(x1+x2)^3/x1"
LaurentPoly parse_laurent(std::string_view text, const Ambient& amb);
LaurentPoly parse_laurent(std::string_view text, const Ambient& amb,
                          const std::vector<std::string>& names);

// A scalar expression in k only, e.g. "(k^2-1)/(k-1)".
RationalFunction parse_rational_function(std::string_view text);

// Terms in descending lexicographic exponent order, e.g. "x1^2 - x2^2".
std::string format_laurent(const LaurentPoly& p);
std::string format_laurent(const LaurentPoly& p, const std::vector<std::string>& names);

}  // namespace chw
