#pragma once

#include "solvlat/poly/multipoly.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace solvlat::poly {

/// Parses `x^5 - m*x^2 + x + 1` style input: explicit `*`, `^` with a
/// nonnegative integer exponent, parentheses, rational literals such as 3/4.
/// Identifiers must appear in `variables`. Throws ParseError with the
/// position of the offending character; `line` is reported as given.
MultiPoly parse_polynomial(std::string_view text, const std::vector<std::string>& variables, std::size_t line = 1);

/// Variables in order of first appearance.
std::vector<std::string> scan_variables(std::string_view text);

/// Parse with variables inferred by scan_variables.
MultiPoly parse_polynomial(std::string_view text);

}  // namespace solvlat::poly
