#pragma once

#include "solvlat/lie/algebra.hpp"

#include <string>
#include <string_view>

namespace solvlat::lie {

/// Text format:
///   dim N
///   basis L1 L2 ... LN
///   [Li, Lj] = c*Lk + c*Lk ...
/// Coefficients are rationals; omitted brackets are zero; `#` starts a
/// comment. Throws ParseError with line and column.
LieAlgebra parse_algebra(std::string_view text);
LieAlgebra load_algebra(const std::string& path);

/// Inverse of parse_algebra; brackets listed for i < j in basis order.
std::string dump_algebra(const LieAlgebra& L);

}  // namespace solvlat::lie
