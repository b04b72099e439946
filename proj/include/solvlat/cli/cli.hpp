#pragma once

#include "solvlat/lie/algebra.hpp"
#include "solvlat/obstruct/report.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace solvlat::cli {

using Json = obstruct::Json;

enum ExitCode { Ok = 0, Usage = 1, CheckFailed = 2 };

/// Builtin name (example2, modified:l1,l2, g65:q, n3+n3, ...) or a path to an algebra file.
/// Throws std::invalid_argument for an unknown name or a malformed file (with line and column).
lie::LieAlgebra resolve_target(const std::string& target);

struct ExampleEntry {
    std::string name;
    std::string usage;
    std::size_t dim;  // 0 when it depends on the parameter
    std::string note;
};

/// Stable ordering.
std::vector<ExampleEntry> example_registry();

/// Default symplectic form for the Example-2 shaped targets.
inline constexpr const char* kDefaultOmega = "A^B + X1^Z1 + X2^Z2 + X3^Z3";

/// Renders a JSON result as indented `key: value` lines.
void render_text(std::ostream& out, const Json& j, int indent = 0);

/// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace solvlat::cli
