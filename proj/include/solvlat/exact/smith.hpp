#pragma once

#include "solvlat/exact/matrix.hpp"

#include <vector>

namespace solvlat::exact {

/// U * M * V == diag(d) with d[0] | d[1] | ..., all d[i] >= 0, and U, V
/// unimodular. `diagonal` has min(rows, cols) entries (trailing zeros kept).
struct SmithForm {
    std::vector<Integer> diagonal;
    MatrixZ u;
    MatrixZ v;
};

SmithForm smith_normal_form(const MatrixZ& m);

/// Index of the subgroup spanned by the columns of m inside Z^rows, or 0 if
/// the columns do not span a full-rank sublattice (infinite index).
Integer lattice_index(const MatrixZ& columns);

}  // namespace solvlat::exact
