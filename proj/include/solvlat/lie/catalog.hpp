#pragma once

#include "solvlat/lie/algebra.hpp"

#include <string>
#include <vector>

namespace solvlat::lie {

/// A, B, X1, X2, X3, Z1, Z2, Z3; B central, ad A diagonal with weights
/// (-1, -2, 3) on X and (1, 2, -3) on Z, [X2,X3] = 2Z1, [X1,X3] = Z2, [X1,X2] = -Z3.
LieAlgebra example2();

/// A, B, X1, Y1, Z1, X2, Y2, Z2; two Heisenberg factors with
/// ad A = diag(1, -2, -1, -1, 2, 1) on (X1, Y1, Z1, X2, Y2, Z2).
LieAlgebra example3();

/// Example-2 bracket shape with ad A weights (l1, l2, l3) on X and
/// (l2+l3, l1+l3, l1+l2) on Z, where l3 = -l1-l2. Throws
/// std::invalid_argument unless l1, l2 and l1+l2 are nonzero.
LieAlgebra modified_family(const Rational& l1, const Rational& l2);

/// X1..X6. For q > 0 squarefree: [X1,X3] = X5, [X2,X4] = X5, [X1,X4] = X6,
/// [X2,X3] = q X6. For q = 0 the split form [X1,X3] = X5, [X2,X4] = X6.
LieAlgebra g65(long q);

/// X, Y, Z with [X,Y] = Z.
LieAlgebra heisenberg3();

/// X1..Xk and Zij (i < j) with [Xi,Xj] = Zij.
LieAlgebra free2step(std::size_t k);

/// Labels are kept when disjoint, otherwise suffixed with 1 and 2.
LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b);

/// e1..en, all brackets zero.
LieAlgebra abelian(std::size_t n);

/// X, Y, Z, W with [X,Y] = Z; W spans the abelian factor.
LieAlgebra kodaira_thurston();

bool is_squarefree(long q);

}  // namespace solvlat::lie
