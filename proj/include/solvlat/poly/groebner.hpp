#pragma once

#include "solvlat/poly/multipoly.hpp"

#include <set>
#include <string>
#include <vector>

namespace solvlat::poly {

/// Reduced Groebner basis: monic leads, sorted by ascending lead monomial.
struct GroebnerBasis {
    MonomialOrder order;
    std::vector<MultiPoly> generators;

    bool contains(const MultiPoly& f) const;
    /// Generators free of every variable in `vars`.
    std::vector<MultiPoly> free_of(const std::vector<std::size_t>& vars) const;
};

/// Remainder of full multivariate division of f by `basis`.
MultiPoly normal_form(const MultiPoly& f, const std::vector<MultiPoly>& basis, const MonomialOrder& order);

struct BuchbergerStats {
    std::size_t pairs_considered = 0;
    std::size_t skipped_product = 0;
    std::size_t skipped_chain = 0;
    std::size_t reductions_to_zero = 0;
};

/// Reduced Groebner basis of the ideal generated by `gens`.
/// Zero inputs are ignored; an all-zero input gives an empty basis.
GroebnerBasis buchberger(const std::vector<MultiPoly>& gens, const MonomialOrder& order,
                         BuchbergerStats* stats = nullptr);

/// Lex order with the `drop` variables greatest (in ring order), the rest after them.
MonomialOrder elimination_order(std::size_t nvars, const std::vector<std::size_t>& drop);

/// Generators of the elimination ideal obtained from a lex basis with the
/// dropped variables greatest. Throws std::invalid_argument if `drop` covers
/// every variable or names an unknown one.
std::vector<MultiPoly> eliminate(const std::vector<MultiPoly>& gens, const std::set<std::string>& drop);

/// Sylvester matrix of f and g viewed as polynomials in `var`.
std::vector<std::vector<MultiPoly>> sylvester_matrix(const MultiPoly& f, const MultiPoly& g, std::size_t var);

/// Res_var(f, g) = det of the Sylvester matrix (fraction-free Bareiss).
/// Throws std::invalid_argument if both have degree 0 in `var`.
MultiPoly resultant(const MultiPoly& f, const MultiPoly& g, std::size_t var);

/// Determinant of a square matrix of polynomials by Bareiss elimination.
MultiPoly poly_determinant(std::vector<std::vector<MultiPoly>> m);

}  // namespace solvlat::poly
