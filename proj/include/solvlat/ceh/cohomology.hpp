#pragma once

#include "solvlat/lie/algebra.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace solvlat::ceh {

using exact::MatrixQ;
using exact::Rational;
using exact::VectorQ;
using lie::LieAlgebra;

/// Bit i set means the dual basis element e*_i occurs.
using Mask = std::uint32_t;

/// Exterior algebra of the dual with the Chevalley-Eilenberg differential.
/// Degree-k basis: k-subsets of indices in lexicographic order.
class CochainComplex {
public:
    explicit CochainComplex(const LieAlgebra& L);

    const LieAlgebra& algebra() const { return m_algebra; }
    std::size_t dim() const { return m_algebra.dim(); }
    const std::vector<Mask>& basis(std::size_t k) const { return m_basis.at(k); }
    std::size_t rank(std::size_t k) const { return m_basis.at(k).size(); }
    std::size_t index(Mask m) const { return m_index.at(m); }
    /// e.g. "X1^Z1"; "1" in degree 0.
    std::string monomial_label(Mask m) const;
    std::string form_to_string(std::size_t k, const VectorQ& v) const;

    /// d: degree k -> degree k+1, matrix of size C(n,k+1) x C(n,k).
    const MatrixQ& differential(std::size_t k) const { return m_d.at(k); }
    VectorQ apply_d(std::size_t k, const VectorQ& v) const;

    VectorQ wedge(std::size_t p, const VectorQ& a, std::size_t q, const VectorQ& b) const;
    /// Degree-1 form e*_i.
    VectorQ dual(std::size_t i) const;

private:
    LieAlgebra m_algebra;
    std::vector<std::vector<Mask>> m_basis;
    std::vector<std::size_t> m_index;
    std::vector<MatrixQ> m_d;
};

/// Sign of e_a ^ e_b for disjoint masks relative to the sorted monomial; 0 if they overlap.
int wedge_sign(Mask a, Mask b);

/// Matrix of d on degree k forms. Throws std::out_of_range unless k <= dim.
MatrixQ ce_differential(const LieAlgebra& L, std::size_t k);
std::vector<std::size_t> betti(const LieAlgebra& L);

/// H^k with chosen cocycle representatives (complements of the coboundaries).
class CohomologyRing {
public:
    explicit CohomologyRing(const LieAlgebra& L);

    const CochainComplex& complex() const { return m_complex; }
    std::size_t dim() const { return m_complex.dim(); }
    std::size_t betti(std::size_t k) const { return m_reps.at(k).size(); }
    std::vector<std::size_t> betti() const;
    const std::vector<VectorQ>& representatives(std::size_t k) const { return m_reps.at(k); }

    bool is_cocycle(std::size_t k, const VectorQ& v) const;
    bool is_coboundary(std::size_t k, const VectorQ& v) const;
    /// Coordinates of the class of a cocycle; throws std::invalid_argument otherwise.
    VectorQ class_of(std::size_t k, const VectorQ& cocycle) const;
    VectorQ representative(std::size_t k, const VectorQ& coords) const;
    /// Product of classes given in representative coordinates.
    /// Throws std::invalid_argument if p + q exceeds the dimension.
    VectorQ cup(std::size_t p, const VectorQ& a, std::size_t q, const VectorQ& b) const;
    VectorQ unit() const { return VectorQ{1}; }

private:
    CochainComplex m_complex;
    std::vector<std::vector<VectorQ>> m_reps;
    std::vector<std::vector<VectorQ>> m_boundaries;
    // [reps | boundary basis] per degree, for coordinate solves
    std::vector<MatrixQ> m_frame;
};

/// Parses `A^B + X1^Z1 - 2*X2^Z2`; labels name dual basis elements.
/// Throws ParseError (line 1) on bad input.
VectorQ parse_two_form(const LieAlgebra& L, std::string_view text);

struct SymplecticCheck {
    bool closed;
    bool nondegenerate;
};

/// Throws std::invalid_argument for odd dimension.
SymplecticCheck symplectic_check(const LieAlgebra& L, const VectorQ& omega);

struct LefschetzResult {
    bool holds;
    std::optional<std::size_t> failing_degree;
    /// rank of H^{n-k} -> H^{n+k} for k = 1..n
    std::vector<std::size_t> ranks;
};

/// Cup with [omega]^k from H^{n-k} to H^{n+k} for k = 1..n, n = dim/2.
/// Throws std::invalid_argument if omega is not closed or dim is odd.
LefschetzResult hard_lefschetz(const CohomologyRing& H, const VectorQ& omega);
LefschetzResult hard_lefschetz(const LieAlgebra& L, const VectorQ& omega);

/// Classes t1, t2 in H^1 and h in H^2 (representative coordinates) tested
/// against the ring of a product of a 2-torus with CP^3.
struct ProductRingCheck {
    bool t_squares_vanish;
    bool h4_vanishes;
    bool h3_nonzero;
    /// the 16 monomials t1^a t2^b h^c (a, b < 2, c < 4) are independent
    bool monomials_independent;
    bool ok() const { return t_squares_vanish && h4_vanishes && h3_nonzero && monomials_independent; }
};

ProductRingCheck torus_cp3_check(const CohomologyRing& H, const VectorQ& t1, const VectorQ& t2, const VectorQ& h);

}  // namespace solvlat::ceh
