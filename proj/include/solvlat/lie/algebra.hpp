#pragma once

#include "solvlat/exact/matrix.hpp"
#include "solvlat/exact/rational.hpp"

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace solvlat::lie {

using exact::MatrixQ;
using exact::Rational;
using exact::VectorQ;

/// Finite-dimensional algebra over Q given by structure constants
/// [e_i, e_j] = sum_k c[i][j][k] e_k. Starts abelian.
class LieAlgebra {
public:
    LieAlgebra() = default;
    explicit LieAlgebra(std::vector<std::string> labels, std::string name = {});

    std::size_t dim() const { return m_labels.size(); }
    const std::vector<std::string>& labels() const { return m_labels; }
    const std::string& name() const { return m_name; }
    void set_name(std::string name) { m_name = std::move(name); }
    /// Throws std::invalid_argument for an unknown label.
    std::size_t index_of(std::string_view label) const;

    /// Sets [e_i, e_j] = v and [e_j, e_i] = -v.
    void set_bracket(std::size_t i, std::size_t j, VectorQ v);
    void set_bracket(std::string_view a, std::string_view b, const std::vector<std::pair<Rational, std::string>>& rhs);
    /// Sets only the ordered entry (i, j); used to build deliberately broken tables.
    void set_raw(std::size_t i, std::size_t j, VectorQ v);

    const VectorQ& bracket_basis(std::size_t i, std::size_t j) const { return m_table[i * dim() + j]; }
    const Rational& c(std::size_t i, std::size_t j, std::size_t k) const { return m_table[i * dim() + j][k]; }
    VectorQ bracket(const VectorQ& u, const VectorQ& v) const;

    /// Matrix of ad x acting on column vectors.
    MatrixQ ad(const VectorQ& x) const;
    MatrixQ ad(std::size_t i) const;

    VectorQ unit(std::size_t i) const;
    VectorQ zero() const { return VectorQ(dim(), 0); }

    /// Nonzero brackets with i < j.
    std::vector<std::pair<std::size_t, std::size_t>> nonzero_pairs() const;

    friend bool operator==(const LieAlgebra& a, const LieAlgebra& b)
    {
        return a.m_labels == b.m_labels && a.m_table == b.m_table;
    }

private:
    std::vector<std::string> m_labels;
    std::string m_name;
    std::vector<VectorQ> m_table;
};

struct Violation {
    enum class Kind { Antisymmetry, Jacobi };
    Kind kind;
    std::array<std::size_t, 3> indices;  // pair violations leave the last entry unused
    VectorQ defect;
};

struct ValidationReport {
    std::optional<Violation> violation;

    bool ok() const { return !violation.has_value(); }
    std::string message(const LieAlgebra& L) const;
};

/// Checks antisymmetry of every pair, then the Jacobi identity on every
/// triple i < j < k; reports the first failure in that order.
ValidationReport validate(const LieAlgebra& L);

/// Canonical subspace of Q^n, stored as the rows of a reduced echelon basis.
class Subspace {
public:
    Subspace() = default;
    explicit Subspace(std::size_t ambient) : m_ambient(ambient) {}
    static Subspace span(std::size_t ambient, const std::vector<VectorQ>& vectors);
    static Subspace whole(std::size_t ambient);

    std::size_t ambient() const { return m_ambient; }
    std::size_t dim() const { return m_basis.size(); }
    const std::vector<VectorQ>& basis() const { return m_basis; }
    bool contains(const VectorQ& v) const;
    bool contains(const Subspace& other) const;
    Subspace operator+(const Subspace& other) const;
    Subspace intersect(const Subspace& other) const;

    friend bool operator==(const Subspace& a, const Subspace& b) = default;

private:
    std::size_t m_ambient = 0;
    std::vector<VectorQ> m_basis;
};

/// span{[u, w] : u in U, w in W}
Subspace bracket_span(const LieAlgebra& L, const Subspace& U, const Subspace& W);
Subspace derived_subalgebra(const LieAlgebra& L);
Subspace center(const LieAlgebra& L);
/// L, [L,L], [L,[L,L]], ... until the dimension stops dropping.
std::vector<Subspace> lower_central_series(const LieAlgebra& L);
std::vector<Subspace> derived_series(const LieAlgebra& L);
bool is_nilpotent(const LieAlgebra& L);
/// Length of the lower central series to zero; nullopt if not nilpotent.
std::optional<std::size_t> nilpotency_class(const LieAlgebra& L);
bool is_solvable(const LieAlgebra& L);
/// Solvable and every ad e_i has only real eigenvalues.
bool is_completely_solvable(const LieAlgebra& L);
bool is_subalgebra(const LieAlgebra& L, const Subspace& S);
bool is_ideal(const LieAlgebra& L, const Subspace& S);

/// m invertible and m[u, v] = [mu, mv] on basis pairs.
bool is_automorphism(const LieAlgebra& L, const MatrixQ& m);
/// m[u, v] = [mu, v] + [u, mv] on basis pairs.
bool is_derivation(const LieAlgebra& L, const MatrixQ& m);

/// Smallest bracket-closed subspace containing `gens`.
Subspace subalgebra_generated(const LieAlgebra& L, const std::vector<VectorQ>& gens);

/// Algebra structure on a subalgebra in the given basis (which must span a
/// subalgebra); labels are taken from `labels`.
LieAlgebra restrict_to(const LieAlgebra& L, const std::vector<VectorQ>& basis, std::vector<std::string> labels);

/// Diagonal action of ad(e_index): one weight per basis vector.
struct WeightSystem {
    std::size_t derivation;
    VectorQ weights;
};

/// nullopt when ad(e_index) is not diagonal in the stored basis.
std::optional<WeightSystem> weight_system(const LieAlgebra& L, std::size_t index);
/// weight([e_i, e_j]) = weight(e_i) + weight(e_j) for every nonzero bracket.
bool weights_additive(const LieAlgebra& L, const WeightSystem& w);

}  // namespace solvlat::lie
