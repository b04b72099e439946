#include "solvlat/lie/algebra.hpp"

#include "solvlat/exact/roots.hpp"

#include <sstream>
#include <stdexcept>

namespace solvlat::lie {

using exact::Echelon;

namespace {

bool is_zero_vector(const VectorQ& v)
{
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

VectorQ add(VectorQ a, const VectorQ& b)
{
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
    return a;
}

VectorQ scaled(const Rational& c, VectorQ v)
{
    for (auto& x : v) x *= c;
    return v;
}

std::string render(const LieAlgebra& L, const VectorQ& v)
{
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = 0; k < v.size(); ++k) {
        if (v[k] == 0) continue;
        os << (first ? "" : " + ") << exact::to_string(v[k]) << "*" << L.labels()[k];
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

}  // namespace

LieAlgebra::LieAlgebra(std::vector<std::string> labels, std::string name)
    : m_labels(std::move(labels)), m_name(std::move(name)),
      m_table(m_labels.size() * m_labels.size(), VectorQ(m_labels.size(), 0))
{
    for (std::size_t i = 0; i < m_labels.size(); ++i)
        for (std::size_t j = i + 1; j < m_labels.size(); ++j)
            if (m_labels[i] == m_labels[j]) throw std::invalid_argument("duplicate basis label '" + m_labels[i] + "'");
}

std::size_t LieAlgebra::index_of(std::string_view label) const
{
    for (std::size_t i = 0; i < m_labels.size(); ++i)
        if (m_labels[i] == label) return i;
    throw std::invalid_argument("unknown basis label '" + std::string(label) + "'");
}

void LieAlgebra::set_bracket(std::size_t i, std::size_t j, VectorQ v)
{
    if (v.size() != dim()) throw std::invalid_argument("bracket vector has wrong length");
    if (i == j && !is_zero_vector(v)) throw std::invalid_argument("[e, e] must vanish");
    m_table[j * dim() + i] = scaled(-1, v);
    m_table[i * dim() + j] = std::move(v);
}

void LieAlgebra::set_bracket(std::string_view a, std::string_view b,
                             const std::vector<std::pair<Rational, std::string>>& rhs)
{
    VectorQ v(dim(), 0);
    for (const auto& [c, label] : rhs) v[index_of(label)] += c;
    set_bracket(index_of(a), index_of(b), std::move(v));
}

void LieAlgebra::set_raw(std::size_t i, std::size_t j, VectorQ v)
{
    if (v.size() != dim()) throw std::invalid_argument("bracket vector has wrong length");
    m_table[i * dim() + j] = std::move(v);
}

VectorQ LieAlgebra::bracket(const VectorQ& u, const VectorQ& v) const
{
    VectorQ out(dim(), 0);
    for (std::size_t i = 0; i < dim(); ++i) {
        if (u[i] == 0) continue;
        for (std::size_t j = 0; j < dim(); ++j) {
            if (v[j] == 0) continue;
            const Rational f = u[i] * v[j];
            const VectorQ& b = bracket_basis(i, j);
            for (std::size_t k = 0; k < dim(); ++k)
                if (b[k] != 0) out[k] += f * b[k];
        }
    }
    return out;
}

MatrixQ LieAlgebra::ad(const VectorQ& x) const
{
    MatrixQ m(dim(), dim());
    for (std::size_t j = 0; j < dim(); ++j) {
        const VectorQ col = bracket(x, unit(j));
        for (std::size_t i = 0; i < dim(); ++i) m(i, j) = col[i];
    }
    return m;
}

MatrixQ LieAlgebra::ad(std::size_t i) const { return ad(unit(i)); }

VectorQ LieAlgebra::unit(std::size_t i) const
{
    VectorQ v(dim(), 0);
    v.at(i) = 1;
    return v;
}

std::vector<std::pair<std::size_t, std::size_t>> LieAlgebra::nonzero_pairs() const
{
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t i = 0; i < dim(); ++i)
        for (std::size_t j = i + 1; j < dim(); ++j)
            if (!is_zero_vector(bracket_basis(i, j))) out.emplace_back(i, j);
    return out;
}

ValidationReport validate(const LieAlgebra& L)
{
    const std::size_t n = L.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            const VectorQ s = add(L.bracket_basis(i, j), L.bracket_basis(j, i));
            if (!is_zero_vector(s)) return {Violation{Violation::Kind::Antisymmetry, {i, j, j}, s}};
        }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k) {
                const VectorQ ei = L.unit(i), ej = L.unit(j), ek = L.unit(k);
                VectorQ s = L.bracket(ei, L.bracket_basis(j, k));
                s = add(s, L.bracket(ej, L.bracket_basis(k, i)));
                s = add(s, L.bracket(ek, L.bracket_basis(i, j)));
                if (!is_zero_vector(s)) return {Violation{Violation::Kind::Jacobi, {i, j, k}, s}};
            }
    return {};
}

std::string ValidationReport::message(const LieAlgebra& L) const
{
    if (ok()) return "ok";
    const auto& v = *violation;
    const auto& lab = L.labels();
    if (v.kind == Violation::Kind::Antisymmetry)
        return "antisymmetry fails at (" + lab[v.indices[0]] + ", " + lab[v.indices[1]] +
               "): [a,b] + [b,a] = " + render(L, v.defect);
    return "Jacobi identity fails at (" + lab[v.indices[0]] + ", " + lab[v.indices[1]] + ", " + lab[v.indices[2]] +
           "): cyclic sum = " + render(L, v.defect);
}

Subspace Subspace::span(std::size_t ambient, const std::vector<VectorQ>& vectors)
{
    Subspace s(ambient);
    if (vectors.empty()) return s;
    const Echelon e = exact::rref(exact::from_rows(vectors, ambient));
    for (std::size_t r = 0; r < e.reduced.rows(); ++r) {
        const auto row = e.reduced.row(r);
        s.m_basis.emplace_back(row.begin(), row.end());
    }
    return s;
}

Subspace Subspace::whole(std::size_t ambient)
{
    std::vector<VectorQ> units;
    for (std::size_t i = 0; i < ambient; ++i) {
        VectorQ v(ambient, 0);
        v[i] = 1;
        units.push_back(std::move(v));
    }
    return span(ambient, units);
}

bool Subspace::contains(const VectorQ& v) const
{
    std::vector<VectorQ> rows = m_basis;
    rows.push_back(v);
    return exact::mat_rank(exact::from_rows(rows, m_ambient)) == dim();
}

bool Subspace::contains(const Subspace& other) const
{
    for (const auto& v : other.m_basis)
        if (!contains(v)) return false;
    return true;
}

Subspace Subspace::operator+(const Subspace& other) const
{
    std::vector<VectorQ> rows = m_basis;
    rows.insert(rows.end(), other.m_basis.begin(), other.m_basis.end());
    return span(m_ambient, rows);
}

Subspace Subspace::intersect(const Subspace& other) const
{
    if (dim() == 0 || other.dim() == 0) return Subspace(m_ambient);
    // a in U, b in W with a - b = 0
    std::vector<VectorQ> cols = m_basis;
    for (const auto& w : other.m_basis) {
        VectorQ neg = w;
        for (auto& x : neg) x = -x;
        cols.push_back(std::move(neg));
    }
    const auto ker = exact::mat_kernel(exact::from_columns(cols, m_ambient));
    std::vector<VectorQ> vecs;
    for (const auto& k : ker) {
        VectorQ v(m_ambient, 0);
        for (std::size_t i = 0; i < dim(); ++i)
            for (std::size_t t = 0; t < m_ambient; ++t) v[t] += k[i] * m_basis[i][t];
        vecs.push_back(std::move(v));
    }
    return span(m_ambient, vecs);
}

Subspace bracket_span(const LieAlgebra& L, const Subspace& U, const Subspace& W)
{
    std::vector<VectorQ> vecs;
    for (const auto& u : U.basis())
        for (const auto& w : W.basis()) vecs.push_back(L.bracket(u, w));
    return Subspace::span(L.dim(), vecs);
}

Subspace derived_subalgebra(const LieAlgebra& L)
{
    const Subspace all = Subspace::whole(L.dim());
    return bracket_span(L, all, all);
}

Subspace center(const LieAlgebra& L)
{
    // stack ad(e_i) for all i; the joint kernel is the center
    const std::size_t n = L.dim();
    MatrixQ stacked(n * n, n);
    for (std::size_t i = 0; i < n; ++i) {
        const MatrixQ a = L.ad(i);
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c) stacked(i * n + r, c) = a(r, c);
    }
    return Subspace::span(n, exact::mat_kernel(stacked));
}

std::vector<Subspace> lower_central_series(const LieAlgebra& L)
{
    const Subspace all = Subspace::whole(L.dim());
    std::vector<Subspace> out{all};
    for (;;) {
        Subspace next = bracket_span(L, all, out.back());
        if (next.dim() == out.back().dim()) break;
        out.push_back(std::move(next));
    }
    return out;
}

std::vector<Subspace> derived_series(const LieAlgebra& L)
{
    std::vector<Subspace> out{Subspace::whole(L.dim())};
    for (;;) {
        Subspace next = bracket_span(L, out.back(), out.back());
        if (next.dim() == out.back().dim()) break;
        out.push_back(std::move(next));
    }
    return out;
}

bool is_nilpotent(const LieAlgebra& L) { return lower_central_series(L).back().dim() == 0; }

std::optional<std::size_t> nilpotency_class(const LieAlgebra& L)
{
    const auto s = lower_central_series(L);
    if (s.back().dim() != 0) return std::nullopt;
    return s.size() - 1;
}

bool is_solvable(const LieAlgebra& L) { return derived_series(L).back().dim() == 0; }

bool is_completely_solvable(const LieAlgebra& L)
{
    if (!is_solvable(L)) return false;
    for (std::size_t i = 0; i < L.dim(); ++i) {
        const exact::UniPoly p = exact::squarefree_part(exact::charpoly(L.ad(i)));
        if (p.degree() <= 0) continue;
        const Rational b = exact::root_bound(p) + 1;
        if (exact::sturm_count(p, -b, b) != p.degree()) return false;
    }
    return true;
}

bool is_subalgebra(const LieAlgebra& L, const Subspace& S) { return S.contains(bracket_span(L, S, S)); }

bool is_ideal(const LieAlgebra& L, const Subspace& S)
{
    return S.contains(bracket_span(L, Subspace::whole(L.dim()), S));
}

bool is_automorphism(const LieAlgebra& L, const MatrixQ& m)
{
    if (m.rows() != L.dim() || m.cols() != L.dim()) throw std::invalid_argument("is_automorphism: matrix size mismatch");
    if (exact::determinant(m) == 0) return false;
    for (std::size_t i = 0; i < L.dim(); ++i)
        for (std::size_t j = i + 1; j < L.dim(); ++j) {
            const VectorQ lhs = m.apply(L.bracket_basis(i, j));
            const VectorQ rhs = L.bracket(m.column(i), m.column(j));
            if (lhs != rhs) return false;
        }
    return true;
}

bool is_derivation(const LieAlgebra& L, const MatrixQ& m)
{
    if (m.rows() != L.dim() || m.cols() != L.dim()) throw std::invalid_argument("is_derivation: matrix size mismatch");
    for (std::size_t i = 0; i < L.dim(); ++i)
        for (std::size_t j = i + 1; j < L.dim(); ++j) {
            const VectorQ lhs = m.apply(L.bracket_basis(i, j));
            const VectorQ rhs = add(L.bracket(m.column(i), L.unit(j)), L.bracket(L.unit(i), m.column(j)));
            if (lhs != rhs) return false;
        }
    return true;
}

Subspace subalgebra_generated(const LieAlgebra& L, const std::vector<VectorQ>& gens)
{
    Subspace s = Subspace::span(L.dim(), gens);
    for (;;) {
        Subspace next = s + bracket_span(L, s, s);
        if (next.dim() == s.dim()) return s;
        s = std::move(next);
    }
}

LieAlgebra restrict_to(const LieAlgebra& L, const std::vector<VectorQ>& basis, std::vector<std::string> labels)
{
    if (labels.size() != basis.size()) throw std::invalid_argument("restrict_to: label count mismatch");
    LieAlgebra out(std::move(labels));
    const MatrixQ b = exact::from_columns(basis, L.dim());
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = i + 1; j < basis.size(); ++j) {
            const auto coords = exact::solve(b, L.bracket(basis[i], basis[j]));
            if (!coords) throw std::invalid_argument("restrict_to: basis does not span a subalgebra");
            out.set_bracket(i, j, *coords);
        }
    return out;
}

std::optional<WeightSystem> weight_system(const LieAlgebra& L, std::size_t index)
{
    const MatrixQ a = L.ad(index);
    WeightSystem w{index, VectorQ(L.dim(), 0)};
    for (std::size_t i = 0; i < L.dim(); ++i)
        for (std::size_t j = 0; j < L.dim(); ++j) {
            if (i == j)
                w.weights[i] = a(i, i);
            else if (a(i, j) != 0)
                return std::nullopt;
        }
    return w;
}

bool weights_additive(const LieAlgebra& L, const WeightSystem& w)
{
    for (const auto& [i, j] : L.nonzero_pairs()) {
        const VectorQ& b = L.bracket_basis(i, j);
        for (std::size_t k = 0; k < L.dim(); ++k)
            if (b[k] != 0 && w.weights[k] != w.weights[i] + w.weights[j]) return false;
    }
    return true;
}

}  // namespace solvlat::lie
