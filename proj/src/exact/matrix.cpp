#include "solvlat/exact/matrix.hpp"

#include <sstream>

namespace solvlat::exact {

MatrixQ to_rational(const MatrixZ& m)
{
    MatrixQ out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = Rational(m(i, j));
    return out;
}

MatrixZ to_integer(const MatrixQ& m)
{
    MatrixZ out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (!is_integer(m(i, j))) throw std::domain_error("matrix entry is not an integer");
            out(i, j) = m(i, j).get_num();
        }
    return out;
}

namespace {

/// Each row scaled by the lcm of its denominators; row space is unchanged.
MatrixZ clear_row_denominators(const MatrixQ& m)
{
    MatrixZ out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Integer l = 1;
        for (const auto& x : m.row(i)) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den().get_mpz_t());
        for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).get_num() * (l / m(i, j).get_den());
    }
    return out;
}

/// In-place Bareiss elimination to row echelon form. Rank-deficient columns
/// are skipped; every division is exact because each entry stays a minor of
/// the input. Returns pivot columns; `swaps` counts row transpositions.
std::vector<std::size_t> bareiss_echelon(MatrixZ& m, int& swaps)
{
    std::vector<std::size_t> pivots;
    Integer prev = 1;
    std::size_t r = 0;
    swaps = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && m(p, c) == 0) ++p;
        if (p == m.rows()) continue;
        if (p != r) {
            m.swap_rows(p, r);
            ++swaps;
        }
        const Integer piv = m(r, c);
        for (std::size_t i = r + 1; i < m.rows(); ++i) {
            const Integer lead = m(i, c);
            for (std::size_t j = c + 1; j < m.cols(); ++j) {
                Integer v = piv * m(i, j) - lead * m(r, j);
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                m(i, j) = std::move(v);
            }
            m(i, c) = 0;
        }
        prev = piv;
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

std::size_t mat_rank(const MatrixZ& m)
{
    MatrixZ work = m;
    int swaps = 0;
    return bareiss_echelon(work, swaps).size();
}

std::size_t mat_rank(const MatrixQ& m) { return mat_rank(clear_row_denominators(m)); }

Echelon rref(const MatrixQ& m)
{
    MatrixZ work = clear_row_denominators(m);
    int swaps = 0;
    const auto pivots = bareiss_echelon(work, swaps);

    MatrixQ red(pivots.size(), m.cols());
    for (std::size_t i = 0; i < pivots.size(); ++i) {
        const Integer& piv = work(i, pivots[i]);
        for (std::size_t j = 0; j < m.cols(); ++j) red(i, j) = make_rational(work(i, j), piv);
    }
    // back-substitution clears entries above each pivot
    for (std::size_t i = pivots.size(); i-- > 0;) {
        const std::size_t pc = pivots[i];
        for (std::size_t k = 0; k < i; ++k) {
            const Rational f = red(k, pc);
            if (f == 0) continue;
            for (std::size_t j = pc; j < m.cols(); ++j) red(k, j) -= f * red(i, j);
        }
    }
    return {std::move(red), pivots};
}

std::vector<VectorQ> mat_kernel(const MatrixQ& m)
{
    const Echelon e = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : e.pivots) is_pivot[p] = true;

    std::vector<VectorQ> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        VectorQ v(m.cols(), Rational(0));
        v[f] = 1;
        for (std::size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = -e.reduced(i, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

Integer determinant(const MatrixZ& m)
{
    if (!m.is_square()) throw std::invalid_argument("determinant of a non-square matrix");
    if (m.rows() == 0) return 1;
    MatrixZ work = m;
    int swaps = 0;
    const auto pivots = bareiss_echelon(work, swaps);
    if (pivots.size() < m.rows()) return 0;
    Integer d = work(m.rows() - 1, m.cols() - 1);
    return (swaps % 2 == 0) ? d : Integer(-d);
}

Rational determinant(const MatrixQ& m)
{
    if (!m.is_square()) throw std::invalid_argument("determinant of a non-square matrix");
    Integer scale = 1;
    MatrixZ z(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Integer l = 1;
        for (const auto& x : m.row(i)) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den().get_mpz_t());
        for (std::size_t j = 0; j < m.cols(); ++j) z(i, j) = m(i, j).get_num() * (l / m(i, j).get_den());
        scale *= l;
    }
    return make_rational(determinant(z), scale);
}

UniPoly charpoly(const MatrixQ& a)
{
    if (!a.is_square()) throw std::invalid_argument("characteristic polynomial of a non-square matrix");
    const std::size_t n = a.rows();
    std::vector<Rational> c(n + 1);
    c[n] = 1;
    MatrixQ mk(n, n);  // M_0 = 0
    for (std::size_t k = 1; k <= n; ++k) {
        MatrixQ next = a * mk;
        for (std::size_t i = 0; i < n; ++i) next(i, i) += c[n - k + 1];
        mk = std::move(next);
        const MatrixQ am = a * mk;
        Rational tr = 0;
        for (std::size_t i = 0; i < n; ++i) tr += am(i, i);
        c[n - k] = -tr / static_cast<long>(k);
    }
    return UniPoly(std::move(c));
}

UniPoly charpoly(const MatrixZ& m) { return charpoly(to_rational(m)); }

std::optional<VectorQ> solve(const MatrixQ& a, const VectorQ& b)
{
    if (b.size() != a.rows()) throw std::invalid_argument("solve: right-hand side length mismatch");
    MatrixQ aug(a.rows(), a.cols() + 1);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
        aug(i, a.cols()) = b[i];
    }
    const Echelon e = rref(aug);
    VectorQ x(a.cols(), Rational(0));
    for (std::size_t i = 0; i < e.pivots.size(); ++i) {
        if (e.pivots[i] == a.cols()) return std::nullopt;
        x[e.pivots[i]] = e.reduced(i, a.cols());
    }
    return x;
}

MatrixQ from_columns(const std::vector<VectorQ>& cols, std::size_t length)
{
    MatrixQ m(length, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (cols[j].size() != length) throw std::invalid_argument("from_columns: length mismatch");
        for (std::size_t i = 0; i < length; ++i) m(i, j) = cols[j][i];
    }
    return m;
}

MatrixQ from_rows(const std::vector<VectorQ>& rows, std::size_t length)
{
    MatrixQ m(rows.size(), length);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != length) throw std::invalid_argument("from_rows: length mismatch");
        for (std::size_t j = 0; j < length; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

namespace {
template <typename T, typename F>
std::string render(const Matrix<T>& m, F&& fmt)
{
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        os << (i ? ", [" : "[");
        for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? ", " : "") << fmt(m(i, j));
        os << "]";
    }
    os << "]";
    return os.str();
}
}  // namespace

std::string to_string(const MatrixQ& m)
{
    return render(m, [](const Rational& r) { return exact::to_string(r); });
}

std::string to_string(const MatrixZ& m)
{
    return render(m, [](const Integer& z) { return z.get_str(); });
}

}  // namespace solvlat::exact
