#pragma once

#include "solvlat/exact/rational.hpp"
#include "solvlat/exact/unipoly.hpp"

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace solvlat::exact {

/// Dense row-major matrix. Entries length is always rows * cols.
template <typename T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : m_rows(rows), m_cols(cols), m_data(rows * cols, T(0)) {}
    Matrix(std::size_t rows, std::size_t cols, std::vector<T> data)
        : m_rows(rows), m_cols(cols), m_data(std::move(data))
    {
        if (m_data.size() != rows * cols) throw std::invalid_argument("matrix data size mismatch");
    }
    Matrix(std::initializer_list<std::initializer_list<long>> rows)
    {
        m_rows = rows.size();
        m_cols = m_rows == 0 ? 0 : rows.begin()->size();
        m_data.reserve(m_rows * m_cols);
        for (const auto& r : rows) {
            if (r.size() != m_cols) throw std::invalid_argument("ragged matrix literal");
            for (long v : r) m_data.emplace_back(v);
        }
    }

    static Matrix identity(std::size_t n)
    {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    static Matrix diagonal(const std::vector<T>& d)
    {
        Matrix m(d.size(), d.size());
        for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
        return m;
    }

    std::size_t rows() const { return m_rows; }
    std::size_t cols() const { return m_cols; }
    bool is_square() const { return m_rows == m_cols; }

    T& operator()(std::size_t i, std::size_t j) { return m_data[i * m_cols + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return m_data[i * m_cols + j]; }

    std::span<T> row(std::size_t i) { return {m_data.data() + i * m_cols, m_cols}; }
    std::span<const T> row(std::size_t i) const { return {m_data.data() + i * m_cols, m_cols}; }

    std::vector<T> column(std::size_t j) const
    {
        std::vector<T> c(m_rows);
        for (std::size_t i = 0; i < m_rows; ++i) c[i] = (*this)(i, j);
        return c;
    }

    const std::vector<T>& data() const { return m_data; }

    void swap_rows(std::size_t a, std::size_t b)
    {
        if (a == b) return;
        for (std::size_t j = 0; j < m_cols; ++j) std::swap((*this)(a, j), (*this)(b, j));
    }

    void swap_cols(std::size_t a, std::size_t b)
    {
        if (a == b) return;
        for (std::size_t i = 0; i < m_rows; ++i) std::swap((*this)(i, a), (*this)(i, b));
    }

    Matrix transpose() const
    {
        Matrix t(m_cols, m_rows);
        for (std::size_t i = 0; i < m_rows; ++i)
            for (std::size_t j = 0; j < m_cols; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    bool is_zero() const
    {
        for (const auto& v : m_data)
            if (v != 0) return false;
        return true;
    }

    friend bool operator==(const Matrix& a, const Matrix& b)
    {
        return a.m_rows == b.m_rows && a.m_cols == b.m_cols && a.m_data == b.m_data;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b)
    {
        if (a.m_cols != b.m_rows) throw std::invalid_argument("matrix product dimension mismatch");
        Matrix c(a.m_rows, b.m_cols);
        for (std::size_t i = 0; i < a.m_rows; ++i)
            for (std::size_t k = 0; k < a.m_cols; ++k) {
                const T& aik = a(i, k);
                if (aik == 0) continue;
                for (std::size_t j = 0; j < b.m_cols; ++j) c(i, j) += aik * b(k, j);
            }
        return c;
    }

    friend Matrix operator+(const Matrix& a, const Matrix& b)
    {
        if (a.m_rows != b.m_rows || a.m_cols != b.m_cols) throw std::invalid_argument("matrix sum dimension mismatch");
        Matrix c = a;
        for (std::size_t i = 0; i < c.m_data.size(); ++i) c.m_data[i] += b.m_data[i];
        return c;
    }

    friend Matrix operator-(const Matrix& a, const Matrix& b)
    {
        if (a.m_rows != b.m_rows || a.m_cols != b.m_cols) throw std::invalid_argument("matrix difference dimension mismatch");
        Matrix c = a;
        for (std::size_t i = 0; i < c.m_data.size(); ++i) c.m_data[i] -= b.m_data[i];
        return c;
    }

    std::vector<T> apply(std::span<const T> v) const
    {
        if (v.size() != m_cols) throw std::invalid_argument("matrix-vector dimension mismatch");
        std::vector<T> out(m_rows, T(0));
        for (std::size_t i = 0; i < m_rows; ++i)
            for (std::size_t j = 0; j < m_cols; ++j) {
                if (v[j] == 0) continue;
                out[i] += (*this)(i, j) * v[j];
            }
        return out;
    }

private:
    std::size_t m_rows = 0;
    std::size_t m_cols = 0;
    std::vector<T> m_data;
};

using MatrixQ = Matrix<Rational>;
using MatrixZ = Matrix<Integer>;

MatrixQ to_rational(const MatrixZ& m);
/// Throws std::domain_error if an entry is not an integer.
MatrixZ to_integer(const MatrixQ& m);

/// Reduced row echelon form together with its pivot columns.
struct Echelon {
    MatrixQ reduced;
    std::vector<std::size_t> pivots;
};

/// Rank over Q via fraction-free (Bareiss) elimination.
std::size_t mat_rank(const MatrixQ& m);
std::size_t mat_rank(const MatrixZ& m);

/// Reduced row echelon form. Elimination runs fraction-free on the
/// row-scaled integer matrix; only the final normalization divides.
Echelon rref(const MatrixQ& m);

/// Basis of the right null space, one vector per free column, each with a 1
/// in its free column. Count is cols - rank.
std::vector<VectorQ> mat_kernel(const MatrixQ& m);

Rational determinant(const MatrixQ& m);
Integer determinant(const MatrixZ& m);

/// Monic characteristic polynomial det(xI - m) by Faddeev-LeVerrier.
/// Throws std::invalid_argument for non-square input.
UniPoly charpoly(const MatrixQ& m);
UniPoly charpoly(const MatrixZ& m);

/// Solution of a * x = b if one exists (some particular solution).
std::optional<VectorQ> solve(const MatrixQ& a, const VectorQ& b);

/// Matrix whose columns are the given vectors (all of the same length).
MatrixQ from_columns(const std::vector<VectorQ>& cols, std::size_t length);
MatrixQ from_rows(const std::vector<VectorQ>& rows, std::size_t length);

std::string to_string(const MatrixQ& m);
std::string to_string(const MatrixZ& m);

}  // namespace solvlat::exact
