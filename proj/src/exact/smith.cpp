#include "solvlat/exact/smith.hpp"

#include <algorithm>

namespace solvlat::exact {

namespace {

void add_row_multiple(MatrixZ& a, std::size_t dst, std::size_t src, const Integer& f)
{
    for (std::size_t j = 0; j < a.cols(); ++j) a(dst, j) += f * a(src, j);
}

void add_col_multiple(MatrixZ& a, std::size_t dst, std::size_t src, const Integer& f)
{
    for (std::size_t i = 0; i < a.rows(); ++i) a(i, dst) += f * a(i, src);
}

}  // namespace

SmithForm smith_normal_form(const MatrixZ& m)
{
    MatrixZ a = m;
    MatrixZ u = MatrixZ::identity(m.rows());
    MatrixZ v = MatrixZ::identity(m.cols());
    const std::size_t n = std::min(m.rows(), m.cols());

    for (std::size_t t = 0; t < n; ++t) {
        bool empty = false;
        for (;;) {
            // smallest nonzero entry of the trailing block becomes the pivot
            std::size_t pr = t, pc = t;
            bool found = false;
            for (std::size_t i = t; i < a.rows(); ++i)
                for (std::size_t j = t; j < a.cols(); ++j) {
                    if (a(i, j) == 0) continue;
                    if (!found || abs(a(i, j)) < abs(a(pr, pc))) {
                        pr = i;
                        pc = j;
                        found = true;
                    }
                }
            if (!found) {
                empty = true;
                break;
            }
            a.swap_rows(t, pr);
            u.swap_rows(t, pr);
            a.swap_cols(t, pc);
            v.swap_cols(t, pc);

            bool clean = true;
            for (std::size_t i = t + 1; i < a.rows(); ++i) {
                if (a(i, t) == 0) continue;
                const Integer q = a(i, t) / a(t, t);
                add_row_multiple(a, i, t, -q);
                add_row_multiple(u, i, t, -q);
                if (a(i, t) != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < a.cols(); ++j) {
                if (a(t, j) == 0) continue;
                const Integer q = a(t, j) / a(t, t);
                add_col_multiple(a, j, t, -q);
                add_col_multiple(v, j, t, -q);
                if (a(t, j) != 0) clean = false;
            }
            if (!clean) continue;

            // divisibility: pull an offending row into row t and go again
            bool divides = true;
            for (std::size_t i = t + 1; i < a.rows() && divides; ++i)
                for (std::size_t j = t + 1; j < a.cols(); ++j) {
                    if (a(i, j) % a(t, t) != 0) {
                        add_row_multiple(a, t, i, Integer(1));
                        add_row_multiple(u, t, i, Integer(1));
                        divides = false;
                        break;
                    }
                }
            if (divides) break;
        }
        if (empty) break;
        if (a(t, t) < 0) {
            for (std::size_t j = 0; j < a.cols(); ++j) a(t, j) = -a(t, j);
            for (std::size_t j = 0; j < u.cols(); ++j) u(t, j) = -u(t, j);
        }
    }

    SmithForm out;
    out.diagonal.reserve(n);
    for (std::size_t t = 0; t < n; ++t) out.diagonal.push_back(a(t, t));
    out.u = std::move(u);
    out.v = std::move(v);
    return out;
}

Integer lattice_index(const MatrixZ& columns)
{
    if (columns.cols() < columns.rows()) return 0;
    const SmithForm s = smith_normal_form(columns);
    Integer idx = 1;
    for (const auto& d : s.diagonal) idx *= d;
    return idx;
}

}  // namespace solvlat::exact
