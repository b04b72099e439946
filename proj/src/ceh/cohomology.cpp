#include "solvlat/ceh/cohomology.hpp"

#include "solvlat/lie/catalog.hpp"
#include "solvlat/util/parse_error.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <stdexcept>

namespace solvlat::ceh {

namespace {

bool is_zero_vector(const VectorQ& v)
{
    return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; });
}

}  // namespace

int wedge_sign(Mask a, Mask b)
{
    if (a & b) return 0;
    // inversions: pairs (i in a, j in b) with i > j
    int inversions = 0;
    for (Mask rest = a; rest; rest &= rest - 1) {
        const int i = std::countr_zero(rest);
        inversions += std::popcount(b & ((Mask(1) << i) - 1));
    }
    return inversions % 2 ? -1 : 1;
}

CochainComplex::CochainComplex(const LieAlgebra& L) : m_algebra(L)
{
    const std::size_t n = L.dim();
    if (n > 20) throw std::invalid_argument("cochain complex: dimension too large");
    m_basis.assign(n + 1, {});
    m_index.assign(std::size_t(1) << n, 0);
    for (Mask m = 0; m < (Mask(1) << n); ++m) m_basis[std::popcount(m)].push_back(m);
    // lexicographic order of index tuples
    for (auto& deg : m_basis) {
        std::sort(deg.begin(), deg.end(), [](Mask a, Mask b) {
            while (a && b) {
                const int ia = std::countr_zero(a), ib = std::countr_zero(b);
                if (ia != ib) return ia < ib;
                a &= a - 1;
                b &= b - 1;
            }
            return false;
        });
        for (std::size_t i = 0; i < deg.size(); ++i) m_index[deg[i]] = i;
    }

    // d e*_k = - sum_{i<j} c_ij^k e*_i ^ e*_j, as sparse (mask, coeff) lists
    std::vector<std::vector<std::pair<Mask, Rational>>> d1(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                const Rational& c = L.c(i, j, k);
                if (c != 0) d1[k].emplace_back((Mask(1) << i) | (Mask(1) << j), -c);
            }

    m_d.clear();
    for (std::size_t k = 0; k <= n; ++k) {
        MatrixQ d(k < n ? m_basis[k + 1].size() : 0, m_basis[k].size());
        if (k < n) {
            for (std::size_t col = 0; col < m_basis[k].size(); ++col) {
                const Mask mono = m_basis[k][col];
                int pos = 0;
                for (Mask rest = mono; rest; rest &= rest - 1, ++pos) {
                    const int t = std::countr_zero(rest);
                    const Mask before = mono & ((Mask(1) << t) - 1);
                    const Mask after = mono & ~((Mask(1) << (t + 1)) - 1);
                    // (-1)^pos * before ^ d(e_t) ^ after
                    for (const auto& [pair, c] : d1[t]) {
                        const int s1 = wedge_sign(before, pair);
                        if (s1 == 0) continue;
                        const int s2 = wedge_sign(before | pair, after);
                        if (s2 == 0) continue;
                        const int sign = (pos % 2 ? -1 : 1) * s1 * s2;
                        d(m_index[before | pair | after], col) += sign * c;
                    }
                }
            }
        }
        m_d.push_back(std::move(d));
    }
}

std::string CochainComplex::monomial_label(Mask m) const
{
    if (m == 0) return "1";
    std::string out;
    for (Mask rest = m; rest; rest &= rest - 1) {
        if (!out.empty()) out += "^";
        out += m_algebra.labels()[std::countr_zero(rest)];
    }
    return out;
}

std::string CochainComplex::form_to_string(std::size_t k, const VectorQ& v) const
{
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] == 0) continue;
        const Rational mag = abs(v[i]);
        if (out.empty())
            out += v[i] < 0 ? "-" : "";
        else
            out += v[i] < 0 ? " - " : " + ";
        if (mag != 1) out += exact::to_string(mag) + "*";
        out += monomial_label(m_basis[k][i]);
    }
    return out.empty() ? "0" : out;
}

VectorQ CochainComplex::apply_d(std::size_t k, const VectorQ& v) const { return m_d.at(k).apply(v); }

VectorQ CochainComplex::wedge(std::size_t p, const VectorQ& a, std::size_t q, const VectorQ& b) const
{
    if (p + q > dim()) throw std::invalid_argument("wedge: degree exceeds dimension");
    VectorQ out(m_basis[p + q].size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (b[j] == 0) continue;
            const int s = wedge_sign(m_basis[p][i], m_basis[q][j]);
            if (s == 0) continue;
            out[m_index[m_basis[p][i] | m_basis[q][j]]] += s * a[i] * b[j];
        }
    }
    return out;
}

VectorQ CochainComplex::dual(std::size_t i) const
{
    VectorQ v(m_basis[1].size(), 0);
    v[m_index[Mask(1) << i]] = 1;
    return v;
}

MatrixQ ce_differential(const LieAlgebra& L, std::size_t k)
{
    if (k > L.dim()) throw std::out_of_range("ce_differential: degree out of range");
    return CochainComplex(L).differential(k);
}

std::vector<std::size_t> betti(const LieAlgebra& L) { return CohomologyRing(L).betti(); }

CohomologyRing::CohomologyRing(const LieAlgebra& L) : m_complex(L)
{
    const std::size_t n = L.dim();
    for (std::size_t k = 0; k <= n; ++k) {
        const std::size_t rk = m_complex.rank(k);
        // coboundaries: image of d_{k-1}, as an echelon basis
        std::vector<VectorQ> bnd;
        if (k > 0) {
            const MatrixQ& dprev = m_complex.differential(k - 1);
            const auto e = exact::rref(dprev.transpose());
            for (std::size_t r = 0; r < e.pivots.size(); ++r) {
                const auto row = e.reduced.row(r);
                bnd.emplace_back(row.begin(), row.end());
            }
        }
        const auto cycles = exact::mat_kernel(m_complex.differential(k));
        std::vector<VectorQ> frame = bnd;
        std::vector<VectorQ> reps;
        std::size_t rank = bnd.size();
        for (const auto& z : cycles) {
            frame.push_back(z);
            const std::size_t r = exact::mat_rank(exact::from_rows(frame, rk));
            if (r > rank) {
                rank = r;
                reps.push_back(z);
            } else {
                frame.pop_back();
            }
        }
        std::vector<VectorQ> cols = reps;
        cols.insert(cols.end(), bnd.begin(), bnd.end());
        m_frame.push_back(exact::from_columns(cols, rk));
        m_reps.push_back(std::move(reps));
        m_boundaries.push_back(std::move(bnd));
    }
}

std::vector<std::size_t> CohomologyRing::betti() const
{
    std::vector<std::size_t> b;
    for (std::size_t k = 0; k <= dim(); ++k) b.push_back(betti(k));
    return b;
}

bool CohomologyRing::is_cocycle(std::size_t k, const VectorQ& v) const
{
    return is_zero_vector(m_complex.apply_d(k, v));
}

bool CohomologyRing::is_coboundary(std::size_t k, const VectorQ& v) const
{
    if (is_zero_vector(v)) return true;
    if (m_boundaries[k].empty()) return false;
    return exact::solve(exact::from_columns(m_boundaries[k], m_complex.rank(k)), v).has_value();
}

VectorQ CohomologyRing::class_of(std::size_t k, const VectorQ& cocycle) const
{
    if (!is_cocycle(k, cocycle)) throw std::invalid_argument("class_of: form is not closed");
    const std::size_t b = betti(k);
    if (b == 0) return {};
    const auto sol = exact::solve(m_frame[k], cocycle);
    if (!sol) throw std::logic_error("class_of: cocycle outside the frame");
    return VectorQ(sol->begin(), sol->begin() + static_cast<std::ptrdiff_t>(b));
}

VectorQ CohomologyRing::representative(std::size_t k, const VectorQ& coords) const
{
    VectorQ v(m_complex.rank(k), 0);
    for (std::size_t i = 0; i < coords.size(); ++i)
        for (std::size_t t = 0; t < v.size(); ++t) v[t] += coords[i] * m_reps[k][i][t];
    return v;
}

VectorQ CohomologyRing::cup(std::size_t p, const VectorQ& a, std::size_t q, const VectorQ& b) const
{
    if (p + q > dim()) throw std::invalid_argument("cup: degree exceeds dimension");
    const VectorQ w = m_complex.wedge(p, representative(p, a), q, representative(q, b));
    return class_of(p + q, w);
}

VectorQ parse_two_form(const LieAlgebra& L, std::string_view text)
{
    const CochainComplex skeleton(lie::abelian(L.dim()));
    VectorQ omega(L.dim() * (L.dim() - 1) / 2, 0);
    std::size_t pos = 0;
    auto fail = [&](const std::string& msg) -> void { throw ParseError(msg, 1, pos + 1); };
    auto skip = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    auto label = [&]() -> std::size_t {
        skip();
        const std::size_t start = pos;
        while (pos < text.size() && (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_')) ++pos;
        if (start == pos) fail("expected a basis label");
        const std::string name(text.substr(start, pos - start));
        const auto& labels = L.labels();
        const auto it = std::find(labels.begin(), labels.end(), name);
        if (it == labels.end()) {
            pos = start;
            fail("unknown basis label '" + name + "'");
        }
        return static_cast<std::size_t>(it - labels.begin());
    };

    bool first = true;
    skip();
    if (pos == text.size()) fail("empty two-form");
    while (true) {
        skip();
        if (pos == text.size()) break;
        Rational sign = 1;
        if (text[pos] == '-') {
            sign = -1;
            ++pos;
        } else if (text[pos] == '+') {
            ++pos;
        } else if (!first) {
            fail("expected '+' or '-'");
        }
        first = false;
        skip();
        Rational coeff = 1;
        if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            const std::size_t start = pos;
            while (pos < text.size() && (std::isdigit(static_cast<unsigned char>(text[pos])) || text[pos] == '/')) ++pos;
            try {
                coeff = exact::parse_rational(text.substr(start, pos - start));
            } catch (const std::exception&) {
                pos = start;
                fail("malformed coefficient");
            }
            skip();
            if (pos >= text.size() || text[pos] != '*') fail("expected '*' after coefficient");
            ++pos;
        }
        const std::size_t i = label();
        skip();
        if (pos >= text.size() || text[pos] != '^') fail("expected '^'");
        ++pos;
        const std::size_t at = pos;
        const std::size_t j = label();
        if (i == j) {
            pos = at;
            fail("a^a vanishes; repeated label");
        }
        const Mask a = Mask(1) << i, b = Mask(1) << j;
        omega[skeleton.index(a | b)] += sign * coeff * wedge_sign(a, b);
    }
    return omega;
}

SymplecticCheck symplectic_check(const LieAlgebra& L, const VectorQ& omega)
{
    if (L.dim() % 2) throw std::invalid_argument("symplectic_check: odd dimension");
    const CochainComplex C(L);
    SymplecticCheck out{};
    out.closed = is_zero_vector(C.apply_d(2, omega));
    VectorQ power = omega;
    for (std::size_t k = 2; k <= L.dim() / 2; ++k) power = C.wedge(2 * (k - 1), power, 2, omega);
    out.nondegenerate = !is_zero_vector(power);
    return out;
}

LefschetzResult hard_lefschetz(const CohomologyRing& H, const VectorQ& omega)
{
    const CochainComplex& C = H.complex();
    if (C.dim() % 2) throw std::invalid_argument("hard_lefschetz: odd dimension");
    if (!H.is_cocycle(2, omega)) throw std::invalid_argument("hard_lefschetz: omega is not closed");
    const std::size_t n = C.dim() / 2;
    LefschetzResult out{true, std::nullopt, {}};
    VectorQ power{1};  // omega^0
    for (std::size_t k = 1; k <= n; ++k) {
        power = C.wedge(2 * (k - 1), power, 2, omega);
        const std::size_t lo = n - k, hi = n + k;
        std::vector<VectorQ> images;
        for (const auto& rep : H.representatives(lo)) images.push_back(H.class_of(hi, C.wedge(lo, rep, 2 * k, power)));
        const std::size_t r = images.empty() ? 0 : exact::mat_rank(exact::from_columns(images, H.betti(hi)));
        out.ranks.push_back(r);
        const bool iso = H.betti(lo) == H.betti(hi) && r == H.betti(lo);
        if (!iso && out.holds) {
            out.holds = false;
            out.failing_degree = k;
        }
    }
    return out;
}

LefschetzResult hard_lefschetz(const LieAlgebra& L, const VectorQ& omega)
{
    return hard_lefschetz(CohomologyRing(L), omega);
}

ProductRingCheck torus_cp3_check(const CohomologyRing& H, const VectorQ& t1, const VectorQ& t2, const VectorQ& h)
{
    ProductRingCheck out{};
    out.t_squares_vanish = is_zero_vector(H.cup(1, t1, 1, t1)) && is_zero_vector(H.cup(1, t2, 1, t2));
    std::vector<VectorQ> hp{H.unit()};
    for (std::size_t c = 1; c <= 4; ++c) hp.push_back(H.cup(2 * (c - 1), hp.back(), 2, h));
    out.h4_vanishes = is_zero_vector(hp[4]);
    out.h3_nonzero = !is_zero_vector(hp[3]);

    // group monomials by degree and test independence degree by degree
    std::vector<std::vector<VectorQ>> by_degree(H.dim() + 1);
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            for (std::size_t c = 0; c < 4; ++c) {
                VectorQ v = hp[c];
                std::size_t deg = 2 * c;
                if (b) {
                    v = H.cup(1, t2, deg, v);
                    ++deg;
                }
                if (a) {
                    v = H.cup(1, t1, deg, v);
                    ++deg;
                }
                by_degree[deg].push_back(v);
            }
    out.monomials_independent = true;
    for (std::size_t d = 0; d <= H.dim(); ++d) {
        if (by_degree[d].empty()) continue;
        if (H.betti(d) == 0 ||
            exact::mat_rank(exact::from_columns(by_degree[d], H.betti(d))) != by_degree[d].size())
            out.monomials_independent = false;
    }
    return out;
}

}  // namespace solvlat::ceh
