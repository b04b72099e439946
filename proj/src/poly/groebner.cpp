#include "solvlat/poly/groebner.hpp"

#include <algorithm>
#include <stdexcept>

namespace solvlat::poly {

MultiPoly normal_form(const MultiPoly& f, const std::vector<MultiPoly>& basis, const MonomialOrder& order)
{
    std::vector<const MultiPoly*> divisors;
    for (const auto& b : basis)
        if (!b.is_zero()) divisors.push_back(&b);

    MultiPoly p = f;
    MultiPoly rem(f.variables());
    while (!p.is_zero()) {
        const Exponent lp = p.leading_monomial(order);
        const Rational cp = p.terms().at(lp);
        bool reduced = false;
        for (const MultiPoly* b : divisors) {
            const Exponent& lb = b->leading_monomial(order);
            if (!divides(lb, lp)) continue;
            p.subtract_scaled(cp / b->leading_coefficient(order), quotient(lp, lb), *b);
            reduced = true;
            break;
        }
        if (reduced) continue;
        rem += MultiPoly::monomial(f.variables(), lp, cp);
        p -= MultiPoly::monomial(f.variables(), lp, cp);
    }
    return rem;
}

namespace {

MultiPoly s_polynomial(const MultiPoly& a, const MultiPoly& b, const MonomialOrder& order)
{
    const Exponent& la = a.leading_monomial(order);
    const Exponent& lb = b.leading_monomial(order);
    const Exponent l = lcm(la, lb);
    MultiPoly s(a.variables());
    s.subtract_scaled(Rational(-1) / a.leading_coefficient(order), quotient(l, la), a);
    s.subtract_scaled(Rational(1) / b.leading_coefficient(order), quotient(l, lb), b);
    return s;
}

bool coprime(const Exponent& a, const Exponent& b)
{
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > 0 && b[i] > 0) return false;
    return true;
}

struct Pair {
    std::size_t i, j;
    Exponent lcm;
};

// Leading monomials strictly ascending; ties cannot occur in a reduced basis.
void sort_by_lead(std::vector<MultiPoly>& g, const MonomialOrder& order)
{
    std::sort(g.begin(), g.end(), [&](const MultiPoly& a, const MultiPoly& b) {
        return order.less(a.leading_monomial(order), b.leading_monomial(order));
    });
}

std::vector<MultiPoly> reduce_basis(std::vector<MultiPoly> g, const MonomialOrder& order)
{
    // minimal: drop elements whose lead is divisible by another lead
    std::vector<MultiPoly> minimal;
    for (std::size_t i = 0; i < g.size(); ++i) {
        const Exponent& li = g[i].leading_monomial(order);
        bool redundant = false;
        for (std::size_t j = 0; j < g.size() && !redundant; ++j) {
            if (i == j) continue;
            const Exponent& lj = g[j].leading_monomial(order);
            if (divides(lj, li) && (lj != li || j < i)) redundant = true;
        }
        if (!redundant) minimal.push_back(g[i].monic(order));
    }
    sort_by_lead(minimal, order);
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<MultiPoly> others;
        for (std::size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        const Exponent lead = minimal[i].leading_monomial(order);
        MultiPoly tail = minimal[i] - MultiPoly::monomial(minimal[i].variables(), lead, 1);
        minimal[i] = MultiPoly::monomial(minimal[i].variables(), lead, 1) + normal_form(tail, others, order);
    }
    return minimal;
}

}  // namespace

GroebnerBasis buchberger(const std::vector<MultiPoly>& gens, const MonomialOrder& order, BuchbergerStats* stats)
{
    BuchbergerStats local;
    BuchbergerStats& st = stats ? *stats : local;

    std::vector<MultiPoly> g;
    for (const auto& f : gens)
        if (!f.is_zero()) g.push_back(f.monic(order));
    if (g.empty()) return {order, {}};

    std::vector<Pair> pairs;
    // done[i][j] for i < j: the pair has been handled or discarded
    std::vector<std::vector<bool>> done;
    auto add_element = [&](MultiPoly f) {
        const std::size_t k = g.size();
        g.push_back(std::move(f));
        for (auto& row : done) row.push_back(false);
        done.emplace_back(k + 1, false);
        for (std::size_t i = 0; i < k; ++i)
            pairs.push_back({i, k, lcm(g[i].leading_monomial(order), g[k].leading_monomial(order))});
    };

    std::vector<MultiPoly> initial = std::move(g);
    g.clear();
    for (auto& f : initial) add_element(std::move(f));

    auto is_done = [&](std::size_t a, std::size_t b) { return a < b ? done[a][b] : done[b][a]; };

    while (!pairs.empty()) {
        // normal strategy: smallest lcm first, earliest pair on ties
        auto best = pairs.begin();
        for (auto it = std::next(pairs.begin()); it != pairs.end(); ++it)
            if (order.less(it->lcm, best->lcm)) best = it;
        const Pair p = *best;
        pairs.erase(best);
        ++st.pairs_considered;

        const Exponent& li = g[p.i].leading_monomial(order);
        const Exponent& lj = g[p.j].leading_monomial(order);
        bool skip = false;
        if (coprime(li, lj)) {
            ++st.skipped_product;
            skip = true;
        } else {
            for (std::size_t k = 0; k < g.size(); ++k) {
                if (k == p.i || k == p.j) continue;
                if (!divides(g[k].leading_monomial(order), p.lcm)) continue;
                if (is_done(p.i, k) && is_done(p.j, k)) {
                    ++st.skipped_chain;
                    skip = true;
                    break;
                }
            }
        }
        done[p.i][p.j] = true;
        if (skip) continue;

        MultiPoly r = normal_form(s_polynomial(g[p.i], g[p.j], order), g, order);
        if (r.is_zero()) {
            ++st.reductions_to_zero;
            continue;
        }
        add_element(r.monic(order));
    }
    return {order, reduce_basis(std::move(g), order)};
}

bool GroebnerBasis::contains(const MultiPoly& f) const
{
    if (generators.empty()) return f.is_zero();
    return normal_form(f, generators, order).is_zero();
}

std::vector<MultiPoly> GroebnerBasis::free_of(const std::vector<std::size_t>& vars) const
{
    std::vector<MultiPoly> out;
    for (const auto& f : generators) {
        bool uses = false;
        for (std::size_t v : vars) uses = uses || f.uses_variable(v);
        if (!uses) out.push_back(f);
    }
    return out;
}

MonomialOrder elimination_order(std::size_t nvars, const std::vector<std::size_t>& drop)
{
    std::vector<std::size_t> prec;
    for (std::size_t v = 0; v < nvars; ++v)
        if (std::find(drop.begin(), drop.end(), v) != drop.end()) prec.push_back(v);
    for (std::size_t v = 0; v < nvars; ++v)
        if (std::find(drop.begin(), drop.end(), v) == drop.end()) prec.push_back(v);
    return {MonomialOrder::Kind::Lex, prec};
}

std::vector<MultiPoly> eliminate(const std::vector<MultiPoly>& gens, const std::set<std::string>& drop)
{
    if (gens.empty()) return {};
    const auto& vars = gens.front().variables();
    std::vector<std::size_t> idx;
    for (const auto& name : drop) idx.push_back(gens.front().index_of(name));
    if (idx.size() >= vars.size()) throw std::invalid_argument("eliminate: cannot drop every variable");
    const GroebnerBasis gb = buchberger(gens, elimination_order(vars.size(), idx));
    return gb.free_of(idx);
}

std::vector<std::vector<MultiPoly>> sylvester_matrix(const MultiPoly& f, const MultiPoly& g, std::size_t var)
{
    const int df = f.degree_in(var);
    const int dg = g.degree_in(var);
    if (df <= 0 && dg <= 0) throw std::invalid_argument("resultant: both polynomials have degree 0 in the variable");
    if (f.is_zero() || g.is_zero()) throw std::invalid_argument("resultant: zero polynomial");
    const auto n = static_cast<std::size_t>(df + dg);
    const MultiPoly zero(f.variables());
    std::vector<std::vector<MultiPoly>> s(n, std::vector<MultiPoly>(n, zero));
    // rows hold coefficients from the top degree down
    for (int r = 0; r < dg; ++r)
        for (int k = 0; k <= df; ++k) s[r][r + (df - k)] = f.coefficient_of(var, k);
    for (int r = 0; r < df; ++r)
        for (int k = 0; k <= dg; ++k) s[dg + r][r + (dg - k)] = g.coefficient_of(var, k);
    return s;
}

MultiPoly poly_determinant(std::vector<std::vector<MultiPoly>> m)
{
    const std::size_t n = m.size();
    if (n == 0) throw std::invalid_argument("determinant of an empty matrix");
    const auto vars = m[0][0].variables();
    MultiPoly prev = MultiPoly::constant(vars, 1);
    bool negate = false;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            std::size_t r = k + 1;
            while (r < n && m[r][k].is_zero()) ++r;
            if (r == n) return MultiPoly(vars);
            std::swap(m[k], m[r]);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                m[i][j] = divide_exact(m[k][k] * m[i][j] - m[i][k] * m[k][j], prev);
        prev = m[k][k];
    }
    MultiPoly d = m[n - 1][n - 1];
    return negate ? -d : d;
}

MultiPoly resultant(const MultiPoly& f, const MultiPoly& g, std::size_t var)
{
    return poly_determinant(sylvester_matrix(f, g, var));
}

}  // namespace solvlat::poly
