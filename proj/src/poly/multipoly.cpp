#include "solvlat/poly/multipoly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace solvlat::poly {

MonomialOrder::MonomialOrder(Kind kind, std::vector<std::size_t> precedence)
    : m_kind(kind), m_precedence(std::move(precedence))
{
    std::vector<std::size_t> sorted = m_precedence;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i)
        if (sorted[i] != i) throw std::invalid_argument("monomial order precedence is not a permutation");
}

MonomialOrder MonomialOrder::lex(std::size_t nvars)
{
    std::vector<std::size_t> p(nvars);
    std::iota(p.begin(), p.end(), 0);
    return {Kind::Lex, p};
}

MonomialOrder MonomialOrder::grevlex(std::size_t nvars)
{
    std::vector<std::size_t> p(nvars);
    std::iota(p.begin(), p.end(), 0);
    return {Kind::GrevLex, p};
}

bool MonomialOrder::less(const Exponent& a, const Exponent& b) const
{
    if (m_kind == Kind::Lex) {
        for (std::size_t v : m_precedence)
            if (a[v] != b[v]) return a[v] < b[v];
        return false;
    }
    const int da = std::accumulate(a.begin(), a.end(), 0);
    const int db = std::accumulate(b.begin(), b.end(), 0);
    if (da != db) return da < db;
    for (auto it = m_precedence.rbegin(); it != m_precedence.rend(); ++it)
        if (a[*it] != b[*it]) return a[*it] > b[*it];
    return false;
}

bool MonomialOrder::is_identity() const
{
    for (std::size_t i = 0; i < m_precedence.size(); ++i)
        if (m_precedence[i] != i) return false;
    return true;
}

std::string MonomialOrder::name() const { return m_kind == Kind::Lex ? "lex" : "grevlex"; }

bool divides(const Exponent& a, const Exponent& b)
{
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

Exponent lcm(const Exponent& a, const Exponent& b)
{
    Exponent e(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) e[i] = std::max(a[i], b[i]);
    return e;
}

Exponent quotient(const Exponent& b, const Exponent& a)
{
    Exponent e(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) e[i] = b[i] - a[i];
    return e;
}

MultiPoly::MultiPoly(std::vector<std::string> variables) : m_vars(std::move(variables)) {}

MultiPoly::MultiPoly(std::vector<std::string> variables, Terms terms)
    : m_vars(std::move(variables)), m_terms(std::move(terms))
{
    for (auto it = m_terms.begin(); it != m_terms.end();) {
        if (it->first.size() != m_vars.size()) throw std::invalid_argument("exponent length mismatch");
        if (it->second == 0)
            it = m_terms.erase(it);
        else
            ++it;
    }
}

MultiPoly MultiPoly::constant(std::vector<std::string> variables, const Rational& c)
{
    const std::size_t n = variables.size();
    return monomial(std::move(variables), Exponent(n, 0), c);
}

MultiPoly MultiPoly::variable(std::vector<std::string> variables, std::string_view name)
{
    MultiPoly p(std::move(variables));
    Exponent e(p.nvars(), 0);
    e[p.index_of(name)] = 1;
    p.m_terms.emplace(std::move(e), Rational(1));
    return p;
}

MultiPoly MultiPoly::monomial(std::vector<std::string> variables, Exponent e, const Rational& c)
{
    Terms t;
    t.emplace(std::move(e), c);
    return MultiPoly(std::move(variables), std::move(t));
}

MultiPoly MultiPoly::from_univariate(std::vector<std::string> variables, std::string_view var,
                                     const exact::UniPoly& p)
{
    MultiPoly out(std::move(variables));
    const std::size_t v = out.index_of(var);
    for (int k = 0; k <= p.degree(); ++k) {
        if (p.coeff(k) == 0) continue;
        Exponent e(out.nvars(), 0);
        e[v] = k;
        out.m_terms.emplace(std::move(e), p.coeff(k));
    }
    return out;
}

std::size_t MultiPoly::index_of(std::string_view var) const
{
    for (std::size_t i = 0; i < m_vars.size(); ++i)
        if (m_vars[i] == var) return i;
    throw std::invalid_argument("unknown variable '" + std::string(var) + "'");
}

bool MultiPoly::is_constant() const
{
    return m_terms.empty() || (m_terms.size() == 1 && total_degree() == 0);
}

Rational MultiPoly::constant_term() const
{
    const auto it = m_terms.find(Exponent(m_vars.size(), 0));
    return it == m_terms.end() ? Rational(0) : it->second;
}

const Exponent& MultiPoly::leading_monomial(const MonomialOrder& order) const
{
    if (m_terms.empty()) throw std::domain_error("leading monomial of the zero polynomial");
    // map order is lex in declaration order
    if (order.kind() == MonomialOrder::Kind::Lex && order.is_identity()) return m_terms.rbegin()->first;
    auto best = m_terms.begin();
    for (auto it = std::next(best); it != m_terms.end(); ++it)
        if (order.less(best->first, it->first)) best = it;
    return best->first;
}

const Rational& MultiPoly::leading_coefficient(const MonomialOrder& order) const
{
    return m_terms.at(leading_monomial(order));
}

int MultiPoly::degree_in(std::size_t var) const
{
    int d = m_terms.empty() ? -1 : 0;
    for (const auto& [e, c] : m_terms) d = std::max(d, e[var]);
    return d;
}

int MultiPoly::total_degree() const
{
    int d = m_terms.empty() ? -1 : 0;
    for (const auto& [e, c] : m_terms) d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
    return d;
}

bool MultiPoly::uses_variable(std::size_t var) const { return degree_in(var) > 0; }

std::vector<std::size_t> MultiPoly::support() const
{
    std::vector<std::size_t> s;
    for (std::size_t v = 0; v < m_vars.size(); ++v)
        if (uses_variable(v)) s.push_back(v);
    return s;
}

MultiPoly MultiPoly::coefficient_of(std::size_t var, int k) const
{
    MultiPoly out(m_vars);
    for (const auto& [e, c] : m_terms) {
        if (e[var] != k) continue;
        Exponent f = e;
        f[var] = 0;
        out.m_terms.emplace(std::move(f), c);
    }
    return out;
}

namespace {
Rational power(const Rational& x, int k)
{
    Rational r = 1;
    for (int i = 0; i < k; ++i) r *= x;
    return r;
}
}  // namespace

MultiPoly MultiPoly::substitute(std::size_t var, const Rational& value) const
{
    MultiPoly out(m_vars);
    for (const auto& [e, c] : m_terms) {
        Exponent f = e;
        f[var] = 0;
        const Rational v = c * power(value, e[var]);
        if (v == 0) continue;
        auto [it, inserted] = out.m_terms.emplace(std::move(f), v);
        if (!inserted) {
            it->second += v;
            if (it->second == 0) out.m_terms.erase(it);
        }
    }
    return out;
}

Rational MultiPoly::evaluate(const std::vector<Rational>& point) const
{
    if (point.size() != m_vars.size()) throw std::invalid_argument("evaluation point has wrong length");
    Rational acc = 0;
    for (const auto& [e, c] : m_terms) {
        Rational t = c;
        for (std::size_t i = 0; i < e.size(); ++i) t *= power(point[i], e[i]);
        acc += t;
    }
    return acc;
}

exact::UniPoly MultiPoly::to_univariate(std::size_t var) const
{
    std::vector<Rational> coeffs(static_cast<std::size_t>(std::max(degree_in(var), 0)) + 1);
    for (const auto& [e, c] : m_terms) {
        for (std::size_t i = 0; i < e.size(); ++i)
            if (i != var && e[i] != 0)
                throw std::invalid_argument("polynomial is not univariate in '" + m_vars[var] + "'");
        coeffs[static_cast<std::size_t>(e[var])] = c;
    }
    return exact::UniPoly(std::move(coeffs));
}

MultiPoly MultiPoly::monic(const MonomialOrder& order) const
{
    if (is_zero()) return *this;
    const Rational lc = leading_coefficient(order);
    MultiPoly out = *this;
    for (auto& [e, c] : out.m_terms) c /= lc;
    return out;
}

MultiPoly MultiPoly::integer_cleared(const MonomialOrder& order) const
{
    if (is_zero()) return *this;
    exact::VectorQ coeffs;
    for (const auto& [e, c] : m_terms) coeffs.push_back(c);
    const auto ints = exact::primitive_integer_vector(coeffs);
    MultiPoly out = *this;
    std::size_t i = 0;
    for (auto& [e, c] : out.m_terms) c = Rational(ints[i++]);
    if (out.leading_coefficient(order) < 0) out = -out;
    return out;
}

bool MultiPoly::all_coefficients_positive() const
{
    return !m_terms.empty() &&
           std::all_of(m_terms.begin(), m_terms.end(), [](const auto& t) { return t.second > 0; });
}

MultiPoly MultiPoly::renamed(std::vector<std::string> variables) const
{
    if (variables.size() != m_vars.size()) throw std::invalid_argument("renamed: variable count mismatch");
    return MultiPoly(std::move(variables), m_terms);
}

MultiPoly MultiPoly::operator-() const
{
    MultiPoly out = *this;
    for (auto& [e, c] : out.m_terms) c = -c;
    return out;
}

void MultiPoly::check_ring(const MultiPoly& o) const
{
    if (m_vars != o.m_vars) throw std::invalid_argument("polynomials live in different rings");
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o)
{
    check_ring(o);
    for (const auto& [e, c] : o.m_terms) {
        auto [it, inserted] = m_terms.emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) m_terms.erase(it);
        }
    }
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o)
{
    check_ring(o);
    for (const auto& [e, c] : o.m_terms) {
        auto [it, inserted] = m_terms.emplace(e, -c);
        if (!inserted) {
            it->second -= c;
            if (it->second == 0) m_terms.erase(it);
        }
    }
    return *this;
}

void MultiPoly::subtract_scaled(const Rational& c, const Exponent& shift, const MultiPoly& b)
{
    check_ring(b);
    Exponent e(m_vars.size());
    for (const auto& [be, bc] : b.m_terms) {
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = be[i] + shift[i];
        const Rational v = c * bc;
        auto it = m_terms.find(e);
        if (it == m_terms.end()) {
            m_terms.emplace(e, -v);
        } else {
            it->second -= v;
            if (it->second == 0) m_terms.erase(it);
        }
    }
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b)
{
    a.check_ring(b);
    MultiPoly out(a.m_vars);
    Exponent e(a.nvars());
    for (const auto& [ea, ca] : a.m_terms)
        for (const auto& [eb, cb] : b.m_terms) {
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            const Rational v = ca * cb;
            auto [it, inserted] = out.m_terms.emplace(e, v);
            if (!inserted) {
                it->second += v;
                if (it->second == 0) out.m_terms.erase(it);
            }
        }
    return out;
}

MultiPoly operator*(const Rational& c, const MultiPoly& a)
{
    if (c == 0) return MultiPoly(a.m_vars);
    MultiPoly out = a;
    for (auto& [e, v] : out.m_terms) v *= c;
    return out;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.m_vars == b.m_vars && a.m_terms == b.m_terms; }

MultiPoly MultiPoly::pow(unsigned k) const
{
    MultiPoly r = constant(m_vars, 1);
    for (unsigned i = 0; i < k; ++i) r = r * *this;
    return r;
}

std::string MultiPoly::to_string() const { return to_string(MonomialOrder::lex(m_vars.size())); }

std::string MultiPoly::to_string(const MonomialOrder& order) const
{
    if (m_terms.empty()) return "0";
    std::vector<const Terms::value_type*> ts;
    for (const auto& t : m_terms) ts.push_back(&t);
    std::sort(ts.begin(), ts.end(), [&](auto* a, auto* b) { return order.less(b->first, a->first); });

    std::ostringstream os;
    bool first = true;
    for (const auto* t : ts) {
        const Rational& c = t->second;
        const Rational mag = abs(c);
        if (first)
            os << (c < 0 ? "-" : "");
        else
            os << (c < 0 ? " - " : " + ");
        first = false;
        std::vector<std::string> factors;
        if (mag != 1) factors.push_back(exact::to_string(mag));
        for (std::size_t i = 0; i < m_vars.size(); ++i) {
            const int k = t->first[i];
            if (k == 0) continue;
            factors.push_back(k == 1 ? m_vars[i] : m_vars[i] + "^" + std::to_string(k));
        }
        if (factors.empty()) factors.push_back("1");
        for (std::size_t i = 0; i < factors.size(); ++i) os << (i ? "*" : "") << factors[i];
    }
    return os.str();
}

MultiPoly divide_exact(const MultiPoly& a, const MultiPoly& b)
{
    if (b.is_zero()) throw std::domain_error("division by the zero polynomial");
    const MonomialOrder order = MonomialOrder::lex(a.nvars());
    const Exponent& lb = b.leading_monomial(order);
    const Rational& cb = b.leading_coefficient(order);
    MultiPoly rem = a;
    MultiPoly q(a.variables());
    while (!rem.is_zero()) {
        const Exponent lr = rem.leading_monomial(order);
        if (!divides(lb, lr)) throw std::domain_error("inexact polynomial division");
        const Rational c = rem.terms().at(lr) / cb;
        const Exponent shift = quotient(lr, lb);
        q += MultiPoly::monomial(a.variables(), shift, c);
        rem.subtract_scaled(c, shift, b);
    }
    return q;
}

}  // namespace solvlat::poly
