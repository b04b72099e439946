#include "solvlat/exact/unipoly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace solvlat::exact {

UniPoly::UniPoly(std::vector<Rational> ascending) : m_coeffs(std::move(ascending)) { normalize(); }

UniPoly::UniPoly(std::initializer_list<long> ascending)
{
    m_coeffs.reserve(ascending.size());
    for (long c : ascending) m_coeffs.emplace_back(c);
    normalize();
}

UniPoly UniPoly::constant(const Rational& c) { return UniPoly(std::vector<Rational>{c}); }

UniPoly UniPoly::monomial(const Rational& c, int degree)
{
    std::vector<Rational> v(static_cast<std::size_t>(degree) + 1);
    v.back() = c;
    return UniPoly(std::move(v));
}

UniPoly UniPoly::linear_root(const Rational& r) { return UniPoly(std::vector<Rational>{-r, Rational(1)}); }

void UniPoly::normalize()
{
    while (!m_coeffs.empty() && m_coeffs.back() == 0) m_coeffs.pop_back();
}

Rational UniPoly::coeff(int i) const
{
    if (i < 0 || i > degree()) return 0;
    return m_coeffs[static_cast<std::size_t>(i)];
}

const Rational& UniPoly::leading() const
{
    if (is_zero()) throw std::domain_error("leading coefficient of the zero polynomial");
    return m_coeffs.back();
}

Rational UniPoly::evaluate(const Rational& x) const
{
    Rational acc = 0;
    for (auto it = m_coeffs.rbegin(); it != m_coeffs.rend(); ++it) acc = acc * x + *it;
    return acc;
}

int UniPoly::sign_at(const Rational& x) const { return sgn(evaluate(x)); }

UniPoly UniPoly::derivative() const
{
    if (m_coeffs.size() <= 1) return {};
    std::vector<Rational> d(m_coeffs.size() - 1);
    for (std::size_t i = 1; i < m_coeffs.size(); ++i) d[i - 1] = m_coeffs[i] * static_cast<long>(i);
    return UniPoly(std::move(d));
}

UniPoly UniPoly::monic() const
{
    if (is_zero()) return {};
    const Rational lc = leading();
    std::vector<Rational> v = m_coeffs;
    for (auto& c : v) c /= lc;
    return UniPoly(std::move(v));
}

UniPoly UniPoly::primitive() const
{
    if (is_zero()) return {};
    auto ints = primitive_integer_vector(m_coeffs);
    std::vector<Rational> v;
    v.reserve(ints.size());
    const bool flip = ints.back() < 0;
    for (auto& e : ints) v.emplace_back(flip ? Integer(-e) : e);
    return UniPoly(std::move(v));
}

bool UniPoly::has_integer_coefficients() const
{
    return std::all_of(m_coeffs.begin(), m_coeffs.end(), [](const Rational& c) { return is_integer(c); });
}

UniPoly UniPoly::operator-() const
{
    std::vector<Rational> v = m_coeffs;
    for (auto& c : v) c = -c;
    return UniPoly(std::move(v));
}

UniPoly operator+(const UniPoly& a, const UniPoly& b)
{
    std::vector<Rational> v(std::max(a.m_coeffs.size(), b.m_coeffs.size()));
    for (std::size_t i = 0; i < a.m_coeffs.size(); ++i) v[i] += a.m_coeffs[i];
    for (std::size_t i = 0; i < b.m_coeffs.size(); ++i) v[i] += b.m_coeffs[i];
    return UniPoly(std::move(v));
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }

UniPoly operator*(const UniPoly& a, const UniPoly& b)
{
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> v(a.m_coeffs.size() + b.m_coeffs.size() - 1);
    for (std::size_t i = 0; i < a.m_coeffs.size(); ++i)
        for (std::size_t j = 0; j < b.m_coeffs.size(); ++j) v[i + j] += a.m_coeffs[i] * b.m_coeffs[j];
    return UniPoly(std::move(v));
}

UniPoly operator*(const Rational& c, const UniPoly& a)
{
    std::vector<Rational> v = a.m_coeffs;
    for (auto& x : v) x *= c;
    return UniPoly(std::move(v));
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& a, const UniPoly& b)
{
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    if (a.degree() < b.degree()) return {UniPoly{}, a};
    std::vector<Rational> rem = a.m_coeffs;
    std::vector<Rational> quot(static_cast<std::size_t>(a.degree() - b.degree()) + 1);
    const Rational& lc = b.leading();
    const std::size_t db = static_cast<std::size_t>(b.degree());
    for (std::size_t k = quot.size(); k-- > 0;) {
        const Rational q = rem[k + db] / lc;
        quot[k] = q;
        if (q == 0) continue;
        for (std::size_t j = 0; j <= db; ++j) rem[k + j] -= q * b.m_coeffs[j];
    }
    return {UniPoly(std::move(quot)), UniPoly(std::move(rem))};
}

std::string UniPoly::to_string(const std::string& var) const
{
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Rational& c = m_coeffs[static_cast<std::size_t>(i)];
        if (c == 0) continue;
        const Rational mag = abs(c);
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        const bool unit = mag == 1;
        if (i == 0) {
            os << exact::to_string(mag);
            continue;
        }
        if (!unit) os << exact::to_string(mag) << "*";
        os << var;
        if (i > 1) os << "^" << i;
    }
    return os.str();
}

UniPoly gcd(const UniPoly& a, const UniPoly& b)
{
    UniPoly x = a;
    UniPoly y = b;
    while (!y.is_zero()) {
        UniPoly r = UniPoly::divmod(x, y).second;
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

UniPoly squarefree_part(const UniPoly& p)
{
    if (p.degree() <= 0) return p.monic();
    const UniPoly g = gcd(p, p.derivative());
    return UniPoly::divmod(p, g).first.monic();
}

}  // namespace solvlat::exact
