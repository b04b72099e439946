#pragma once

#include "solvlat/exact/rational.hpp"

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace solvlat::exact {

/// Dense univariate polynomial over Q, coefficients in ascending degree.
/// Trailing zero coefficients are never stored; the zero polynomial has no
/// coefficients and degree -1.
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Rational> ascending);
    UniPoly(std::initializer_list<long> ascending);

    static UniPoly constant(const Rational& c);
    static UniPoly monomial(const Rational& c, int degree);
    /// x - r
    static UniPoly linear_root(const Rational& r);

    int degree() const { return static_cast<int>(m_coeffs.size()) - 1; }
    bool is_zero() const { return m_coeffs.empty(); }
    const std::vector<Rational>& coefficients() const { return m_coeffs; }
    /// Coefficient of x^i (zero beyond the degree).
    Rational coeff(int i) const;
    const Rational& leading() const;

    Rational evaluate(const Rational& x) const;
    int sign_at(const Rational& x) const;

    UniPoly derivative() const;
    UniPoly monic() const;
    /// Scales to integer coefficients with content 1 and positive leading term.
    UniPoly primitive() const;
    bool has_integer_coefficients() const;

    UniPoly operator-() const;
    friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator*(const Rational& c, const UniPoly& a);
    friend bool operator==(const UniPoly& a, const UniPoly& b) = default;

    /// Euclidean division; throws std::domain_error when dividing by zero.
    static std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);

    std::string to_string(const std::string& var = "x") const;

private:
    void normalize();
    std::vector<Rational> m_coeffs;
};

/// Monic gcd; gcd(0, 0) = 0.
UniPoly gcd(const UniPoly& a, const UniPoly& b);

/// p / gcd(p, p'), made monic. Zero maps to zero.
UniPoly squarefree_part(const UniPoly& p);

}  // namespace solvlat::exact
