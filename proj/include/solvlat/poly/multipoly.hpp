#pragma once

#include "solvlat/exact/rational.hpp"
#include "solvlat/exact/unipoly.hpp"

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace solvlat::poly {

using exact::Rational;

/// Exponent vector; its length equals the variable count of the ring.
using Exponent = std::vector<int>;

/// Total, multiplicative monomial order with 1 minimal.
class MonomialOrder {
public:
    enum class Kind { Lex, GrevLex };

    /// `precedence[0]` is the index of the greatest variable.
    MonomialOrder(Kind kind, std::vector<std::size_t> precedence);

    static MonomialOrder lex(std::size_t nvars);
    static MonomialOrder grevlex(std::size_t nvars);

    Kind kind() const { return m_kind; }
    const std::vector<std::size_t>& precedence() const { return m_precedence; }

    /// True when precedence follows the ring's variable order.
    bool is_identity() const;

    /// Strict comparison a < b.
    bool less(const Exponent& a, const Exponent& b) const;

    std::string name() const;

    friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

private:
    Kind m_kind;
    std::vector<std::size_t> m_precedence;
};

/// Sparse multivariate polynomial over Q in a fixed, named variable list.
/// No zero coefficient is ever stored.
class MultiPoly {
public:
    using Terms = std::map<Exponent, Rational>;

    MultiPoly() = default;
    explicit MultiPoly(std::vector<std::string> variables);
    MultiPoly(std::vector<std::string> variables, Terms terms);

    static MultiPoly constant(std::vector<std::string> variables, const Rational& c);
    static MultiPoly variable(std::vector<std::string> variables, std::string_view name);
    static MultiPoly monomial(std::vector<std::string> variables, Exponent e, const Rational& c);
    /// Embeds a univariate polynomial in variable `var`.
    static MultiPoly from_univariate(std::vector<std::string> variables, std::string_view var,
                                     const exact::UniPoly& p);

    const std::vector<std::string>& variables() const { return m_vars; }
    std::size_t nvars() const { return m_vars.size(); }
    std::size_t index_of(std::string_view var) const;
    const Terms& terms() const { return m_terms; }
    std::size_t size() const { return m_terms.size(); }
    bool is_zero() const { return m_terms.empty(); }
    bool is_constant() const;
    /// Constant term.
    Rational constant_term() const;

    const Exponent& leading_monomial(const MonomialOrder& order) const;
    const Rational& leading_coefficient(const MonomialOrder& order) const;

    int degree_in(std::size_t var) const;
    int total_degree() const;
    bool uses_variable(std::size_t var) const;
    /// Indices of variables that occur with positive exponent.
    std::vector<std::size_t> support() const;

    /// Coefficient of var^k as a polynomial in the same ring (var absent).
    MultiPoly coefficient_of(std::size_t var, int k) const;
    MultiPoly substitute(std::size_t var, const Rational& value) const;
    /// Value at a full point (one rational per variable).
    Rational evaluate(const std::vector<Rational>& point) const;

    /// Univariate view; throws std::invalid_argument if any other variable occurs.
    exact::UniPoly to_univariate(std::size_t var) const;

    /// Divided by the leading coefficient under `order`.
    MultiPoly monic(const MonomialOrder& order) const;
    /// Integer coefficients with content 1, sign fixed by the leading term under `order`.
    MultiPoly integer_cleared(const MonomialOrder& order) const;
    bool all_coefficients_positive() const;

    /// Same terms read in a different variable list of equal length.
    MultiPoly renamed(std::vector<std::string> variables) const;

    MultiPoly operator-() const;
    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator*(const Rational& c, const MultiPoly& a);
    friend bool operator==(const MultiPoly& a, const MultiPoly& b);

    /// a - c * x^e * b, the reduction step.
    void subtract_scaled(const Rational& c, const Exponent& e, const MultiPoly& b);

    MultiPoly pow(unsigned k) const;

    /// Plain-text rendering, terms descending under `order` (lex by default).
    std::string to_string() const;
    std::string to_string(const MonomialOrder& order) const;

private:
    void check_ring(const MultiPoly& o) const;
    std::vector<std::string> m_vars;
    Terms m_terms;
};

bool divides(const Exponent& a, const Exponent& b);
Exponent lcm(const Exponent& a, const Exponent& b);
Exponent quotient(const Exponent& b, const Exponent& a);

/// Exact quotient a / b; throws std::domain_error if b does not divide a.
MultiPoly divide_exact(const MultiPoly& a, const MultiPoly& b);

}  // namespace solvlat::poly
