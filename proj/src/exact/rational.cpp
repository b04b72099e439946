#include "solvlat/exact/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace solvlat::exact {

Rational make_rational(const Integer& num, const Integer& den)
{
    if (den == 0) throw std::domain_error("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

namespace {

Integer parse_integer(std::string_view text, std::string_view whole)
{
    std::size_t i = 0;
    if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
    if (i == text.size()) throw std::invalid_argument("malformed rational: '" + std::string(whole) + "'");
    for (std::size_t j = i; j < text.size(); ++j) {
        if (!std::isdigit(static_cast<unsigned char>(text[j])))
            throw std::invalid_argument("malformed rational: '" + std::string(whole) + "'");
    }
    std::string digits(text);
    if (digits.front() == '+') digits.erase(0, 1);
    return Integer(digits, 10);
}

std::string_view trim(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

}  // namespace

Rational parse_rational(std::string_view text)
{
    const std::string_view t = trim(text);
    const auto slash = t.find('/');
    if (slash == std::string_view::npos) return Rational(parse_integer(t, text));
    return make_rational(parse_integer(trim(t.substr(0, slash)), text),
                         parse_integer(trim(t.substr(slash + 1)), text));
}

std::string to_fraction_string(const Rational& r)
{
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::string to_string(const Rational& r)
{
    if (r.get_den() == 1) return r.get_num().get_str();
    return to_fraction_string(r);
}

std::string to_decimal(const Rational& r, int digits)
{
    Integer scale = 1;
    for (int i = 0; i < digits; ++i) scale *= 10;
    const Rational scaled = abs(r) * scale;
    // round half up on the magnitude
    Integer q = (scaled.get_num() * 2 + scaled.get_den()) / (scaled.get_den() * 2);
    std::string s = q.get_str();
    if (digits > 0) {
        if (s.size() <= static_cast<std::size_t>(digits)) s.insert(0, digits + 1 - s.size(), '0');
        s.insert(s.size() - digits, ".");
    }
    if (r < 0 && q != 0) s.insert(0, "-");
    return s;
}

bool is_integer(const Rational& r) { return r.get_den() == 1; }

Integer common_denominator(const VectorQ& v)
{
    Integer l = 1;
    for (const auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den().get_mpz_t());
    return l;
}

std::vector<Integer> primitive_integer_vector(const VectorQ& v)
{
    const Integer l = common_denominator(v);
    std::vector<Integer> out;
    out.reserve(v.size());
    Integer g = 0;
    for (const auto& x : v) {
        Integer e = x.get_num() * (l / x.get_den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), e.get_mpz_t());
        out.push_back(std::move(e));
    }
    if (g > 1) {
        for (auto& e : out) e /= g;
    }
    return out;
}

}  // namespace solvlat::exact
