#include "solvlat/exact/roots.hpp"

#include <algorithm>
#include <stdexcept>

namespace solvlat::exact {

std::vector<UniPoly> sturm_sequence(const UniPoly& p)
{
    std::vector<UniPoly> seq;
    const UniPoly s = squarefree_part(p);
    if (s.is_zero()) return seq;
    seq.push_back(s);
    seq.push_back(s.derivative());
    while (!seq.back().is_zero()) {
        UniPoly r = UniPoly::divmod(seq[seq.size() - 2], seq.back()).second;
        seq.push_back(-r);
    }
    seq.pop_back();
    return seq;
}

namespace {

int sign_variations(const std::vector<UniPoly>& seq, const Rational& x)
{
    int count = 0;
    int last = 0;
    for (const auto& f : seq) {
        const int s = f.sign_at(x);
        if (s == 0) continue;
        if (last != 0 && s != last) ++count;
        last = s;
    }
    return count;
}

int count_with(const std::vector<UniPoly>& seq, const Rational& lo, const Rational& hi)
{
    if (seq.empty() || hi <= lo) return 0;
    return sign_variations(seq, lo) - sign_variations(seq, hi);
}

struct Isolator {
    UniPoly sqfree;  // polynomial being bisected (exact roots removed)
    UniPoly full;    // squarefree part of the input, must not vanish at endpoints
    std::vector<UniPoly> seq;
    std::vector<RootInterval> out;

    int count(const Rational& lo, const Rational& hi) const { return count_with(seq, lo, hi); }

    /// Shrinks (lo, hi] holding exactly one root until the width bound holds
    /// and neither endpoint is a root. May end at an exact root.
    RootInterval shrink(Rational lo, Rational hi, const Rational& width) const
    {
        if (sqfree.sign_at(hi) == 0) return {hi, hi};
        while (hi - lo > width || full.sign_at(lo) == 0 || full.sign_at(hi) == 0) {
            Rational mid = (lo + hi) / 2;
            if (sqfree.sign_at(mid) == 0) return {mid, mid};
            if (count(lo, mid) == 1)
                hi = std::move(mid);
            else
                lo = std::move(mid);
        }
        return {lo, hi};
    }

    void isolate(const Rational& lo, const Rational& hi, int n, const Rational& width)
    {
        if (n <= 0) return;
        if (n == 1) {
            out.push_back(shrink(lo, hi, width));
            return;
        }
        const Rational mid = (lo + hi) / 2;
        if (sqfree.sign_at(mid) == 0) {
            out.push_back({mid, mid});
            Rational delta = (hi - lo) / 4;
            while (count(mid - delta, mid + delta) != 1 || sqfree.sign_at(mid - delta) == 0 ||
                   sqfree.sign_at(mid + delta) == 0)
                delta /= 2;
            const Rational left_hi = mid - delta;
            const Rational right_lo = mid + delta;
            isolate(lo, left_hi, count(lo, left_hi), width);
            isolate(right_lo, hi, count(right_lo, hi), width);
            return;
        }
        const int left = count(lo, mid);
        isolate(lo, mid, left, width);
        isolate(mid, hi, n - left, width);
    }
};

int multiplicity_of(const UniPoly& p, const RootInterval& iv)
{
    int mult = 1;
    UniPoly d = gcd(p, p.derivative());
    while (d.degree() > 0) {
        const bool hit = iv.exact() ? d.evaluate(iv.lo) == 0 : sturm_count(d, iv.lo, iv.hi) > 0;
        if (!hit) break;
        ++mult;
        d = gcd(d, d.derivative());
    }
    return mult;
}

RootIsolation isolate_in(const UniPoly& p, const Rational& lo, const Rational& hi, const Rational& width)
{
    if (p.is_zero()) throw std::invalid_argument("isolate_roots: zero polynomial");
    if (width <= 0) throw std::invalid_argument("isolate_roots: width must be positive");
    // rational roots are flagged exactly and divided out before bisection
    UniPoly rest = squarefree_part(p);
    std::vector<RootInterval> exact_roots;
    if (rest.degree() > 0) {
        for (const auto& r : rational_roots(rest)) {
            if (r <= lo || r > hi) continue;
            exact_roots.push_back({r, r});
            rest = UniPoly::divmod(rest, UniPoly::linear_root(r)).first;
        }
    }
    Isolator iso{rest, squarefree_part(p), sturm_sequence(rest), std::move(exact_roots)};
    if (iso.sqfree.degree() > 0) iso.isolate(lo, hi, iso.count(lo, hi), width);
    std::sort(iso.out.begin(), iso.out.end(),
              [](const RootInterval& a, const RootInterval& b) { return a.lo < b.lo; });
    for (auto& iv : iso.out) iv.multiplicity = multiplicity_of(p, iv);
    return {p, std::move(iso.out)};
}

}  // namespace

int sturm_count(const UniPoly& p, const Rational& lo, const Rational& hi)
{
    return count_with(sturm_sequence(p), lo, hi);
}

Rational root_bound(const UniPoly& p)
{
    if (p.is_zero()) throw std::invalid_argument("root_bound: zero polynomial");
    Rational m = 0;
    const Rational& lc = p.leading();
    for (int i = 0; i < p.degree(); ++i) {
        const Rational r = abs(p.coeff(i) / lc);
        if (r > m) m = r;
    }
    return m + 1;
}

RootIsolation isolate_roots(const UniPoly& p, const Rational& width)
{
    if (p.is_zero()) throw std::invalid_argument("isolate_roots: zero polynomial");
    const Rational b = root_bound(p) + 1;
    return isolate_in(p, -b, b, width);
}

RootIsolation isolate_positive_roots(const UniPoly& p, const Rational& width)
{
    if (p.is_zero()) throw std::invalid_argument("isolate_roots: zero polynomial");
    const Rational b = root_bound(p) + 1;
    // (0, b] excludes 0 itself, which is never positive
    return isolate_in(p, Rational(0), b, width);
}

void RootIsolation::refine(const Rational& width)
{
    if (width <= 0) throw std::invalid_argument("refine: width must be positive");
    const UniPoly s = squarefree_part(polynomial);
    Isolator iso{s, s, sturm_sequence(polynomial), {}};
    for (auto& iv : intervals) {
        if (iv.exact()) continue;
        const int mult = iv.multiplicity;
        iv = iso.shrink(iv.lo, iv.hi, width);
        iv.multiplicity = mult;
    }
}

std::vector<Integer> positive_divisors(const Integer& n)
{
    if (n == 0) throw std::invalid_argument("positive_divisors: zero has infinitely many divisors");
    const Integer a = abs(n);
    std::vector<Integer> small;
    std::vector<Integer> large;
    for (Integer d = 1; d * d <= a; ++d) {
        if (a % d != 0) continue;
        small.push_back(d);
        if (d * d != a) large.push_back(a / d);
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

std::vector<Rational> rational_roots(const UniPoly& p)
{
    if (p.is_zero()) throw std::invalid_argument("rational_roots: zero polynomial");
    const UniPoly q = p.primitive();
    std::vector<Rational> roots;
    int shift = 0;
    while (q.coeff(shift) == 0) ++shift;
    if (shift > 0) roots.emplace_back(0);

    const auto& c = q.coefficients();
    const UniPoly reduced(std::vector<Rational>(c.begin() + shift, c.end()));
    if (reduced.degree() >= 1) {
        const auto nums = positive_divisors(reduced.coeff(0).get_num());
        const auto dens = positive_divisors(reduced.leading().get_num());
        for (const auto& d : nums)
            for (const auto& e : dens) {
                for (int s : {1, -1}) {
                    const Rational cand = make_rational(d * s, e);
                    if (reduced.evaluate(cand) == 0) roots.push_back(cand);
                }
            }
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

std::vector<Integer> natural_roots(const UniPoly& p)
{
    std::vector<Integer> out;
    for (const auto& r : rational_roots(p))
        if (r > 0 && is_integer(r)) out.push_back(r.get_num());
    return out;
}

}  // namespace solvlat::exact
