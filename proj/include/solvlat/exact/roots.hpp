#pragma once

#include "solvlat/exact/rational.hpp"
#include "solvlat/exact/unipoly.hpp"

#include <string>
#include <vector>

namespace solvlat::exact {

/// One isolating interval. Either lo < hi with exactly one root in the open
/// interval and a sign change of the squarefree part across it, or
/// lo == hi for a root found exactly.
struct RootInterval {
    Rational lo;
    Rational hi;
    int multiplicity = 1;

    bool exact() const { return lo == hi; }
    Rational width() const { return hi - lo; }
};

struct RootIsolation {
    UniPoly polynomial;
    /// Sorted left to right, pairwise disjoint, one per distinct real root.
    std::vector<RootInterval> intervals;

    /// Bisects every non-exact interval until its width is at most `width`.
    void refine(const Rational& width);
};

/// Sturm chain of the squarefree part of p.
std::vector<UniPoly> sturm_sequence(const UniPoly& p);

/// Number of distinct real roots of p in (lo, hi]. The squarefree part is
/// taken internally, so p need not be squarefree.
int sturm_count(const UniPoly& p, const Rational& lo, const Rational& hi);

/// Upper bound on the absolute value of every complex root (Cauchy bound).
Rational root_bound(const UniPoly& p);

/// Isolates every distinct real root with intervals of width <= `width`.
/// Throws std::invalid_argument for the zero polynomial or width <= 0.
RootIsolation isolate_roots(const UniPoly& p, const Rational& width);

/// Isolates only the roots in (0, +inf).
RootIsolation isolate_positive_roots(const UniPoly& p, const Rational& width);

/// All rational roots (distinct, ascending) of a nonzero polynomial, found by
/// testing the candidates ±d/e with d | trailing and e | leading coefficient
/// of the integer-cleared polynomial.
std::vector<Rational> rational_roots(const UniPoly& p);

/// Positive integer roots only (a subset of rational_roots).
std::vector<Integer> natural_roots(const UniPoly& p);

/// All positive divisors of |n| (n != 0), ascending, by trial division.
std::vector<Integer> positive_divisors(const Integer& n);

}  // namespace solvlat::exact
