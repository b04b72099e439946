#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace solvlat::exact {

/// Arbitrary-precision integer.
using Integer = mpz_class;

/// Arbitrary-precision rational, always kept in lowest terms with a positive
/// denominator (GMP canonicalizes after every arithmetic operation).
using Rational = mpq_class;

using VectorQ = std::vector<Rational>;

/// Builds a canonical rational from a numerator/denominator pair.
/// Throws std::domain_error on a zero denominator.
Rational make_rational(const Integer& num, const Integer& den);

/// Parses "a", "-a" or "a/b". Throws std::invalid_argument on malformed input
/// and std::domain_error on a zero denominator.
Rational parse_rational(std::string_view text);

/// Bit-exact "num/den" rendering (denominator always present).
std::string to_fraction_string(const Rational& r);

/// Short rendering: "num" for integers, "num/den" otherwise.
std::string to_string(const Rational& r);

/// Decimal approximation with `digits` digits after the point. Display only.
std::string to_decimal(const Rational& r, int digits);

bool is_integer(const Rational& r);

/// Least common multiple of all denominators in `v` (1 for an empty vector).
Integer common_denominator(const VectorQ& v);

/// `v` scaled by the least positive rational making every entry an integer
/// with overall gcd 1. The zero vector maps to itself.
std::vector<Integer> primitive_integer_vector(const VectorQ& v);

}  // namespace solvlat::exact
