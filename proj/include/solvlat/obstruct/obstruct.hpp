#pragma once

#include "solvlat/exact/rational.hpp"
#include "solvlat/obstruct/report.hpp"
#include "solvlat/poly/multipoly.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace solvlat::obstruct {

using exact::Integer;
using exact::Rational;
using exact::VectorQ;
using poly::MultiPoly;

/// Sorted exponents a, each standing for z^a.
using CharMultiset = std::vector<long>;

/// Throws std::domain_error for a non-integer weight.
CharMultiset char_multiset(const VectorQ& weights);

/// sum z^a = parameter, multiplied through by z^max(0, -min a).
/// Ring variables are {variable, parameter}. Throws std::invalid_argument on an empty set.
MultiPoly trace_condition(const std::vector<long>& exponents, const std::string& parameter,
                          const std::string& variable = "z");

/// Sorted {b, b, a, a, a+b, a+b}.
CharMultiset pattern_multiset(long beta, long alpha);
/// First (beta, alpha) over distinct target values, beta-major, whose pattern equals the target.
std::optional<std::pair<long, long>> match_pattern(const CharMultiset& target);

/// z = a/b > 0 in lowest terms with a/b + b/a = n; true iff z = 1.
/// Throws std::domain_error for z <= 0 and std::invalid_argument when z + 1/z != n.
bool rational_plus_inverse_integer_forces_one(const Rational& z, const Integer& n);
/// Coprime pairs a, b <= limit with z + 1/z an integer.
std::vector<std::pair<long, long>> rational_plus_inverse_scan(long limit);

/// f from the exponents of V with parameter m, g from those of the second exterior power with n.
std::pair<MultiPoly, MultiPoly> example2_system();
/// Case analysis on an arbitrary pair (f, g) in x, m, n.
ObstructionReport example2_pipeline(const MultiPoly& f, const MultiPoly& g);
ObstructionReport example2_obstruction();

ObstructionReport example3_qpos_obstruction();
ObstructionReport example3_q0_obstruction();

/// Common assumption list.
std::vector<Assumption> standard_assumptions();

}  // namespace solvlat::obstruct
