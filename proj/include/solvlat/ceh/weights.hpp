#pragma once

#include "solvlat/ceh/cohomology.hpp"

#include <array>
#include <vector>

namespace solvlat::ceh {

/// Weight a*l1 + b*l2 stored as {a, b}.
using WeightForm = std::array<Rational, 2>;

/// Weights of A, B, X1, X2, X3, Z1, Z2, Z3 in the modified family.
std::vector<WeightForm> family_weight_forms();

/// Masks of basis subsets whose weight sum vanishes identically.
std::vector<Mask> vanishing_subsets(const std::vector<WeightForm>& forms);
/// Masks whose weight sum vanishes at (l1, l2).
std::vector<Mask> vanishing_subsets_at(const std::vector<WeightForm>& forms, const Rational& l1, const Rational& l2);
bool same_vanishing_pattern(const std::vector<WeightForm>& forms, const Rational& l1, const Rational& l2);

/// Distinct nonzero subset sums {a, b}, normalized so the first nonzero entry is positive.
std::vector<WeightForm> subset_weight_directions(const std::vector<WeightForm>& forms);

}  // namespace solvlat::ceh
