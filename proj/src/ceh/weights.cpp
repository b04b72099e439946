#include "solvlat/ceh/weights.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace solvlat::ceh {

namespace {

WeightForm subset_sum(const std::vector<WeightForm>& forms, Mask m)
{
    WeightForm s{0, 0};
    for (std::size_t i = 0; i < forms.size(); ++i)
        if (m & (Mask(1) << i)) {
            s[0] += forms[i][0];
            s[1] += forms[i][1];
        }
    return s;
}

Mask full(const std::vector<WeightForm>& forms)
{
    if (forms.size() > 20) throw std::invalid_argument("weight forms: too many basis vectors");
    return Mask(1) << forms.size();
}

}  // namespace

std::vector<WeightForm> family_weight_forms()
{
    return {
        {0, 0}, {0, 0}, {1, 0}, {0, 1}, {-1, -1}, {-1, 0}, {0, -1}, {1, 1},
    };
}

std::vector<Mask> vanishing_subsets(const std::vector<WeightForm>& forms)
{
    std::vector<Mask> out;
    for (Mask m = 0; m < full(forms); ++m) {
        const auto s = subset_sum(forms, m);
        if (s[0] == 0 && s[1] == 0) out.push_back(m);
    }
    return out;
}

std::vector<Mask> vanishing_subsets_at(const std::vector<WeightForm>& forms, const Rational& l1, const Rational& l2)
{
    std::vector<Mask> out;
    for (Mask m = 0; m < full(forms); ++m) {
        const auto s = subset_sum(forms, m);
        if (s[0] * l1 + s[1] * l2 == 0) out.push_back(m);
    }
    return out;
}

bool same_vanishing_pattern(const std::vector<WeightForm>& forms, const Rational& l1, const Rational& l2)
{
    return vanishing_subsets(forms) == vanishing_subsets_at(forms, l1, l2);
}

std::vector<WeightForm> subset_weight_directions(const std::vector<WeightForm>& forms)
{
    std::set<std::pair<Rational, Rational>> seen;
    for (Mask m = 0; m < full(forms); ++m) {
        auto s = subset_sum(forms, m);
        if (s[0] == 0 && s[1] == 0) continue;
        if (s[0] < 0 || (s[0] == 0 && s[1] < 0)) {
            s[0] = -s[0];
            s[1] = -s[1];
        }
        seen.emplace(s[0], s[1]);
    }
    std::vector<WeightForm> out;
    for (const auto& [a, b] : seen) out.push_back({a, b});
    return out;
}

}  // namespace solvlat::ceh
