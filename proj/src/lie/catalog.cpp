#include "solvlat/lie/catalog.hpp"

#include <algorithm>
#include <stdexcept>

namespace solvlat::lie {

namespace {

using Terms = std::vector<std::pair<Rational, std::string>>;

LieAlgebra family(const std::string& name, const Rational& l1, const Rational& l2)
{
    const Rational l3 = -l1 - l2;
    LieAlgebra L({"A", "B", "X1", "X2", "X3", "Z1", "Z2", "Z3"}, name);
    L.set_bracket("X2", "X3", Terms{{2, "Z1"}});
    L.set_bracket("X1", "X3", Terms{{1, "Z2"}});
    L.set_bracket("X1", "X2", Terms{{-1, "Z3"}});
    L.set_bracket("A", "X1", Terms{{l1, "X1"}});
    L.set_bracket("A", "X2", Terms{{l2, "X2"}});
    L.set_bracket("A", "X3", Terms{{l3, "X3"}});
    L.set_bracket("A", "Z1", Terms{{l2 + l3, "Z1"}});
    L.set_bracket("A", "Z2", Terms{{l1 + l3, "Z2"}});
    L.set_bracket("A", "Z3", Terms{{l1 + l2, "Z3"}});
    return L;
}

}  // namespace

LieAlgebra example2() { return family("example2", -1, -2); }

LieAlgebra example3()
{
    LieAlgebra L({"A", "B", "X1", "Y1", "Z1", "X2", "Y2", "Z2"}, "example3");
    L.set_bracket("X1", "Y1", Terms{{1, "Z1"}});
    L.set_bracket("X2", "Y2", Terms{{1, "Z2"}});
    const std::vector<std::pair<std::string, long>> phi = {{"X1", 1},  {"Y1", -2}, {"Z1", -1},
                                                           {"X2", -1}, {"Y2", 2},  {"Z2", 1}};
    for (const auto& [label, w] : phi) L.set_bracket("A", label, Terms{{w, label}});
    return L;
}

LieAlgebra modified_family(const Rational& l1, const Rational& l2)
{
    if (l1 == 0 || l2 == 0 || l1 + l2 == 0)
        throw std::invalid_argument("modified_family: l1, l2 and l1 + l2 must all be nonzero");
    return family("modified:" + exact::to_string(l1) + "," + exact::to_string(l2), l1, l2);
}

bool is_squarefree(long q)
{
    if (q <= 0) return false;
    for (long p = 2; p * p <= q; ++p)
        if (q % (p * p) == 0) return false;
    return true;
}

LieAlgebra g65(long q)
{
    if (q < 0 || (q > 0 && !is_squarefree(q)))
        throw std::invalid_argument("g65: q must be 0 or a positive squarefree integer");
    LieAlgebra L({"X1", "X2", "X3", "X4", "X5", "X6"}, "g65:" + std::to_string(q));
    L.set_bracket("X1", "X3", Terms{{1, "X5"}});
    if (q == 0) {
        L.set_bracket("X2", "X4", Terms{{1, "X6"}});
        return L;
    }
    L.set_bracket("X2", "X4", Terms{{1, "X5"}});
    L.set_bracket("X1", "X4", Terms{{1, "X6"}});
    L.set_bracket("X2", "X3", Terms{{q, "X6"}});
    return L;
}

LieAlgebra heisenberg3()
{
    LieAlgebra L({"X", "Y", "Z"}, "heisenberg3");
    L.set_bracket("X", "Y", Terms{{1, "Z"}});
    return L;
}

LieAlgebra free2step(std::size_t k)
{
    if (k == 0) throw std::invalid_argument("free2step: need at least one generator");
    std::vector<std::string> labels;
    for (std::size_t i = 1; i <= k; ++i) labels.push_back("X" + std::to_string(i));
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 1; i <= k; ++i)
        for (std::size_t j = i + 1; j <= k; ++j) {
            labels.push_back("Z" + std::to_string(i) + std::to_string(j));
            pairs.emplace_back(i, j);
        }
    LieAlgebra L(labels, "free2step:" + std::to_string(k));
    for (const auto& [i, j] : pairs)
        L.set_bracket("X" + std::to_string(i), "X" + std::to_string(j),
                      Terms{{1, "Z" + std::to_string(i) + std::to_string(j)}});
    return L;
}

LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b)
{
    bool clash = false;
    for (const auto& l : a.labels())
        clash = clash || std::find(b.labels().begin(), b.labels().end(), l) != b.labels().end();
    std::vector<std::string> labels;
    for (const auto& l : a.labels()) labels.push_back(clash ? l + "1" : l);
    for (const auto& l : b.labels()) labels.push_back(clash ? l + "2" : l);
    const std::string name =
        a.name().empty() || b.name().empty() ? std::string() : a.name() + "+" + b.name();
    LieAlgebra L(labels, name);
    const std::size_t n = a.dim();
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = i + 1; j < a.dim(); ++j) {
            VectorQ v(L.dim(), 0);
            std::copy(a.bracket_basis(i, j).begin(), a.bracket_basis(i, j).end(), v.begin());
            L.set_bracket(i, j, v);
        }
    for (std::size_t i = 0; i < b.dim(); ++i)
        for (std::size_t j = i + 1; j < b.dim(); ++j) {
            VectorQ v(L.dim(), 0);
            std::copy(b.bracket_basis(i, j).begin(), b.bracket_basis(i, j).end(), v.begin() + n);
            L.set_bracket(n + i, n + j, v);
        }
    return L;
}

LieAlgebra abelian(std::size_t n)
{
    std::vector<std::string> labels;
    for (std::size_t i = 1; i <= n; ++i) labels.push_back("e" + std::to_string(i));
    return LieAlgebra(labels, "abelian:" + std::to_string(n));
}

LieAlgebra kodaira_thurston()
{
    LieAlgebra L({"X", "Y", "Z", "W"}, "kodaira-thurston");
    L.set_bracket("X", "Y", Terms{{1, "Z"}});
    return L;
}

}  // namespace solvlat::lie
