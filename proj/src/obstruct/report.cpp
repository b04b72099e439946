#include "solvlat/obstruct/report.hpp"

#include "solvlat/exact/roots.hpp"
#include "solvlat/lie/algebra.hpp"
#include "solvlat/lie/format.hpp"
#include "solvlat/obstruct/obstruct.hpp"
#include "solvlat/poly/groebner.hpp"
#include "solvlat/poly/parse.hpp"

#include <algorithm>
#include <stdexcept>

namespace solvlat::obstruct {

namespace {

using exact::UniPoly;
using poly::MultiPoly;

std::vector<std::string> strings(const Json& j) { return j.get<std::vector<std::string>>(); }

MultiPoly poly_at(const Json& data, const char* key)
{
    return poly::parse_polynomial(data.at(key).get<std::string>(), strings(data.at("variables")));
}

UniPoly univariate(const Json& data, const char* key)
{
    const std::string var = data.at("variable").get<std::string>();
    return poly::parse_polynomial(data.at(key).get<std::string>(), {var}).to_univariate(0);
}

std::vector<Rational> rationals(const Json& j)
{
    std::vector<Rational> out;
    for (const auto& s : j) out.push_back(exact::parse_rational(s.get<std::string>()));
    return out;
}

bool check_trace_condition(const Json& d)
{
    const auto p = trace_condition(d.at("exponents").get<std::vector<long>>(), d.at("parameter").get<std::string>(),
                                   d.at("variable").get<std::string>());
    return p == poly::parse_polynomial(d.at("polynomial").get<std::string>(), p.variables());
}

bool check_ideal_membership(const Json& d)
{
    const auto vars = strings(d.at("variables"));
    std::vector<MultiPoly> gens;
    for (const auto& g : d.at("generators")) gens.push_back(poly::parse_polynomial(g.get<std::string>(), vars));
    const MultiPoly member = poly_at(d, "member");
    if (d.contains("linear")) {
        const MultiPoly lin = poly_at(d, "linear");
        const MultiPoly cof = poly_at(d, "cofactor");
        if (!(cof * lin == member)) return false;
        const std::size_t v = member.index_of(d.at("linear_in").get<std::string>());
        if (lin.degree_in(v) != 1) return false;
        // the cofactor must be a monomial in the linear variable (nonzero for positive values)
        if (cof.size() != 1 || cof.support().size() > 1 || (cof.support().size() == 1 && cof.support()[0] != v))
            return false;
    }
    const auto order = poly::MonomialOrder::lex(vars.size());
    const auto gb = poly::buchberger(gens, order);
    return gb.contains(member);
}

bool check_natural_roots(const Json& d)
{
    std::vector<std::string> got;
    for (const auto& r : exact::natural_roots(univariate(d, "polynomial"))) got.push_back(r.get_str());
    return got == strings(d.at("roots"));
}

bool check_rational_roots(const Json& d)
{
    return exact::rational_roots(univariate(d, "polynomial")) == rationals(d.at("roots"));
}

bool check_monic_unit_constant(const Json& d)
{
    const MultiPoly f = poly_at(d, "polynomial");
    const std::size_t v = f.index_of(d.at("variable").get<std::string>());
    const int deg = f.degree_in(v);
    if (deg < 1) return false;
    const MultiPoly lead = f.coefficient_of(v, deg), tail = f.coefficient_of(v, 0);
    auto unit = [](const MultiPoly& c) { return c.is_constant() && abs(c.constant_term()) == 1; };
    // rational roots of a monic integer polynomial divide the constant: only +-1, of which 1 is positive
    return unit(lead) && unit(tail) && rationals(d.at("positive_candidates")) == std::vector<Rational>{1};
}

bool check_gcd(const Json& d)
{
    return exact::gcd(univariate(d, "f"), univariate(d, "g")).monic() == univariate(d, "gcd").monic();
}

bool check_positive_roots(const Json& d)
{
    const UniPoly p = univariate(d, "polynomial");
    if (p.is_zero()) return false;
    const auto roots = rationals(d.at("roots"));
    for (const auto& r : roots)
        if (r <= 0 || p.evaluate(r) != 0) return false;
    return sturm_count(p, 0, exact::root_bound(p) + 1) == static_cast<int>(roots.size());
}

bool check_pattern_mismatch(const Json& d)
{
    auto target = d.at("target").get<CharMultiset>();
    std::sort(target.begin(), target.end());
    return pattern_multiset(d.at("beta").get<long>(), d.at("alpha").get<long>()) != target;
}

bool check_subalgebra_pair(const Json& d)
{
    const auto L = lie::parse_algebra(d.at("algebra").get<std::string>());
    auto generated = [&](const char* key) {
        std::vector<VectorQ> gens;
        for (const auto& s : strings(d.at(key))) gens.push_back(L.unit(L.index_of(s)));
        return lie::subalgebra_generated(L, gens);
    };
    const auto a = generated("first"), b = generated("second");
    auto heisenberg = [&](const lie::Subspace& S) {
        return S.dim() == 3 && lie::is_ideal(L, S) && lie::bracket_span(L, S, S).dim() == 1;
    };
    const bool compatible =
        heisenberg(a) && heisenberg(b) && (a + b).dim() == L.dim() && a.intersect(b).dim() == 0;
    const auto dims = d.at("dims").get<std::vector<std::size_t>>();
    return dims == std::vector<std::size_t>{a.dim(), b.dim()} && compatible == d.at("compatible").get<bool>();
}

bool check_positive_coefficients(const Json& d)
{
    const MultiPoly p = poly_at(d, "polynomial");
    return !p.is_zero() && p.all_coefficients_positive();
}

bool check_lemma(const Json& d)
{
    if (d.at("id").get<std::string>() != "rational_plus_inverse") return false;
    return rational_plus_inverse_scan(d.at("limit").get<long>()) == std::vector<std::pair<long, long>>{{1, 1}};
}

Json node_to_json(const CaseNode& n)
{
    Json checks = Json::array();
    for (const auto& c : n.checks) checks.push_back({{"kind", c.kind}, {"data", c.data}, {"passed", c.passed}});
    Json children = Json::array();
    for (const auto& c : n.children) children.push_back(node_to_json(c));
    return {{"name", n.name},        {"constraints", n.constraints}, {"resolution", to_string(n.resolution)},
            {"checks", checks},      {"witness", n.witness},         {"children", children}};
}

CaseNode node_from_json(const Json& j)
{
    CaseNode n;
    n.name = j.at("name").get<std::string>();
    n.constraints = strings(j.at("constraints"));
    n.resolution = resolution_from_string(j.at("resolution").get<std::string>());
    for (const auto& c : j.at("checks"))
        n.checks.push_back({c.at("kind").get<std::string>(), c.at("data"), c.at("passed").get<bool>()});
    for (const auto& c : j.at("children")) n.children.push_back(node_from_json(c));
    if (j.contains("witness")) n.witness = j.at("witness");
    return n;
}

bool closed(const CaseNode& n)
{
    for (const auto& c : n.checks)
        if (!c.passed) return false;
    switch (n.resolution) {
    case Resolution::ForcesOne:
    case Resolution::StructurallyImpossible:
        return true;
    case Resolution::Subcases:
        return !n.children.empty() && std::all_of(n.children.begin(), n.children.end(), closed);
    case Resolution::Unresolved:
        return false;
    }
    return false;
}

std::string rerun(const CaseNode& n, const std::string& path)
{
    const std::string here = path.empty() ? n.name : path + " / " + n.name;
    for (const auto& c : n.checks) {
        bool ok = false;
        try {
            ok = run_check(c.kind, c.data);
        } catch (const std::exception& e) {
            return here + ": " + c.kind + " threw: " + e.what();
        }
        if (ok != c.passed) return here + ": " + c.kind + " recomputed as " + (ok ? "passed" : "failed");
    }
    for (const auto& child : n.children) {
        const std::string f = rerun(child, here);
        if (!f.empty()) return f;
    }
    return {};
}

}  // namespace

std::string to_string(Resolution r)
{
    switch (r) {
    case Resolution::ForcesOne: return "forces z=1";
    case Resolution::StructurallyImpossible: return "structurally impossible";
    case Resolution::Subcases: return "reduces to subcases";
    case Resolution::Unresolved: return "unresolved";
    }
    return "unresolved";
}

std::string to_string(Conclusion c) { return c == Conclusion::Obstructed ? "obstructed" : "inconclusive"; }

Resolution resolution_from_string(const std::string& s)
{
    for (auto r : {Resolution::ForcesOne, Resolution::StructurallyImpossible, Resolution::Subcases,
                   Resolution::Unresolved})
        if (to_string(r) == s) return r;
    throw std::invalid_argument("unknown resolution '" + s + "'");
}

Conclusion conclusion_from_string(const std::string& s)
{
    if (s == "obstructed") return Conclusion::Obstructed;
    if (s == "inconclusive") return Conclusion::Inconclusive;
    throw std::invalid_argument("unknown conclusion '" + s + "'");
}

Conclusion derive_conclusion(const std::vector<CaseNode>& cases)
{
    if (cases.empty()) return Conclusion::Inconclusive;
    return std::all_of(cases.begin(), cases.end(), closed) ? Conclusion::Obstructed : Conclusion::Inconclusive;
}

Json to_json(const ObstructionReport& r)
{
    Json assumptions = Json::array();
    for (const auto& a : r.assumptions) assumptions.push_back({{"id", a.id}, {"anchor", a.anchor}});
    Json cases = Json::array();
    for (const auto& c : r.cases) cases.push_back(node_to_json(c));
    return {{"example", r.example}, {"assumptions", assumptions}, {"cases", cases},
            {"conclusion", to_string(r.conclusion)}, {"extracted", r.extracted}};
}

ObstructionReport report_from_json(const Json& j)
{
    try {
        ObstructionReport r;
        r.example = j.at("example").get<std::string>();
        for (const auto& a : j.at("assumptions"))
            r.assumptions.push_back({a.at("id").get<std::string>(), a.at("anchor").get<std::string>()});
        for (const auto& c : j.at("cases")) r.cases.push_back(node_from_json(c));
        r.conclusion = conclusion_from_string(j.at("conclusion").get<std::string>());
        if (j.contains("extracted")) r.extracted = j.at("extracted");
        return r;
    } catch (const Json::exception& e) {
        throw std::invalid_argument(std::string("report schema: ") + e.what());
    }
}

bool run_check(const std::string& kind, const Json& data)
{
    if (kind == "trace_condition") return check_trace_condition(data);
    if (kind == "ideal_membership") return check_ideal_membership(data);
    if (kind == "natural_roots") return check_natural_roots(data);
    if (kind == "rational_roots") return check_rational_roots(data);
    if (kind == "monic_unit_constant") return check_monic_unit_constant(data);
    if (kind == "gcd") return check_gcd(data);
    if (kind == "positive_roots") return check_positive_roots(data);
    if (kind == "pattern_mismatch") return check_pattern_mismatch(data);
    if (kind == "subalgebra_pair") return check_subalgebra_pair(data);
    if (kind == "positive_coefficients") return check_positive_coefficients(data);
    if (kind == "lemma") return check_lemma(data);
    throw std::invalid_argument("unknown check kind '" + kind + "'");
}

VerifyOutcome verify_report(const Json& j)
{
    ObstructionReport r;
    try {
        r = report_from_json(j);
    } catch (const std::exception& e) {
        return {false, e.what()};
    }
    for (const auto& c : r.cases) {
        const std::string f = rerun(c, "");
        if (!f.empty()) return {false, f};
    }
    const Conclusion derived = derive_conclusion(r.cases);
    if (derived != r.conclusion)
        return {false, "stored conclusion " + to_string(r.conclusion) + " but checks give " + to_string(derived)};
    return {true, {}};
}

}  // namespace solvlat::obstruct
