#include "solvlat/obstruct/obstruct.hpp"

#include "solvlat/exact/roots.hpp"
#include "solvlat/lie/algebra.hpp"
#include "solvlat/lie/catalog.hpp"
#include "solvlat/lie/format.hpp"
#include "solvlat/poly/groebner.hpp"
#include "solvlat/poly/parse.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace solvlat::obstruct {

namespace {

using poly::MonomialOrder;

const std::vector<std::string> kX{"x", "m", "n"};

Check make_check(std::string kind, Json data)
{
    Check c{std::move(kind), std::move(data), false};
    c.passed = run_check(c.kind, c.data);
    return c;
}

MultiPoly embed(const MultiPoly& p, const std::vector<std::string>& vars)
{
    return poly::parse_polynomial(p.to_string(), vars);
}

std::string str(const MultiPoly& p) { return p.to_string(); }

Json membership(const std::vector<std::string>& vars, const std::vector<MultiPoly>& gens, const MultiPoly& member)
{
    Json g = Json::array();
    for (const auto& p : gens) g.push_back(str(p));
    return {{"variables", vars}, {"generators", g}, {"member", str(member)}};
}

/// Variable-power cofactor and the remaining factor of p.
std::pair<MultiPoly, MultiPoly> split_power(const MultiPoly& p, std::size_t var)
{
    int low = p.degree_in(var);
    for (const auto& [e, c] : p.terms()) low = std::min(low, e[var]);
    poly::Exponent e(p.nvars(), 0);
    e[var] = low;
    const MultiPoly cof = MultiPoly::monomial(p.variables(), e, 1);
    return {cof, poly::divide_exact(p, cof)};
}

Check unit_constant_check(const MultiPoly& f)
{
    return make_check("monic_unit_constant",
                      {{"variables", f.variables()}, {"variable", f.variables()[0]}, {"polynomial", str(f)},
                       {"positive_candidates", {"1"}}});
}

/// Rational z with z + 1/z an integer, then z = 1.
void close_by_rational_trace(CaseNode& node, const std::string& var)
{
    const MultiPoly center = trace_condition({1, -1}, "n", var);
    node.checks.push_back(make_check("trace_condition", {{"exponents", {1, -1}},
                                                         {"parameter", "n"},
                                                         {"variable", var},
                                                         {"polynomial", str(center)}}));
    node.checks.push_back(make_check("lemma", {{"id", "rational_plus_inverse"}, {"limit", 50}}));
    node.constraints.push_back(str(center));
}

}  // namespace

CharMultiset char_multiset(const VectorQ& weights)
{
    CharMultiset out;
    for (const auto& w : weights) {
        if (!exact::is_integer(w)) throw std::domain_error("char_multiset: non-integer weight " + exact::to_string(w));
        out.push_back(w.get_num().get_si());
    }
    std::sort(out.begin(), out.end());
    return out;
}

MultiPoly trace_condition(const std::vector<long>& exponents, const std::string& parameter, const std::string& variable)
{
    if (exponents.empty()) throw std::invalid_argument("trace_condition: empty exponent set");
    const std::vector<std::string> vars{variable, parameter};
    const long shift = std::max(0L, -*std::min_element(exponents.begin(), exponents.end()));
    MultiPoly p(vars);
    for (long a : exponents) p += MultiPoly::monomial(vars, {static_cast<int>(a + shift), 0}, 1);
    p -= MultiPoly::monomial(vars, {static_cast<int>(shift), 1}, 1);
    return p;
}

CharMultiset pattern_multiset(long beta, long alpha)
{
    CharMultiset out{beta, beta, alpha, alpha, alpha + beta, alpha + beta};
    std::sort(out.begin(), out.end());
    return out;
}

std::optional<std::pair<long, long>> match_pattern(const CharMultiset& target)
{
    CharMultiset sorted = target;
    std::sort(sorted.begin(), sorted.end());
    const std::set<long> values(sorted.begin(), sorted.end());
    for (long b : values)
        for (long a : values)
            if (pattern_multiset(b, a) == sorted) return std::pair{b, a};
    return std::nullopt;
}

bool rational_plus_inverse_integer_forces_one(const Rational& z, const Integer& n)
{
    if (z <= 0) throw std::domain_error("rational_plus_inverse: z must be positive");
    if (z + 1 / z != Rational(n)) throw std::invalid_argument("rational_plus_inverse: z + 1/z differs from n");
    // a/b + b/a = (a^2 + b^2)/(ab) with gcd(a, b) = 1: a | b^2 and b | a^2 force a = b = 1
    const Integer a = z.get_num(), b = z.get_den();
    return a == 1 && b == 1;
}

std::vector<std::pair<long, long>> rational_plus_inverse_scan(long limit)
{
    std::vector<std::pair<long, long>> out;
    for (long a = 1; a <= limit; ++a)
        for (long b = 1; b <= limit; ++b)
            if (std::gcd(a, b) == 1 && (a * a + b * b) % (a * b) == 0) out.emplace_back(a, b);
    return out;
}

std::vector<Assumption> standard_assumptions()
{
    return {
        {"z_not_one", "z = exp(t0) with t0 != 0"},
        {"semisimple_part", "eigenvalues and traces are read from the semisimple part C of C*J"},
        {"nilradical_lattice", "a lattice meets the nilradical N in a lattice, giving Z +_psi (Gamma cap N)"},
        {"integer_traces", "invariant subspaces spanned by lattice vectors carry integer matrices, hence integer traces"},
        {"positive_parameters", "each trace is a sum of positive reals, so trace parameters are positive integers"},
    };
}

std::pair<MultiPoly, MultiPoly> example2_system()
{
    const auto L = lie::example2();
    const auto w = lie::weight_system(L, L.index_of("A"));
    if (!w) throw std::logic_error("example2: ad A is not diagonal");
    std::vector<long> v, wedge;
    for (const char* s : {"X1", "X2", "X3"}) v.push_back(w->weights[L.index_of(s)].get_num().get_si());
    for (const char* s : {"Z1", "Z2", "Z3"}) wedge.push_back(w->weights[L.index_of(s)].get_num().get_si());
    return {embed(trace_condition(v, "m", "x"), kX), embed(trace_condition(wedge, "n", "x"), kX)};
}

ObstructionReport example2_pipeline(const MultiPoly& f0, const MultiPoly& g0)
{
    const MultiPoly f = embed(f0, kX), g = embed(g0, kX);
    ObstructionReport r;
    r.example = "2";
    r.assumptions = standard_assumptions();

    const auto gb = poly::buchberger({f, g}, MonomialOrder::lex(3));
    CaseNode root;
    root.name = "trace system";
    root.constraints = {str(f), str(g)};
    Json basis = Json::array();
    for (const auto& p : gb.generators) basis.push_back(str(p));
    root.witness["groebner_basis"] = basis;

    const std::size_t x = 0, m = 1, n = 2;
    const MultiPoly* g1 = nullptr;
    const MultiPoly* g2 = nullptr;
    for (const auto& p : gb.generators) {
        if (p.degree_in(x) != 1) continue;
        const auto c = p.coefficient_of(x, 1);
        if (c.is_constant()) continue;
        if (!c.uses_variable(m) && !g1) g1 = &p;
        if (c.uses_variable(m) && !g2) g2 = &p;
    }
    if (!g1) {
        root.resolution = Resolution::Unresolved;
        root.witness["note"] = "no basis element linear in x with an x-coefficient in n alone";
        r.cases.push_back(std::move(root));
        r.conclusion = derive_conclusion(r.cases);
        return r;
    }
    root.resolution = Resolution::Subcases;

    const MultiPoly cn = g1->coefficient_of(x, 1);
    r.extracted["c(n)"] = str(cn);

    CaseNode nonzero;
    nonzero.name = "c(n) != 0: x rational";
    nonzero.constraints = {str(*g1)};
    nonzero.checks.push_back(make_check("ideal_membership", membership(kX, {f, g}, *g1)));
    nonzero.checks.push_back(unit_constant_check(f));
    nonzero.resolution = Resolution::ForcesOne;
    nonzero.witness["x"] = "1";
    root.children.push_back(std::move(nonzero));

    CaseNode zero;
    zero.name = "c(n) = 0";
    zero.constraints = {str(cn)};
    const auto nroots = exact::natural_roots(cn.to_univariate(n));
    Json nlist = Json::array();
    for (const auto& v : nroots) nlist.push_back(v.get_str());
    zero.checks.push_back(
        make_check("natural_roots", {{"variable", "n"}, {"polynomial", str(cn)}, {"roots", nlist}}));
    zero.resolution = nroots.empty() ? Resolution::StructurallyImpossible : Resolution::Subcases;
    if (!nroots.empty()) r.extracted["n"] = nlist;

    for (const auto& nv : nroots) {
        CaseNode atn;
        atn.name = "n = " + nv.get_str();
        atn.witness["n"] = nv.get_str();
        if (!g2) {
            atn.resolution = Resolution::Unresolved;
            atn.witness["note"] = "no basis element linear in x involving m";
            zero.children.push_back(std::move(atn));
            continue;
        }
        atn.resolution = Resolution::Subcases;
        const MultiPoly g2n = g2->substitute(n, Rational(nv));
        const MultiPoly em = g2n.coefficient_of(x, 1);
        atn.constraints = {str(g2n)};

        CaseNode enz;
        enz.name = "x-coefficient " + str(em) + " != 0: x rational";
        enz.constraints = {str(*g2)};
        enz.checks.push_back(make_check("ideal_membership", membership(kX, {f, g}, *g2)));
        enz.checks.push_back(unit_constant_check(f));
        enz.resolution = Resolution::ForcesOne;
        enz.witness["x"] = "1";
        atn.children.push_back(std::move(enz));

        CaseNode ez;
        ez.name = str(em) + " = 0";
        ez.constraints = {str(em)};
        std::vector<Rational> mroots;
        if (em.is_constant()) {
            ez.resolution = Resolution::StructurallyImpossible;
        } else {
            mroots = exact::rational_roots(em.to_univariate(m));
            Json ml = Json::array();
            for (const auto& v : mroots) ml.push_back(exact::to_string(v));
            ez.checks.push_back(
                make_check("rational_roots", {{"variable", "m"}, {"polynomial", str(em)}, {"roots", ml}}));
            ez.resolution = mroots.empty() ? Resolution::StructurallyImpossible : Resolution::Subcases;
            ez.witness["m"] = ml;
            r.extracted["m"] = ml;
        }
        for (const auto& mv : mroots) {
            CaseNode leaf;
            leaf.name = "m = " + exact::to_string(mv) + ", n = " + nv.get_str();
            if (!exact::is_integer(mv)) {
                leaf.resolution = Resolution::StructurallyImpossible;
                leaf.witness["note"] = "m is an integer trace";
                ez.children.push_back(std::move(leaf));
                continue;
            }
            const auto fu = f.substitute(m, mv).substitute(n, Rational(nv)).to_univariate(x);
            const auto gu = g.substitute(m, mv).substitute(n, Rational(nv)).to_univariate(x);
            const auto d = exact::gcd(fu, gu).monic();
            leaf.constraints = {fu.to_string("x"), gu.to_string("x")};
            leaf.checks.push_back(make_check(
                "gcd", {{"variable", "x"}, {"f", fu.to_string("x")}, {"g", gu.to_string("x")}, {"gcd", d.to_string("x")}}));
            Json pos = Json::array();
            for (const auto& root_value : exact::rational_roots(d))
                if (root_value > 0) pos.push_back(exact::to_string(root_value));
            leaf.checks.push_back(
                make_check("positive_roots", {{"variable", "x"}, {"polynomial", d.to_string("x")}, {"roots", pos}}));
            leaf.witness["gcd"] = d.to_string("x");
            leaf.witness["positive_roots"] = pos;
            leaf.resolution = pos == Json::array({"1"}) ? Resolution::ForcesOne : Resolution::Unresolved;
            if (leaf.resolution == Resolution::ForcesOne) r.extracted["z"] = "1";
            ez.children.push_back(std::move(leaf));
        }
        atn.children.push_back(std::move(ez));
        zero.children.push_back(std::move(atn));
    }
    root.children.push_back(std::move(zero));
    r.cases.push_back(std::move(root));
    r.conclusion = derive_conclusion(r.cases);
    return r;
}

ObstructionReport example2_obstruction()
{
    const auto [f, g] = example2_system();
    ObstructionReport r = example2_pipeline(f, g);
    const auto L = lie::example2();
    const auto w = lie::weight_system(L, L.index_of("A"));
    auto& root = r.cases.front();
    const std::vector<std::pair<std::vector<const char*>, std::string>> parts{{{"X1", "X2", "X3"}, "m"},
                                                                              {{"Z1", "Z2", "Z3"}, "n"}};
    for (const auto& [labels, param] : parts) {
        std::vector<long> e;
        for (const char* s : labels) e.push_back(w->weights[L.index_of(s)].get_num().get_si());
        root.checks.insert(root.checks.begin(), make_check("trace_condition", {{"exponents", e},
                                                                                {"parameter", param},
                                                                                {"variable", "x"},
                                                                                {"polynomial", str(trace_condition(e, param, "x"))}}));
    }
    r.conclusion = derive_conclusion(r.cases);
    return r;
}

namespace {

/// Exponents of the nilradical basis of example3 under ad A.
std::map<std::string, long> example3_exponents()
{
    const auto L = lie::example3();
    const auto w = lie::weight_system(L, L.index_of("A"));
    if (!w) throw std::logic_error("example3: ad A is not diagonal");
    std::map<std::string, long> out;
    for (const char* s : {"X1", "Y1", "Z1", "X2", "Y2", "Z2"})
        out[s] = w->weights[L.index_of(s)].get_num().get_si();
    return out;
}

std::string power_label(long a)
{
    if (a == 0) return "1";
    const std::string mag = std::abs(a) == 1 ? "z" : "z^" + std::to_string(std::abs(a));
    return a > 0 ? mag : "1/" + mag;
}

}  // namespace

ObstructionReport example3_qpos_obstruction()
{
    ObstructionReport r;
    r.example = "3";
    r.assumptions = standard_assumptions();
    const auto exps = example3_exponents();
    CharMultiset target;
    for (const auto& [label, a] : exps) target.push_back(a);
    std::sort(target.begin(), target.end());
    r.extracted["char_multiset"] = target;

    CaseNode root;
    root.name = "q > 0: pattern {b,b,a,a,ab,ab}";
    root.resolution = Resolution::Subcases;
    const std::set<long> values(target.begin(), target.end());
    std::set<long> side_cases;
    std::size_t failed = 0;
    for (long b : values)
        for (long a : values) {
            CaseNode node;
            node.name = "beta = " + power_label(b) + ", alpha = " + power_label(a);
            node.resolution = Resolution::Subcases;
            CaseNode formal;
            formal.name = "formal exponents";
            formal.checks.push_back(make_check("pattern_mismatch", {{"target", target}, {"beta", b}, {"alpha", a}}));
            formal.resolution =
                formal.checks.back().passed ? Resolution::StructurallyImpossible : Resolution::Unresolved;
            if (formal.checks.back().passed) ++failed;
            node.children.push_back(std::move(formal));
            // an equality z^u = z^v between a pattern value and a target value needs z^|u-v| = 1
            std::set<long> ds;
            for (long u : pattern_multiset(b, a))
                for (long v : values)
                    if (u != v) ds.insert(std::abs(u - v));
            for (long d : ds) {
                side_cases.insert(d);
                CaseNode side;
                side.name = "coincidence z^" + std::to_string(d) + " = 1";
                const std::string p = "z^" + std::to_string(d) + " - 1";
                side.constraints = {p};
                side.checks.push_back(
                    make_check("positive_roots", {{"variable", "z"}, {"polynomial", p}, {"roots", {"1"}}}));
                side.resolution = Resolution::ForcesOne;
                node.children.push_back(std::move(side));
            }
            root.children.push_back(std::move(node));
        }
    r.extracted["assignments"] = root.children.size();
    r.extracted["assignments_failed"] = failed;
    r.extracted["side_cases"] = std::vector<long>(side_cases.begin(), side_cases.end());
    r.cases.push_back(std::move(root));
    r.conclusion = derive_conclusion(r.cases);
    return r;
}

ObstructionReport example3_q0_obstruction()
{
    ObstructionReport r;
    r.example = "3";
    r.assumptions = standard_assumptions();
    r.assumptions.push_back({"factor_swap", "an automorphism exchanging the two factors is handled by gamma^2"});

    const auto L = lie::example3();
    std::vector<VectorQ> nil;
    const std::vector<std::string> nil_labels{"X1", "Y1", "Z1", "X2", "Y2", "Z2"};
    for (const auto& s : nil_labels) nil.push_back(L.unit(L.index_of(s)));
    const std::string algebra_text = lie::dump_algebra(lie::restrict_to(L, nil, nil_labels));

    const auto exps = example3_exponents();
    std::map<long, std::string> line;  // exponent -> eigenline label, off the center
    for (const char* s : {"X1", "Y1", "X2", "Y2"}) line[exps.at(s)] = s;
    const std::vector<std::pair<std::vector<long>, std::vector<long>>> pairings{
        {{1, -1}, {2, -2}}, {{1, 2}, {-1, -2}}, {{1, -2}, {-1, 2}}};

    Json summary = Json::array();
    for (int g : {1, 2}) {
        CaseNode top;
        top.name = g == 1 ? "gamma" : "gamma^2";
        top.resolution = Resolution::Subcases;
        const std::string var = g == 1 ? "z" : "w";
        const std::vector<std::string> vars{var, "k", "l"};
        if (g != 1) top.witness["substitution"] = "w = z^" + std::to_string(g);

        for (const auto& [first, second] : pairings) {
            CaseNode node;
            auto name_of = [&](const std::vector<long>& e) {
                std::string s = "{";
                for (std::size_t i = 0; i < e.size(); ++i) s += (i ? "," : "") + power_label(g * e[i]);
                return s + "}";
            };
            node.name = "pairing " + name_of(first) + " | " + name_of(second);

            std::vector<std::string> la, lb;
            for (long e : first) la.push_back(line.at(e));
            for (long e : second) lb.push_back(line.at(e));
            Json sub{{"algebra", algebra_text}, {"first", la}, {"second", lb}};
            {
                const auto A = lie::parse_algebra(algebra_text);
                auto gen = [&](const std::vector<std::string>& ls) {
                    std::vector<VectorQ> v;
                    for (const auto& s : ls) v.push_back(A.unit(A.index_of(s)));
                    return lie::subalgebra_generated(A, v);
                };
                const auto sa = gen(la), sb = gen(lb);
                auto heis = [&](const lie::Subspace& S) {
                    return S.dim() == 3 && lie::is_ideal(A, S) && lie::bracket_span(A, S, S).dim() == 1;
                };
                sub["dims"] = {sa.dim(), sb.dim()};
                sub["compatible"] =
                    heis(sa) && heis(sb) && (sa + sb).dim() == A.dim() && sa.intersect(sb).dim() == 0;
            }
            const bool compatible = sub["compatible"].get<bool>();
            node.checks.push_back(make_check("subalgebra_pair", sub));
            node.witness["bracket_compatible"] = compatible;

            const MultiPoly t1 = embed(trace_condition(first, "k", var), vars);
            const MultiPoly t2 = embed(trace_condition(second, "l", var), vars);
            node.constraints = {str(t1), str(t2)};
            node.checks.push_back(make_check(
                "trace_condition",
                {{"exponents", first}, {"parameter", "k"}, {"variable", var}, {"polynomial", str(trace_condition(first, "k", var))}}));
            node.checks.push_back(make_check(
                "trace_condition",
                {{"exponents", second}, {"parameter", "l"}, {"variable", var}, {"polynomial", str(trace_condition(second, "l", var))}}));

            const auto gb = poly::buchberger({t1, t2}, MonomialOrder::lex(3));
            std::optional<std::pair<MultiPoly, MultiPoly>> linear;
            const MultiPoly* member = nullptr;
            for (const auto& p : gb.generators) {
                if (p.degree_in(0) < 1) continue;
                auto split = split_power(p, 0);
                if (split.second.degree_in(0) == 1) {
                    linear = split;
                    member = &p;
                    break;
                }
            }

            if (linear) {
                const auto& [cof, lin] = *linear;
                Json data = membership(vars, {t1, t2}, *member);
                data["cofactor"] = str(cof);
                data["linear"] = str(lin);
                data["linear_in"] = var;
                node.checks.push_back(make_check("ideal_membership", data));
                MultiPoly lead = lin.coefficient_of(0, 1);
                if (!lead.all_coefficients_positive()) lead = -lead;
                node.checks.push_back(make_check("positive_coefficients", {{"variables", vars}, {"polynomial", str(lead)}}));
                const MultiPoly num = -lin.coefficient_of(0, 0);
                const MultiPoly den = lin.coefficient_of(0, 1);
                node.witness["rational_value"] = "(" + str(num) + ")/(" + str(den) + ")";
                node.constraints.push_back(str(lin));
                close_by_rational_trace(node, var);
                if (g != 1) {
                    const std::string p = "z^" + std::to_string(g) + " - 1";
                    node.constraints.push_back(p);
                    node.checks.push_back(
                        make_check("positive_roots", {{"variable", "z"}, {"polynomial", p}, {"roots", {"1"}}}));
                }
                node.resolution = Resolution::ForcesOne;
                node.witness["killed_by"] = "trace";
            } else if (!compatible) {
                node.resolution = Resolution::StructurallyImpossible;
                node.witness["killed_by"] = "bracket";
            } else {
                node.resolution = Resolution::Unresolved;
            }
            summary.push_back({{"rerun", top.name}, {"pairing", node.name}, {"killed_by", node.witness.value("killed_by", "none")},
                               {"bracket_compatible", compatible}});
            top.children.push_back(std::move(node));
        }
        r.cases.push_back(std::move(top));
    }
    r.extracted["pairings"] = summary;
    r.conclusion = derive_conclusion(r.cases);
    return r;
}

}  // namespace solvlat::obstruct
