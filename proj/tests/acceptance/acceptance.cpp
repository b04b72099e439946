#include "solvlat/ceh/cohomology.hpp"
#include "solvlat/cli/cli.hpp"
#include "solvlat/exact/roots.hpp"
#include "solvlat/lattice/lattice.hpp"
#include "solvlat/lie/catalog.hpp"
#include "solvlat/obstruct/obstruct.hpp"
#include "solvlat/poly/groebner.hpp"
#include "solvlat/poly/parse.hpp"

#include "../support/seed.hpp"
#include "../support/transcribed_basis.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>

using namespace solvlat;
namespace st = solvlat::testing;

namespace {

using Clock = std::chrono::steady_clock;

struct Verdict {
    bool pass = true;
    std::vector<std::string> notes;

    void require(bool ok, const std::string& what)
    {
        if (!ok) {
            pass = false;
            notes.push_back("failed: " + what);
        }
    }
    void note(const std::string& s) { notes.push_back(s); }
};

std::string join(const std::vector<std::size_t>& v)
{
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + ")";
}

std::map<std::string, std::vector<std::size_t>> oracle_betti()
{
    std::ifstream in(std::string(SOLVLAT_GOLDEN_DIR) + "/betti.txt");
    std::map<std::string, std::vector<std::size_t>> out;
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string name;
        ls >> name;
        std::size_t b;
        while (ls >> b) out[name].push_back(b);
    }
    return out;
}

long golden_commutator_index()
{
    std::ifstream in(std::string(SOLVLAT_GOLDEN_DIR) + "/commutator_index.txt");
    std::string word;
    while (in >> word)
        if (word == "central_index") {
            long v = -1;
            in >> v;
            return v;
        }
    return -1;
}

std::vector<std::size_t> convolve(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b)
{
    std::vector<std::size_t> c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    return c;
}

Verdict criterion1()
{
    Verdict v;
    const std::vector<std::pair<std::string, lie::LieAlgebra>> algebras = {
        {"example2", lie::example2()},
        {"example3", lie::example3()},
        {"modified(-1,-2)", lie::modified_family(-1, -2)},
        {"g65(0)", lie::g65(0)},
        {"g65(2)", lie::g65(2)},
    };
    for (const auto& [name, L] : algebras) {
        const auto r = lie::validate(L);
        v.require(r.ok(), name + (r.ok() ? "" : ": " + r.message(L)));
    }
    v.note(std::to_string(algebras.size()) + " algebras valid");
    return v;
}

Verdict criterion2()
{
    Verdict v;
    const auto b = ceh::betti(lie::example2());
    const std::vector<std::size_t> expected = {1, 2, 2, 2, 2, 2, 2, 2, 1};
    const auto kunneth = convolve({1, 2, 1}, {1, 0, 1, 0, 1, 0, 1});
    const auto oracle = oracle_betti();
    v.require(kunneth == expected, "Kunneth vector " + join(kunneth));
    v.require(b == expected, "betti(example2) = " + join(b) + ", expected " + join(expected));
    v.require(oracle.count("example2") && oracle.at("example2") == b,
              "independent oracle agrees with the computed vector");
    v.note("oracle example2 " + (oracle.count("example2") ? join(oracle.at("example2")) : std::string("missing")));
    for (std::size_t k = 0; k < b.size(); ++k) v.require(b[k] == b[b.size() - 1 - k], "Poincare duality at " + std::to_string(k));
    const auto h = ceh::betti(lie::heisenberg3());
    v.require(h == std::vector<std::size_t>{1, 2, 2, 1}, "betti(heisenberg3) = " + join(h));
    return v;
}

Verdict criterion3()
{
    Verdict v;
    const auto L = lie::example2();
    const auto omega = ceh::parse_two_form(L, cli::kDefaultOmega);
    const auto sc = ceh::symplectic_check(L, omega);
    v.require(sc.closed && sc.nondegenerate, "omega symplectic on example2");
    const auto hl = ceh::hard_lefschetz(L, omega);
    v.require(hl.holds && hl.ranks.size() == 4, "hard Lefschetz on example2, ranks " + join(hl.ranks));
    for (const auto& [l1, l2] : std::vector<std::pair<long, long>>{{-1, -2}, {1, -4}, {2, -5}}) {
        const auto M = lie::modified_family(l1, l2);
        const auto r = ceh::hard_lefschetz(M, ceh::parse_two_form(M, cli::kDefaultOmega));
        v.require(r.holds, "hard Lefschetz on modified(" + std::to_string(l1) + "," + std::to_string(l2) + ")");
    }
    const auto K = lie::kodaira_thurston();
    const auto kt = ceh::hard_lefschetz(K, ceh::parse_two_form(K, "X^W + Y^Z"));
    v.require(!kt.holds && kt.failing_degree == std::size_t{1}, "Kodaira-Thurston fails at k = 1");
    v.note("example2 ranks " + join(hl.ranks) + ", Kodaira-Thurston ranks " + join(kt.ranks));
    return v;
}

Verdict criterion4()
{
    Verdict v;
    const auto r = obstruct::example2_obstruction();
    v.require(r.conclusion == obstruct::Conclusion::Obstructed, "conclusion obstructed");
    v.require(r.extracted.value("n", obstruct::Json()) == obstruct::Json::array({"3"}), "n = 3");
    v.require(r.extracted.value("m", obstruct::Json()) == obstruct::Json::array({"3"}), "m = 3");
    v.require(r.extracted.value("z", obstruct::Json()) == "1", "z = 1");

    const auto c = poly::parse_polynomial(r.extracted.at("c(n)").get<std::string>(), {"n"});
    const auto reference = poly::parse_polynomial("12*n + 8*n^2 + 23*n^3 + 9*n^4 + 12*n^5 + n^7 - n^8", {"n"});
    v.require(c == reference || c == -reference, "c(n) matches the reference polynomial up to sign");
    const auto roots = exact::natural_roots(reference.to_univariate(0));
    v.require(roots.size() == 1 && roots[0] == 3, "3 is the unique natural root of c(n)");
    v.require(obstruct::verify_report(obstruct::to_json(r)).ok, "report re-verifies from JSON");

    const std::vector<std::string> vars = {"x", "m", "n"};
    const auto [f, g] = obstruct::example2_system();
    const auto lex = poly::MonomialOrder::lex(3);
    const auto gb = poly::buchberger({f, g}, lex);
    std::size_t zero = 0;
    for (std::size_t i = 0; i < st::kTranscribedBasis.size(); ++i) {
        const auto p = poly::parse_polynomial(st::kTranscribedBasis[i], vars);
        if (poly::normal_form(p, gb.generators, lex).is_zero())
            ++zero;
        else
            v.require(false, "transcribed generator " + std::to_string(i + 1) + " has nonzero normal form");
    }
    v.note("transcribed generators reducing to 0: " + std::to_string(zero) + "/" +
           std::to_string(st::kTranscribedBasis.size()));
    return v;
}

Verdict criterion5()
{
    Verdict v;
    const auto pos = obstruct::example3_qpos_obstruction();
    v.require(pos.conclusion == obstruct::Conclusion::Obstructed, "q > 0 obstructed");
    v.require(pos.extracted.value("assignments", 0) == 16 && pos.extracted.value("assignments_failed", 0) == 16,
              "16 of 16 assignments fail");
    std::function<void(const obstruct::CaseNode&)> leaves = [&](const obstruct::CaseNode& n) {
        if (n.children.empty())
            v.require(n.resolution == obstruct::Resolution::ForcesOne ||
                          n.resolution == obstruct::Resolution::StructurallyImpossible,
                      "q > 0 leaf closed: " + n.name);
        for (const auto& c : n.children) leaves(c);
    };
    for (const auto& c : pos.cases) leaves(c);
    std::size_t side_cases = 0;
    std::function<void(const obstruct::CaseNode&)> side = [&](const obstruct::CaseNode& n) {
        if (n.name.rfind("coincidence", 0) == 0) {
            ++side_cases;
            v.require(n.resolution == obstruct::Resolution::ForcesOne, "side case forces z = 1: " + n.name);
        }
        for (const auto& k : n.children) side(k);
    };
    for (const auto& c : pos.cases) side(c);
    v.require(side_cases > 0, "coincidence side cases present");
    v.note(std::to_string(side_cases) + " coincidence side cases");

    const auto zero = obstruct::example3_q0_obstruction();
    v.require(zero.conclusion == obstruct::Conclusion::Obstructed, "q = 0 obstructed");
    v.require(zero.cases.size() == 2, "reruns for gamma and gamma^2");
    for (const auto& rerun : zero.cases) {
        std::size_t by_trace = 0, by_bracket = 0;
        for (const auto& p : rerun.children) {
            by_trace += p.witness.value("killed_by", "") == "trace";
            by_bracket += p.witness.value("killed_by", "") == "bracket";
        }
        v.require(rerun.children.size() == 3 && by_trace == 2 && by_bracket == 1,
                  rerun.name + ": two pairings fail by trace, one by bracket");
    }
    v.require(obstruct::verify_report(obstruct::to_json(pos)).ok && obstruct::verify_report(obstruct::to_json(zero)).ok,
              "reports re-verify from JSON");
    return v;
}

Verdict criterion6()
{
    Verdict v;
    const lattice::CubicSpec spec{5, 6};
    const auto cert = lattice::build_lattice(spec);
    const auto res = lattice::verify_certificate(cert);
    v.require(res.ok, "certificate verifies" + (res.ok ? "" : " (" + res.failing_check + ")"));
    const double reference[3] = {0.198, 1.555, 3.247};
    for (int i = 0; i < 3; ++i) {
        const double lo = cert.roots[i].lo.get_d(), hi = cert.roots[i].hi.get_d();
        v.require(std::abs(lo - reference[i]) < 1e-3 && std::abs(hi - reference[i]) < 1e-3,
                  "root " + std::to_string(i + 1) + " within 1e-3");
    }
    v.require(exact::determinant(cert.c) == 1 && exact::determinant(cert.c2) == 1, "det C = det C2 = 1");
    v.require(exact::charpoly(cert.c) == exact::UniPoly{-1, 6, -5, 1}, "charpoly C = x^3 - 5x^2 + 6x - 1");
    v.require(exact::charpoly(cert.c2) == exact::UniPoly{-1, 5, -6, 1}, "charpoly C2 = x^3 - 6x^2 + 5x - 1");
    v.require(cert.closure.size() == 144, "closure on all 12 x 12 generator pairs");
    const long golden = golden_commutator_index();
    v.require(golden > 0 && cert.commutator_index == golden, "commutator index matches the brute-force oracle");
    v.note("commutator index " + cert.commutator_index.get_str() + ", oracle " + std::to_string(golden));
    return v;
}

Verdict criterion7()
{
    Verdict v;
    const auto [f, g] = obstruct::example2_system();
    const auto lex = poly::MonomialOrder::lex(3);
    const auto gb = poly::buchberger({f, g}, lex);
    v.require(poly::buchberger(gb.generators, lex).generators == gb.generators, "reduced basis idempotent");
    v.require(poly::buchberger({g, f}, lex).generators == gb.generators, "input order invariant");
    v.require(poly::buchberger({g, f, f + g}, lex).generators == gb.generators, "redundant input invariant");

    auto rng = st::make_rng(7);
    const std::vector<std::string> vars = {"x", "y", "z"};
    auto random_poly = [&](int terms, int maxdeg) {
        poly::MultiPoly p(vars);
        for (int k = 0; k < terms; ++k) {
            poly::Exponent e(3);
            for (auto& x : e) x = int(st::uniform(rng, 0, maxdeg));
            p += poly::MultiPoly::monomial(vars, e, exact::Rational(st::uniform(rng, -4, 4)));
        }
        return p;
    };
    int ideals = 0, failures = 0;
    while (ideals < 50) {
        std::vector<poly::MultiPoly> gens;
        const int ngens = int(st::uniform(rng, 1, 3));
        for (int i = 0; i < ngens; ++i) gens.push_back(random_poly(3, 2));
        if (std::any_of(gens.begin(), gens.end(), [](const poly::MultiPoly& p) { return p.is_zero(); })) continue;
        const auto order = ideals % 2 ? poly::MonomialOrder::grevlex(3) : poly::MonomialOrder::lex(3);
        const auto basis = poly::buchberger(gens, order);
        poly::MultiPoly h(vars);
        for (const auto& p : gens) h += random_poly(2, 2) * p;
        if (!poly::normal_form(h, basis.generators, order).is_zero()) ++failures;
        ++ideals;
    }
    v.require(failures == 0, std::to_string(failures) + " random ideals with nonzero normal form");

    int compound_failures = 0;
    for (int t = 0; t < 100; ++t) {
        exact::MatrixZ a(3, 3), b(3, 3);
        for (int r = 0; r < 3; ++r)
            for (int c = 0; c < 3; ++c) {
                a(r, c) = st::uniform(rng, -5, 5);
                b(r, c) = st::uniform(rng, -5, 5);
            }
        if (lattice::compound2(a * b) != lattice::compound2(a) * lattice::compound2(b)) ++compound_failures;
    }
    v.require(compound_failures == 0, "compound2 functorial on 100 pairs");
    v.require(obstruct::rational_plus_inverse_scan(50) == std::vector<std::pair<long, long>>{{1, 1}},
              "z + 1/z integral only at z = 1 for a, b <= 50");
    return v;
}

}  // namespace

int main()
{
    struct Criterion {
        int id;
        std::string title;
        double limit_seconds;
        std::function<Verdict()> run;
    };
    const std::vector<Criterion> criteria = {
        {1, "structure constants validate", 1, criterion1},
        {2, "Betti numbers of example2 and heisenberg3", 10, criterion2},
        {3, "symplectic form and hard Lefschetz", 0, criterion3},
        {4, "example2 obstruction", 30, criterion4},
        {5, "example3 obstruction", 5, criterion5},
        {6, "lattice for x^3 - 5x^2 + 6x - 1", 0, criterion6},
        {7, "engine properties", 0, criterion7},
    };

    int failed = 0;
    for (const auto& c : criteria) {
        const auto start = Clock::now();
        Verdict v;
        try {
            v = c.run();
        } catch (const std::exception& e) {
            v.require(false, std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(Clock::now() - start).count();
        if (c.limit_seconds > 0) v.require(secs < c.limit_seconds, "runtime limit " + std::to_string(c.limit_seconds) + " s");
        if (!v.pass) ++failed;
        std::ostringstream time;
        time.precision(3);
        time << std::fixed << secs;
        std::cout << "criterion " << c.id << ": " << (v.pass ? "PASS" : "FAIL") << "  " << c.title << " [" << time.str()
                  << " s]";
        for (const auto& n : v.notes) std::cout << "; " << n;
        std::cout << "\n";
    }
    return failed == 0 ? 0 : 1;
}
