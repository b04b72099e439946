#include "solvlat/cli/cli.hpp"

#include "solvlat/ceh/cohomology.hpp"
#include "solvlat/ceh/weights.hpp"
#include "solvlat/exact/rational.hpp"
#include "solvlat/lattice/lattice.hpp"
#include "solvlat/lie/catalog.hpp"
#include "solvlat/lie/format.hpp"
#include "solvlat/obstruct/obstruct.hpp"
#include "solvlat/poly/groebner.hpp"
#include "solvlat/util/parse_error.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

namespace solvlat::cli {

namespace {

using exact::Rational;
using exact::VectorQ;
using lie::LieAlgebra;

struct Options {
    std::string format = "text";
    std::string target;
    std::string out_path;
    std::string width = "1/1000000";
    std::uint64_t seed = 1;
    std::string order;
    std::string omega;
    long p = 0;
    long q = 0;
};

struct Outcome {
    Json result;
    int code = Ok;
};

std::vector<long> split_longs(const std::string& s)
{
    std::vector<long> out;
    std::stringstream in(s);
    std::string item;
    while (std::getline(in, item, ',')) {
        std::size_t used = 0;
        const long v = std::stol(item, &used);
        if (used != item.size()) throw std::invalid_argument("bad integer '" + item + "'");
        out.push_back(v);
    }
    return out;
}

std::size_t parameter_size(const std::string& s, const std::string& name)
{
    const auto v = split_longs(s);
    if (v.size() != 1 || v[0] < 1) throw std::invalid_argument(name + " needs one positive integer");
    return static_cast<std::size_t>(v[0]);
}

bool has_example2_shape(const std::string& target)
{
    return target == "example2" || target.rfind("modified:", 0) == 0;
}

Json string_array(const std::vector<std::string>& v)
{
    Json a = Json::array();
    for (const auto& s : v) a.push_back(s);
    return a;
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot read " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text)
{
    std::ofstream f(path);
    if (!f) throw std::invalid_argument("cannot write " + path);
    f << text;
}

Outcome do_validate(const Options& o)
{
    const LieAlgebra L = resolve_target(o.target);
    const auto report = lie::validate(L);

    std::mt19937_64 rng(o.seed);
    std::uniform_int_distribution<long> coef(-3, 3);
    const int samples = 32;
    bool random_ok = true;
    for (int s = 0; s < samples && random_ok; ++s) {
        VectorQ u(L.dim()), v(L.dim()), w(L.dim());
        for (std::size_t i = 0; i < L.dim(); ++i) {
            u[i] = coef(rng);
            v[i] = coef(rng);
            w[i] = coef(rng);
        }
        const VectorQ a = L.bracket(u, L.bracket(v, w));
        const VectorQ b = L.bracket(v, L.bracket(w, u));
        const VectorQ c = L.bracket(w, L.bracket(u, v));
        for (std::size_t i = 0; i < L.dim(); ++i)
            if (a[i] + b[i] + c[i] != 0) random_ok = false;
    }

    Json r;
    r["algebra"] = o.target;
    r["dim"] = L.dim();
    r["ok"] = report.ok();
    r["violation"] = report.ok() ? Json(nullptr) : Json(report.message(L));
    r["random_jacobi"] = {{"seed", o.seed}, {"samples", samples}, {"ok", random_ok}};
    return {r, report.ok() && random_ok ? Ok : CheckFailed};
}

Json betti_json(const std::vector<std::size_t>& b)
{
    Json r;
    r["betti"] = b;
    long euler = 0;
    bool duality = true;
    for (std::size_t k = 0; k < b.size(); ++k) {
        euler += (k % 2 ? -1 : 1) * static_cast<long>(b[k]);
        if (b[k] != b[b.size() - 1 - k]) duality = false;
    }
    r["euler_characteristic"] = euler;
    r["poincare_duality"] = duality;
    return r;
}

Outcome do_betti(const Options& o)
{
    const LieAlgebra L = resolve_target(o.target);
    Json r = betti_json(ceh::betti(L));
    r["algebra"] = o.target;
    r["dim"] = L.dim();
    return {r, Ok};
}

Outcome do_cohomology(const Options& o)
{
    const LieAlgebra L = resolve_target(o.target);
    const ceh::CohomologyRing H(L);
    Json r = betti_json(H.betti());
    r["algebra"] = o.target;
    r["dim"] = L.dim();
    Json reps = Json::array();
    for (std::size_t k = 0; k <= L.dim(); ++k) {
        std::vector<std::string> forms;
        for (const auto& v : H.representatives(k)) forms.push_back(H.complex().form_to_string(k, v));
        reps.push_back(string_array(forms));
    }
    r["representatives"] = reps;
    return {r, Ok};
}

std::string omega_text(const Options& o)
{
    if (!o.omega.empty()) return o.omega;
    if (has_example2_shape(o.target)) return kDefaultOmega;
    throw std::invalid_argument("--omega is required for target " + o.target);
}

Outcome do_symplectic(const Options& o)
{
    const LieAlgebra L = resolve_target(o.target);
    const std::string text = omega_text(o);
    const auto check = ceh::symplectic_check(L, ceh::parse_two_form(L, text));
    Json r;
    r["algebra"] = o.target;
    r["omega"] = text;
    r["closed"] = check.closed;
    r["nondegenerate"] = check.nondegenerate;
    r["symplectic"] = check.closed && check.nondegenerate;
    return {r, check.closed && check.nondegenerate ? Ok : CheckFailed};
}

Outcome do_hard_lefschetz(const Options& o)
{
    const LieAlgebra L = resolve_target(o.target);
    const std::string text = omega_text(o);
    const VectorQ omega = ceh::parse_two_form(L, text);
    const ceh::CohomologyRing H(L);
    const auto hl = ceh::hard_lefschetz(H, omega);
    Json r;
    r["algebra"] = o.target;
    r["omega"] = text;
    r["holds"] = hl.holds;
    r["failing_degree"] = hl.failing_degree ? Json(*hl.failing_degree) : Json(nullptr);
    r["ranks"] = hl.ranks;
    std::vector<std::size_t> expected;
    const std::size_t n = L.dim() / 2;
    for (std::size_t k = 1; k <= n; ++k) expected.push_back(H.betti(n - k));
    r["expected_ranks"] = expected;
    r["betti"] = H.betti();
    return {r, hl.holds ? Ok : CheckFailed};
}

obstruct::ObstructionReport merged_example3()
{
    auto pos = obstruct::example3_qpos_obstruction();
    auto zero = obstruct::example3_q0_obstruction();
    obstruct::ObstructionReport r;
    r.example = "example3";
    std::set<std::string> seen;
    for (const auto* part : {&pos, &zero})
        for (const auto& a : part->assumptions)
            if (seen.insert(a.id).second) r.assumptions.push_back(a);
    for (const auto* part : {&pos, &zero})
        for (const auto& c : part->cases) r.cases.push_back(c);
    r.extracted = {{"q_positive", pos.extracted}, {"q_zero", zero.extracted}};
    r.conclusion = obstruct::derive_conclusion(r.cases);
    return r;
}

Outcome do_obstruct(const Options& o)
{
    obstruct::ObstructionReport report;
    if (o.target == "example2")
        report = obstruct::example2_obstruction();
    else if (o.target == "example3")
        report = merged_example3();
    else if (o.target == "example3:qpos")
        report = obstruct::example3_qpos_obstruction();
    else if (o.target == "example3:q0")
        report = obstruct::example3_q0_obstruction();
    else
        throw std::invalid_argument("no obstruction pipeline for " + o.target +
                                    " (use example2, example3, example3:qpos or example3:q0)");

    Json r = obstruct::to_json(report);
    if (!o.order.empty()) {
        if (o.target != "example2") throw std::invalid_argument("--order applies to example2 only");
        const auto [f, g] = obstruct::example2_system();
        const std::size_t nvars = f.variables().size();
        const auto order = o.order == "lex" ? poly::MonomialOrder::lex(nvars) : poly::MonomialOrder::grevlex(nvars);
        const auto gb = poly::buchberger({f, g}, order);
        std::vector<std::string> gens;
        for (const auto& p : gb.generators) gens.push_back(p.to_string(order));
        r["groebner"] = {{"order", o.order}, {"variables", string_array(f.variables())}, {"generators", string_array(gens)}};
    }
    if (!o.out_path.empty()) write_file(o.out_path, r.dump(2) + "\n");
    return {r, report.conclusion == obstruct::Conclusion::Obstructed ? Ok : CheckFailed};
}

Json interval_json(const Rational& lo, const Rational& hi)
{
    return Json::array({exact::to_decimal(lo, 9), exact::to_decimal(hi, 9)});
}

Outcome do_build_lattice(const Options& o)
{
    const lattice::CubicSpec spec{o.p, o.q};
    const auto valid = lattice::validate_cubic(spec);
    if (!valid.ok)
        throw std::invalid_argument("cubic x^3 - " + std::to_string(o.p) + "x^2 + " + std::to_string(o.q) +
                                    "x - 1 rejected: " + valid.reason);
    const Rational width = exact::parse_rational(o.width);
    if (width <= 0) throw std::invalid_argument("--width must be positive");

    const auto cert = lattice::build_lattice(spec);
    const auto verdict = lattice::verify_certificate(cert);
    const auto weights = lattice::weights_from_cubic(spec, width);
    std::vector<std::array<long, 2>> dirs;
    for (const auto& w : ceh::subset_weight_directions(ceh::family_weight_forms()))
        dirs.push_back({w[0].get_num().get_si(), w[1].get_num().get_si()});
    const auto pattern = lattice::certify_weight_directions(spec, dirs);

    Json s;
    s["cubic"] = {{"p", o.p}, {"q", o.q}};
    Json roots = Json::array(), lambdas = Json::array();
    for (int i = 0; i < 3; ++i) {
        roots.push_back(interval_json(weights.roots[i].lo, weights.roots[i].hi));
        lambdas.push_back(Json::array({weights.lambda[i].first, weights.lambda[i].second}));
    }
    s["roots"] = roots;
    s["lambda_advisory"] = lambdas;
    s["pattern_certified"] = pattern.ok;
    s["verified"] = verdict.ok;
    s["failing_check"] = verdict.ok ? Json(nullptr) : Json(verdict.failing_check);
    s["commutator_index"] = cert.commutator_index.get_si();
    s["v_index"] = cert.v_index.get_si();
    s["closure_entries"] = cert.closure.size();

    const Json certificate = lattice::to_json(cert);
    Outcome out;
    out.code = verdict.ok && pattern.ok ? Ok : CheckFailed;
    if (!o.out_path.empty()) {
        write_file(o.out_path, certificate.dump(2) + "\n");
        s["certificate"] = o.out_path;
        out.result = s;
    } else if (o.format == "json") {
        out.result = certificate;
    } else {
        s["certificate"] = "not written (pass --out <path> or --format json)";
        out.result = s;
    }
    return out;
}

Outcome do_verify(const Options& o)
{
    Json j;
    try {
        j = Json::parse(read_file(o.target));
    } catch (const Json::parse_error& e) {
        throw std::invalid_argument(o.target + ": not JSON: " + e.what());
    }
    Json r;
    r["file"] = o.target;
    if (j.is_object() && j.contains("cubic")) {
        const auto v = lattice::verify_certificate(lattice::certificate_from_json(j));
        r["kind"] = "lattice certificate";
        r["ok"] = v.ok;
        r["failing_check"] = v.ok ? Json(nullptr) : Json(v.failing_check);
        r["commutator_index"] = v.commutator_index.get_si();
        return {r, v.ok ? Ok : CheckFailed};
    }
    if (j.is_object() && j.contains("cases")) {
        const auto v = obstruct::verify_report(j);
        r["kind"] = "obstruction report";
        r["ok"] = v.ok;
        r["failure"] = v.ok ? Json(nullptr) : Json(v.failure);
        r["conclusion"] = j.value("conclusion", "");
        return {r, v.ok ? Ok : CheckFailed};
    }
    throw std::invalid_argument(o.target + ": neither a lattice certificate nor an obstruction report");
}

Outcome do_list_examples()
{
    Json list = Json::array();
    for (const auto& e : example_registry())
        list.push_back({{"name", e.name}, {"usage", e.usage}, {"dim", e.dim}, {"note", e.note}});
    return {Json{{"examples", list}}, Ok};
}

void render_check(std::ostream& out, const obstruct::Check& c, int indent)
{
    out << std::string(indent, ' ') << "check " << c.kind << ": " << (c.passed ? "pass" : "FAIL") << "\n";
}

void render_case(std::ostream& out, const obstruct::CaseNode& n, int indent)
{
    const std::string pad(indent, ' ');
    out << pad << "case " << n.name << " [" << obstruct::to_string(n.resolution) << "]\n";
    for (const auto& c : n.constraints) out << pad << "  constraint " << c << "\n";
    for (const auto& c : n.checks) render_check(out, c, indent + 2);
    if (!n.witness.empty()) {
        out << pad << "  witness:\n";
        render_text(out, n.witness, indent + 4);
    }
    for (const auto& c : n.children) render_case(out, c, indent + 2);
}

void render_report(std::ostream& out, const Json& j)
{
    const auto r = obstruct::report_from_json(j);
    out << "example: " << r.example << "\n";
    out << "conclusion: " << obstruct::to_string(r.conclusion) << "\n";
    out << "assumptions:\n";
    for (const auto& a : r.assumptions) out << "  " << a.id << ": " << a.anchor << "\n";
    out << "extracted:\n";
    render_text(out, r.extracted, 2);
    if (j.contains("groebner")) {
        out << "groebner:\n";
        render_text(out, j.at("groebner"), 2);
    }
    out << "cases:\n";
    for (const auto& c : r.cases) render_case(out, c, 2);
}

bool is_scalar(const Json& j) { return !j.is_object() && !j.is_array(); }

std::string scalar_text(const Json& j)
{
    if (j.is_string()) return j.get<std::string>();
    if (j.is_null()) return "none";
    return j.dump();
}

}  // namespace

LieAlgebra resolve_target(const std::string& target)
{
    const auto colon = target.find(':');
    const std::string head = target.substr(0, colon);
    const std::string arg = colon == std::string::npos ? "" : target.substr(colon + 1);
    LieAlgebra L;
    try {
        if (target == "example2")
            L = lie::example2();
        else if (target == "example3")
            L = lie::example3();
        else if (target == "heisenberg3")
            L = lie::heisenberg3();
        else if (target == "kodaira-thurston")
            L = lie::kodaira_thurston();
        else if (target == "n3+n3")
            L = lie::direct_sum(lie::heisenberg3(), lie::heisenberg3());
        else if (head == "modified" && !arg.empty()) {
            const auto comma = arg.find(',');
            if (comma == std::string::npos) throw std::invalid_argument("modified needs l1,l2");
            L = lie::modified_family(exact::parse_rational(arg.substr(0, comma)),
                                     exact::parse_rational(arg.substr(comma + 1)));
        } else if (head == "g65" && !arg.empty()) {
            const auto v = split_longs(arg);
            if (v.size() != 1 || v[0] < 0) throw std::invalid_argument("g65 needs q >= 0");
            L = lie::g65(v[0]);
        } else if (head == "free2step" && !arg.empty())
            L = lie::free2step(parameter_size(arg, "free2step"));
        else if (head == "abelian" && !arg.empty())
            L = lie::abelian(parameter_size(arg, "abelian"));
        else if (std::filesystem::is_regular_file(target))
            L = lie::parse_algebra(read_file(target));
        else
            throw std::invalid_argument("unknown algebra '" + target + "' (see list-examples)");
    } catch (const ParseError& e) {
        throw std::invalid_argument(target + ": " + e.what());
    }
    L.set_name(target);
    return L;
}

std::vector<ExampleEntry> example_registry()
{
    return {
        {"example2", "example2", 8, "split solvable, R^2 acting on free 2-step n(3) with weights (-1,-2,3); no lattice"},
        {"example3", "example3", 8, "R^2 acting on n3+n3 with weights (1,-2,-1,-1,2,1); no lattice"},
        {"modified(l1,l2)", "modified:l1,l2", 8, "Example-2 brackets with weights (l1,l2,-l1-l2); lattice for cubic units"},
        {"g65(q)", "g65:q", 6, "q >= 0 squarefree; 2-step nilpotent, split form at q = 0"},
        {"heisenberg3", "heisenberg3", 3, "[X,Y] = Z"},
        {"n3+n3", "n3+n3", 6, "direct sum of two Heisenberg algebras"},
        {"free2step(k)", "free2step:k", 0, "free 2-step nilpotent on k generators, dim k + k(k-1)/2"},
        {"kodaira-thurston", "kodaira-thurston", 4, "heisenberg3 + R; symplectic, hard Lefschetz fails"},
        {"abelian(n)", "abelian:n", 0, "abelian of dim n"},
    };
}

void render_text(std::ostream& out, const Json& j, int indent)
{
    const std::string pad(indent, ' ');
    if (is_scalar(j)) {
        out << pad << scalar_text(j) << "\n";
        return;
    }
    if (j.is_array()) {
        for (const auto& item : j) {
            if (is_scalar(item)) {
                out << pad << "- " << scalar_text(item) << "\n";
            } else {
                out << pad << "-\n";
                render_text(out, item, indent + 2);
            }
        }
        return;
    }
    for (const auto& [key, value] : j.items()) {
        const bool flat_array = value.is_array() && !value.empty() &&
                                std::all_of(value.begin(), value.end(), [](const Json& v) { return is_scalar(v); });
        if (is_scalar(value)) {
            out << pad << key << ": " << scalar_text(value) << "\n";
        } else if (flat_array) {
            out << pad << key << ":";
            for (const auto& v : value) out << " " << scalar_text(v);
            out << "\n";
        } else if (value.empty()) {
            out << pad << key << ": " << (value.is_array() ? "[]" : "{}") << "\n";
        } else {
            out << pad << key << ":\n";
            render_text(out, value, indent + 2);
        }
    }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact Lie algebra cohomology, lattice obstructions and lattice certificates"};
    app.name("solvlat");
    app.require_subcommand(1);
    Options o;

    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));
    };
    auto add_target = [&](CLI::App* sub, const std::string& what) {
        sub->add_option("target", o.target, what)->required();
    };
    const std::string algebra_help = "builtin name (see list-examples) or algebra file";

    auto* validate = app.add_subcommand("validate", "check antisymmetry and the Jacobi identity");
    add_target(validate, algebra_help);
    validate->add_option("--seed", o.seed, "seed for the random Jacobi samples");
    add_format(validate);

    auto* betti = app.add_subcommand("betti", "Betti numbers of the Chevalley-Eilenberg complex");
    add_target(betti, algebra_help);
    add_format(betti);

    auto* cohomology = app.add_subcommand("cohomology", "Betti numbers and cocycle representatives");
    add_target(cohomology, algebra_help);
    add_format(cohomology);

    auto* symplectic = app.add_subcommand("symplectic", "closedness and nondegeneracy of a 2-form");
    add_target(symplectic, algebra_help);
    symplectic->add_option("--omega", o.omega, "2-form such as \"A^B + X1^Z1\"");
    add_format(symplectic);

    auto* lefschetz = app.add_subcommand("hard-lefschetz", "cup with [omega]^k from H^(n-k) to H^(n+k)");
    add_target(lefschetz, algebra_help);
    lefschetz->add_option("--omega", o.omega, "2-form such as \"A^B + X1^Z1\"");
    add_format(lefschetz);

    auto* obstruct_cmd = app.add_subcommand("obstruct", "case-tree obstruction report");
    add_target(obstruct_cmd, "example2, example3, example3:qpos or example3:q0");
    obstruct_cmd->add_option("--out", o.out_path, "also write the JSON report here");
    obstruct_cmd->add_option("--order", o.order, "attach a reduced Groebner basis of the trace system")
        ->check(CLI::IsMember({"lex", "grevlex"}));
    add_format(obstruct_cmd);

    auto* build = app.add_subcommand("build-lattice", "construct and verify a lattice certificate");
    build->add_option("--p", o.p, "cubic x^3 - p x^2 + q x - 1")->required();
    build->add_option("--q", o.q, "cubic x^3 - p x^2 + q x - 1")->required();
    build->add_option("--width", o.width, "root isolation width (rational)");
    build->add_option("--out", o.out_path, "certificate path");
    add_format(build);

    auto* verify = app.add_subcommand("verify", "re-run every check in a certificate or report");
    add_target(verify, "JSON file");
    add_format(verify);

    auto* list = app.add_subcommand("list-examples", "builtin algebras");
    add_format(list);

    std::vector<const char*> argv{"solvlat"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? Ok : Usage;
    }

    const bool json = o.format == "json";
    try {
        Outcome r;
        if (validate->parsed())
            r = do_validate(o);
        else if (betti->parsed())
            r = do_betti(o);
        else if (cohomology->parsed())
            r = do_cohomology(o);
        else if (symplectic->parsed())
            r = do_symplectic(o);
        else if (lefschetz->parsed())
            r = do_hard_lefschetz(o);
        else if (obstruct_cmd->parsed())
            r = do_obstruct(o);
        else if (build->parsed())
            r = do_build_lattice(o);
        else if (verify->parsed())
            r = do_verify(o);
        else
            r = do_list_examples();

        if (json)
            out << r.result.dump(2) << "\n";
        else if (obstruct_cmd->parsed())
            render_report(out, r.result);
        else if (list->parsed())
            for (const auto& e : example_registry())
                out << e.name << " (dim " << (e.dim ? std::to_string(e.dim) : "varies") << "): " << e.note
                    << "  [" << e.usage << "]\n";
        else
            render_text(out, r.result);
        return r.code;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        if (json) out << Json{{"error", e.what()}}.dump(2) << "\n";
        return Usage;
    }
}

}  // namespace solvlat::cli
