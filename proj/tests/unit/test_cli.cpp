#include "solvlat/cli/cli.hpp"
#include "solvlat/lie/catalog.hpp"
#include "solvlat/lie/format.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace solvlat;
using cli::Json;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

Json run_json(std::vector<std::string> args, int expected_code = 0)
{
    args.push_back("--format");
    args.push_back("json");
    const auto r = run(args);
    EXPECT_EQ(r.code, expected_code) << r.err;
    return Json::parse(r.out);
}

std::string golden(const std::string& name)
{
    std::ifstream in(std::string(SOLVLAT_GOLDEN_DIR) + "/cli/" + name);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string temp_path(const std::string& name)
{
    return (std::filesystem::temp_directory_path() / ("solvlat_cli_" + name)).string();
}

bool has_line(const std::string& text, const std::string& line)
{
    std::istringstream in(text);
    std::string l;
    while (std::getline(in, l))
        if (l == line) return true;
    return false;
}

std::string scalar(const Json& j)
{
    if (j.is_string()) return j.get<std::string>();
    if (j.is_null()) return "none";
    return j.dump();
}

}  // namespace

TEST(Cli, ListExamples)
{
    const auto r = run({"list-examples"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("example2 (dim 8)"), std::string::npos);
    EXPECT_NE(r.out.find("g65(q)"), std::string::npos);
    EXPECT_EQ(r.out, run({"list-examples"}).out);
    EXPECT_EQ(r.out, golden("list_examples.txt"));
    EXPECT_EQ(run_json({"list-examples"}).at("examples").size(), cli::example_registry().size());
}

TEST(Cli, BettiGolden)
{
    EXPECT_EQ(run({"betti", "heisenberg3"}).out, golden("betti_heisenberg3.txt"));
    EXPECT_EQ(run({"betti", "heisenberg3", "--format", "json"}).out, golden("betti_heisenberg3.json"));
}

TEST(Cli, HardLefschetzKodairaThurstonFails)
{
    const auto r = run({"hard-lefschetz", "kodaira-thurston", "--omega", "X^W + Y^Z", "--format", "json"});
    EXPECT_EQ(r.code, 2);
    EXPECT_EQ(r.out, golden("hl_kodaira_thurston.json"));
    EXPECT_FALSE(Json::parse(r.out).at("holds").get<bool>());
}

TEST(Cli, TextAndJsonAgree)
{
    const std::vector<std::vector<std::string>> commands = {
        {"validate", "g65:2"},
        {"betti", "n3+n3"},
        {"symplectic", "example2"},
        {"hard-lefschetz", "modified:-1,-2"},
        {"hard-lefschetz", "kodaira-thurston", "--omega", "X^W + Y^Z"},
        {"symplectic", "kodaira-thurston", "--omega", "X^Y"},
    };
    for (const auto& c : commands) {
        const auto text = run(c);
        auto jargs = c;
        jargs.insert(jargs.end(), {"--format", "json"});
        const auto json = run(jargs);
        EXPECT_EQ(text.code, json.code) << c[0] << " " << c[1];
        const Json j = Json::parse(json.out);
        for (const auto& [key, value] : j.items()) {
            if (value.is_object() || value.is_array()) continue;
            EXPECT_TRUE(has_line(text.out, key + ": " + scalar(value))) << c[0] << " " << c[1] << " " << key;
        }
    }
}

TEST(Cli, ObstructExample2)
{
    const Json j = run_json({"obstruct", "example2"});
    EXPECT_EQ(j.at("conclusion"), "obstructed");
    EXPECT_EQ(j.at("extracted").at("n"), Json::array({"3"}));
    const auto text = run({"obstruct", "example2"});
    EXPECT_EQ(text.code, 0);
    EXPECT_TRUE(has_line(text.out, "conclusion: obstructed"));
    EXPECT_TRUE(has_line(text.out, "  z: 1"));
}

TEST(Cli, ObstructExample3AndVerify)
{
    const std::string path = temp_path("example3.json");
    const Json j = run_json({"obstruct", "example3", "--out", path});
    EXPECT_EQ(j.at("conclusion"), "obstructed");
    EXPECT_EQ(j.at("extracted").at("q_positive").at("assignments_failed"), 16);
    const Json v = run_json({"verify", path});
    EXPECT_TRUE(v.at("ok").get<bool>());

    Json tampered = Json::parse(std::ifstream(path));
    tampered["conclusion"] = "inconclusive";
    std::ofstream(path) << tampered.dump();
    EXPECT_EQ(run({"verify", path}).code, 2);
    std::filesystem::remove(path);
}

TEST(Cli, ObstructOrderAttachesBasis)
{
    const Json j = run_json({"obstruct", "example2", "--order", "lex"});
    EXPECT_EQ(j.at("groebner").at("order"), "lex");
    EXPECT_FALSE(j.at("groebner").at("generators").empty());
    EXPECT_EQ(run({"obstruct", "example2", "--order", "revlex"}).code, 1);
}

TEST(Cli, BuildLatticeThenVerify)
{
    const std::string path = temp_path("lattice.json");
    const Json s = run_json({"build-lattice", "--p", "5", "--q", "6", "--out", path});
    EXPECT_TRUE(s.at("verified").get<bool>());
    EXPECT_TRUE(s.at("pattern_certified").get<bool>());
    const Json v = run_json({"verify", path});
    EXPECT_TRUE(v.at("ok").get<bool>());
    EXPECT_EQ(v.at("kind"), "lattice certificate");

    Json cert = Json::parse(std::ifstream(path));
    cert["lambda_basis"]["center_scale"] = "1/1";
    std::ofstream(path) << cert.dump();
    const Json bad = run_json({"verify", path}, 2);
    EXPECT_EQ(bad.at("failing_check"), "closure");
    std::filesystem::remove(path);

    const Json direct = run_json({"build-lattice", "--p", "5", "--q", "6"});
    EXPECT_TRUE(direct.contains("closure"));
}

TEST(Cli, AlgebraFile)
{
    const std::string path = temp_path("n3.alg");
    std::ofstream(path) << lie::dump_algebra(lie::heisenberg3());
    const Json j = run_json({"betti", path});
    EXPECT_EQ(j.at("betti"), Json::array({1, 2, 2, 1}));

    std::ofstream(path) << "dim 2\nbasis X Y\n[X, Y] = 2*Q\n";
    const auto r = run({"betti", path});
    EXPECT_EQ(r.code, 1);
    EXPECT_NE(r.err.find("line 3, column"), std::string::npos) << r.err;
    std::filesystem::remove(path);
}

TEST(Cli, UsageErrors)
{
    EXPECT_EQ(run({}).code, 1);
    EXPECT_EQ(run({"frobnicate"}).code, 1);
    EXPECT_EQ(run({"betti", "nosuch"}).code, 1);
    EXPECT_EQ(run({"betti", "heisenberg3", "--format", "yaml"}).code, 1);
    EXPECT_EQ(run({"symplectic", "heisenberg3"}).code, 1);
    EXPECT_EQ(run({"build-lattice", "--p", "3", "--q", "3"}).code, 1);
    EXPECT_EQ(run({"obstruct", "heisenberg3"}).code, 1);
    const auto j = run({"betti", "nosuch", "--format", "json"});
    EXPECT_TRUE(Json::parse(j.out).contains("error"));
}

TEST(Cli, ValidateSeed)
{
    const Json a = run_json({"validate", "example3", "--seed", "7"});
    EXPECT_TRUE(a.at("ok").get<bool>());
    EXPECT_EQ(a.at("random_jacobi").at("seed"), 7);
}
