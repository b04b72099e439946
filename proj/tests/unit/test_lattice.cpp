#include "solvlat/ceh/weights.hpp"
#include "solvlat/lattice/lattice.hpp"

#include "../support/seed.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <fstream>
#include <sstream>

using namespace solvlat;
using namespace solvlat::lattice;
using exact::make_rational;
namespace st = solvlat::testing;

namespace {

const CubicSpec k56{5, 6};

MatrixZ random_matrix(std::mt19937_64& rng)
{
    MatrixZ m(3, 3);
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) m(r, c) = st::uniform(rng, -5, 5);
    return m;
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

}  // namespace

TEST(Cubic, Validate)
{
    EXPECT_TRUE(validate_cubic(k56).ok);
    const auto a = validate_cubic({3, 3});
    EXPECT_FALSE(a.ok);
    EXPECT_EQ(a.reason, "repeated root");
    const auto b = validate_cubic({1, 1});
    EXPECT_FALSE(b.ok);
    EXPECT_EQ(b.reason, "only 1 real root");
}

TEST(Companion, FiveSix)
{
    const MatrixZ c = companion(k56);
    EXPECT_EQ(exact::determinant(c), 1);
    EXPECT_EQ(exact::charpoly(c), (exact::UniPoly{-1, 6, -5, 1}));
    EXPECT_EQ(c(0, 0) + c(1, 1) + c(2, 2), 5);
    EXPECT_THROW(companion({3, 3}), std::invalid_argument);
}

TEST(Compound2, Basics)
{
    EXPECT_EQ(compound2(MatrixZ::identity(3)), MatrixZ::identity(3));
    const MatrixZ c2 = compound2(companion(k56));
    EXPECT_EQ(exact::charpoly(c2), (exact::UniPoly{-1, 5, -6, 1}));
    EXPECT_EQ(exact::determinant(c2), 1);
    EXPECT_THROW(compound2(MatrixZ(2, 2)), std::invalid_argument);
}

TEST(Compound2, Functorial)
{
    auto rng = st::make_rng(41);
    for (int trial = 0; trial < 100; ++trial) {
        const MatrixZ a = random_matrix(rng), b = random_matrix(rng);
        EXPECT_EQ(compound2(a * b), compound2(a) * compound2(b));
        EXPECT_EQ(exact::determinant(compound2(a)), exact::determinant(a) * exact::determinant(a));
    }
}

TEST(Compound2, AllSmallValidCubics)
{
    int valid = 0;
    for (long p = -10; p <= 10; ++p)
        for (long q = -10; q <= 10; ++q) {
            const CubicSpec s{p, q};
            if (!validate_cubic(s).ok) continue;
            ++valid;
            const MatrixZ c = companion(s);
            EXPECT_EQ(exact::determinant(c), 1);
            EXPECT_EQ(exact::charpoly(compound2(c)), (exact::UniPoly{-1, p, -q, 1})) << p << "," << q;
        }
    EXPECT_GT(valid, 0);
}

TEST(Weights, FiveSix)
{
    const auto d = weights_from_cubic(k56, make_rational(1, 1000000000));
    const double roots[3] = {0.198, 1.555, 3.247};
    const double lambdas[3] = {-1.619, 0.441, 1.178};
    for (int i = 0; i < 3; ++i) {
        EXPECT_NEAR(d.roots[i].lo.get_d(), roots[i], 1e-3);
        EXPECT_LE(d.lambda[i].first, d.lambda[i].second);
        EXPECT_NEAR(d.lambda[i].first, lambdas[i], 1e-3);
    }
    const double lo = d.lambda[0].first + d.lambda[1].first + d.lambda[2].first;
    const double hi = d.lambda[0].second + d.lambda[1].second + d.lambda[2].second;
    EXPECT_LE(lo, 0.0);
    EXPECT_GE(hi, 0.0);
    EXPECT_LT(hi - lo, 1e-6);
    EXPECT_TRUE(d.sum_zero && d.nonzero && d.distinct);
    EXPECT_TRUE(d.advisory_independent);
    EXPECT_THROW(weights_from_cubic({3, 3}, make_rational(1, 100)), std::invalid_argument);
}

TEST(Weights, PatternDirectionsNonvanishing)
{
    std::vector<std::array<long, 2>> dirs;
    for (const auto& w : ceh::subset_weight_directions(ceh::family_weight_forms()))
        dirs.push_back({w[0].get_num().get_si(), w[1].get_num().get_si()});
    ASSERT_FALSE(dirs.empty());
    const auto cert = certify_weight_directions(k56, dirs);
    EXPECT_TRUE(cert.ok);
}

TEST(Build, FiveSixVerifies)
{
    const auto cert = build_lattice(k56);
    const auto v = verify_certificate(cert);
    EXPECT_TRUE(v.ok) << v.failing_check;
    EXPECT_GT(v.commutator_index, 0);
    EXPECT_EQ(cert.closure.size(), 144u);
    EXPECT_EQ(cert.c2, compound2(cert.c));
}

TEST(Build, CommutatorIndexMatchesOracle)
{
    const long golden = golden_commutator_index();
    ASSERT_GT(golden, 0);
    EXPECT_EQ(build_lattice(k56).commutator_index, golden);
}

TEST(Build, ClosureOnFirstTwoGenerators)
{
    const auto cert = build_lattice(k56);
    // e1 * e2 = e1 + e2 + (e1^e2)/2, one lattice unit on the third wedge generator
    const auto& e = cert.closure[0 * 12 + 1];
    ASSERT_EQ(e.left, 0u);
    ASSERT_EQ(e.right, 1u);
    EXPECT_EQ(e.product, (std::vector<Rational>{1, 1, 0, 0, 0, 1}));
    EXPECT_EQ(e.commutator, (std::vector<Rational>{0, 0, 0, 0, 0, 2}));
}

TEST(Verify, TamperingDetected)
{
    const auto good = build_lattice(k56);

    auto bumped = good;
    bumped.c2(0, 0) += 1;
    const auto a = verify_certificate(bumped);
    EXPECT_FALSE(a.ok);
    EXPECT_TRUE(a.failing_check == "charpoly C2" || a.failing_check == "determinant") << a.failing_check;

    auto identity = good;
    identity.c = MatrixZ::identity(3);
    EXPECT_EQ(verify_certificate(identity).failing_check, "charpoly C");

    auto unscaled = good;
    unscaled.center_scale = 1;
    EXPECT_EQ(verify_certificate(unscaled).failing_check, "closure");

    auto wrong_index = good;
    wrong_index.commutator_index += 1;
    EXPECT_EQ(verify_certificate(wrong_index).failing_check, "commutator_index");

    auto bad_root = good;
    bad_root.roots[0].hi = bad_root.roots[1].hi;
    EXPECT_EQ(verify_certificate(bad_root).failing_check, "roots");
}

TEST(Verify, UnscaledCertificateWithRecomputedEntries)
{
    // a certificate built around the unscaled center: the product e1 * e2 has a half-integer coordinate
    auto cert = build_lattice(k56);
    cert.center_scale = 1;
    for (auto& e : cert.closure)
        for (int k = 3; k < 6; ++k) e.product[k] /= 2;
    EXPECT_EQ(verify_certificate(cert).failing_check, "closure");
}

TEST(Certificate, JsonRoundTrip)
{
    const auto cert = build_lattice(k56);
    const Json j = to_json(cert);
    const auto back = certificate_from_json(Json::parse(j.dump()));
    EXPECT_EQ(to_json(back), j);
    EXPECT_TRUE(verify_certificate(back).ok);
    Json broken = j;
    broken.erase("C2");
    EXPECT_THROW(certificate_from_json(broken), std::invalid_argument);
}
