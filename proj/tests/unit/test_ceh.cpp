#include "solvlat/ceh/cohomology.hpp"
#include "solvlat/ceh/weights.hpp"
#include "solvlat/lie/catalog.hpp"
#include "solvlat/util/parse_error.hpp"

#include "../support/seed.hpp"

#include <gtest/gtest.h>

#include <fstream>
#include <map>
#include <sstream>

using namespace solvlat;
using namespace solvlat::ceh;
using exact::make_rational;
namespace st = solvlat::testing;

namespace {

const char* kOmega = "A^B + X1^Z1 + X2^Z2 + X3^Z3";

bool is_zero(const VectorQ& v)
{
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

lie::LieAlgebra by_name(const std::string& name)
{
    if (name == "heisenberg3") return lie::heisenberg3();
    if (name == "kodaira-thurston") return lie::kodaira_thurston();
    if (name == "example2") return lie::example2();
    if (name.rfind("modified:", 0) == 0) {
        const auto comma = name.find(',');
        return lie::modified_family(exact::parse_rational(name.substr(9, comma - 9)),
                                    exact::parse_rational(name.substr(comma + 1)));
    }
    throw std::invalid_argument("unknown golden case " + name);
}

std::map<std::string, std::vector<std::size_t>> golden_betti()
{
    std::ifstream in(std::string(SOLVLAT_GOLDEN_DIR) + "/betti.txt");
    std::map<std::string, std::vector<std::size_t>> out;
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ss(line);
        std::string name;
        ss >> name;
        std::size_t b;
        while (ss >> b) out[name].push_back(b);
    }
    return out;
}

std::vector<std::size_t> convolve(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b)
{
    std::vector<std::size_t> out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return out;
}

std::vector<lie::LieAlgebra> sample()
{
    return {lie::heisenberg3(),  lie::kodaira_thurston(), lie::example2(), lie::example3(),
            lie::g65(2),         lie::g65(0),             lie::free2step(3), lie::modified_family(1, 2)};
}

VectorQ random_vector(std::mt19937_64& rng, std::size_t n)
{
    VectorQ v;
    for (std::size_t i = 0; i < n; ++i) v.emplace_back(st::uniform(rng, -3, 3));
    return v;
}

}  // namespace

TEST(Differential, HeisenbergDegreeOne)
{
    const CochainComplex C(lie::heisenberg3());
    EXPECT_TRUE(is_zero(C.apply_d(1, C.dual(0))));
    EXPECT_TRUE(is_zero(C.apply_d(1, C.dual(1))));
    EXPECT_EQ(C.form_to_string(2, C.apply_d(1, C.dual(2))), "-X^Y");
}

TEST(Differential, SquaresToZero)
{
    for (const auto& L : sample()) {
        const CochainComplex C(L);
        for (std::size_t k = 0; k + 1 <= L.dim(); ++k) {
            const MatrixQ dd = C.differential(k + 1) * C.differential(k);
            EXPECT_TRUE(is_zero(dd.data())) << L.name() << " k=" << k;
        }
    }
}

TEST(Differential, IsDerivationOfWedge)
{
    auto rng = st::make_rng(11);
    const CochainComplex C(lie::example2());
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t p = 1 + trial % 3, q = 1 + (trial / 3) % 3;
        const VectorQ a = random_vector(rng, C.rank(p)), b = random_vector(rng, C.rank(q));
        const VectorQ lhs = C.apply_d(p + q, C.wedge(p, a, q, b));
        VectorQ rhs = C.wedge(p + 1, C.apply_d(p, a), q, b);
        const VectorQ second = C.wedge(p, a, q + 1, C.apply_d(q, b));
        const int sign = p % 2 ? -1 : 1;
        for (std::size_t i = 0; i < rhs.size(); ++i) rhs[i] += sign * second[i];
        EXPECT_EQ(lhs, rhs);
    }
}

TEST(Differential, DegreeOutOfRange)
{
    EXPECT_THROW(ce_differential(lie::heisenberg3(), 4), std::out_of_range);
    EXPECT_EQ(ce_differential(lie::heisenberg3(), 3).rows(), 0u);
}

TEST(Betti, Heisenberg)
{
    EXPECT_EQ(betti(lie::heisenberg3()), (std::vector<std::size_t>{1, 2, 2, 1}));
}

TEST(Betti, MatchesSympyOracle)
{
    const auto golden = golden_betti();
    ASSERT_FALSE(golden.empty());
    for (const auto& [name, b] : golden) EXPECT_EQ(betti(by_name(name)), b) << name;
}

TEST(Betti, Example2MatchesTorusTimesCP3)
{
    const auto expected = convolve({1, 2, 1}, {1, 0, 1, 0, 1, 0, 1});
    ASSERT_EQ(expected, (std::vector<std::size_t>{1, 2, 2, 2, 2, 2, 2, 2, 1}));
    EXPECT_EQ(betti(lie::example2()), expected);
}

TEST(Betti, PoincareDualityAndEuler)
{
    for (const auto& L : sample()) {
        const auto b = betti(L);
        long euler = 0;
        for (std::size_t k = 0; k < b.size(); ++k) {
            EXPECT_EQ(b[k], b[b.size() - 1 - k]) << L.name();
            euler += (k % 2 ? -1 : 1) * static_cast<long>(b[k]);
        }
        EXPECT_EQ(euler, 0) << L.name();
    }
}

TEST(Betti, AbelianIsBinomial)
{
    EXPECT_EQ(betti(lie::abelian(4)), (std::vector<std::size_t>{1, 4, 6, 4, 1}));
}

TEST(Ring, GradedCommutativeAndAssociative)
{
    auto rng = st::make_rng(12);
    const CohomologyRing H(lie::example2());
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t p = trial % 3, q = 1 + trial % 2, r = 2;
        const VectorQ a = random_vector(rng, H.betti(p)), b = random_vector(rng, H.betti(q)),
                      c = random_vector(rng, H.betti(r));
        VectorQ ab = H.cup(p, a, q, b), ba = H.cup(q, b, p, a);
        if ((p * q) % 2)
            for (auto& x : ba) x = -x;
        EXPECT_EQ(ab, ba);
        EXPECT_EQ(H.cup(p + q, ab, r, c), H.cup(p, a, q + r, H.cup(q, b, r, c)));
    }
}

TEST(Ring, ClassOfCoboundaryIsZero)
{
    const CohomologyRing H(lie::example2());
    const auto& C = H.complex();
    const VectorQ exact_form = C.apply_d(1, C.dual(C.algebra().index_of("Z1")));
    EXPECT_TRUE(H.is_coboundary(2, exact_form));
    EXPECT_TRUE(is_zero(H.class_of(2, exact_form)));
    EXPECT_THROW(H.class_of(1, C.dual(C.algebra().index_of("Z1"))), std::invalid_argument);
    EXPECT_THROW(H.cup(5, VectorQ(H.betti(5), 0), 4, VectorQ(H.betti(4), 0)), std::invalid_argument);
}

TEST(TwoForm, ParseAndPrint)
{
    const auto L = lie::example2();
    const CochainComplex C(L);
    const VectorQ w = parse_two_form(L, kOmega);
    EXPECT_EQ(C.form_to_string(2, w), "A^B + X1^Z1 + X2^Z2 + X3^Z3");
    EXPECT_EQ(C.form_to_string(2, parse_two_form(L, "B^A - 1/2*Z1^X1")), "-A^B + 1/2*X1^Z1");
}

TEST(TwoForm, Errors)
{
    const auto L = lie::example2();
    auto column_of = [&](const char* text) -> std::size_t {
        try {
            parse_two_form(L, text);
        } catch (const ParseError& e) {
            return e.column();
        }
        return 0;
    };
    EXPECT_EQ(column_of("A^Q"), 3u);
    EXPECT_EQ(column_of("A^A"), 3u);
    EXPECT_EQ(column_of("A B"), 3u);
    EXPECT_EQ(column_of(""), 1u);
    EXPECT_EQ(column_of("A^B X1^Z1"), 5u);
}

TEST(Symplectic, Example2Form)
{
    const auto L = lie::example2();
    const auto s = symplectic_check(L, parse_two_form(L, kOmega));
    EXPECT_TRUE(s.closed);
    EXPECT_TRUE(s.nondegenerate);
    const auto t = symplectic_check(L, parse_two_form(L, "A^X1 + B^Z1"));
    EXPECT_FALSE(t.closed);
    EXPECT_FALSE(t.nondegenerate);
    EXPECT_THROW(symplectic_check(lie::heisenberg3(), VectorQ(3, 0)), std::invalid_argument);
}

TEST(Lefschetz, Example2)
{
    const auto L = lie::example2();
    const auto r = hard_lefschetz(L, parse_two_form(L, kOmega));
    EXPECT_TRUE(r.holds);
    EXPECT_FALSE(r.failing_degree.has_value());
}

TEST(Lefschetz, ModifiedSpecializationsShareThePattern)
{
    const auto forms = family_weight_forms();
    const std::vector<std::pair<long, long>> specs{{-1, -2}, {1, -4}, {2, -5}};
    for (const auto& [a, b] : specs) {
        ASSERT_TRUE(same_vanishing_pattern(forms, a, b)) << a << "," << b;
        const auto L = lie::modified_family(a, b);
        const auto r = hard_lefschetz(L, parse_two_form(L, kOmega));
        EXPECT_TRUE(r.holds) << a << "," << b;
    }
}

TEST(Lefschetz, KodairaThurstonFailsInDegreeOne)
{
    const auto L = lie::kodaira_thurston();
    const VectorQ w = parse_two_form(L, "X^W + Y^Z");
    const auto s = symplectic_check(L, w);
    ASSERT_TRUE(s.closed && s.nondegenerate);
    const auto r = hard_lefschetz(L, w);
    EXPECT_FALSE(r.holds);
    ASSERT_TRUE(r.failing_degree.has_value());
    EXPECT_EQ(*r.failing_degree, 1u);
}

TEST(Lefschetz, RejectsNonClosedForm)
{
    const auto L = lie::example2();
    EXPECT_THROW(hard_lefschetz(L, parse_two_form(L, "A^X1 + B^Z1")), std::invalid_argument);
}

TEST(Ring, TorusTimesCP3Relations)
{
    const auto L = lie::example2();
    const CohomologyRing H(L);
    const auto& C = H.complex();
    const VectorQ t1 = H.class_of(1, C.dual(L.index_of("A")));
    const VectorQ t2 = H.class_of(1, C.dual(L.index_of("B")));
    const VectorQ h = H.class_of(2, parse_two_form(L, "X1^Z1 + X2^Z2 + X3^Z3"));
    const auto r = torus_cp3_check(H, t1, t2, h);
    EXPECT_TRUE(r.t_squares_vanish);
    EXPECT_TRUE(r.h4_vanishes);
    EXPECT_TRUE(r.h3_nonzero);
    EXPECT_TRUE(r.monomials_independent);
}

TEST(Weights, VanishingPattern)
{
    const auto forms = family_weight_forms();
    // forced: subsets of {A, B} times {}, {Xi, Zi}, {X1, X2, X3}, {Z1, Z2, Z3} combinations
    EXPECT_EQ(vanishing_subsets(forms).size(), 4u * 10u);
    EXPECT_TRUE(same_vanishing_pattern(forms, -1, -2));
    EXPECT_FALSE(same_vanishing_pattern(forms, 1, 1));
    EXPECT_FALSE(same_vanishing_pattern(forms, 1, -1));
    for (const auto& d : subset_weight_directions(forms)) EXPECT_TRUE(d[0] > 0 || (d[0] == 0 && d[1] > 0));
}
