#include "solvlat/lattice/lattice.hpp"

#include "solvlat/exact/smith.hpp"
#include "solvlat/lie/catalog.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace solvlat::lattice {

namespace {

using Vec = std::vector<Rational>;

// wedge coordinates on (e2^e3, e1^e3, e1^e2)
std::array<Rational, 3> wedge(const Rational* a, const Rational* b)
{
    return {a[1] * b[2] - a[2] * b[1], a[0] * b[2] - a[2] * b[0], a[0] * b[1] - a[1] * b[0]};
}

/// Algebra coordinates (V then wedge) from lattice coordinates.
Vec to_algebra(const Vec& x, const Rational& scale)
{
    Vec y = x;
    for (int k = 3; k < 6; ++k) y[k] *= scale;
    return y;
}

Vec to_lattice(const Vec& y, const Rational& scale)
{
    Vec x = y;
    for (int k = 3; k < 6; ++k) x[k] /= scale;
    return x;
}

Vec bracket(const Vec& u, const Vec& v)
{
    const auto w = wedge(u.data(), v.data());
    return {0, 0, 0, w[0], w[1], w[2]};
}

/// u * v = u + v + [u, v]/2 in the 2-step group.
Vec bch(const Vec& u, const Vec& v)
{
    const Vec b = bracket(u, v);
    Vec out(6);
    for (int k = 0; k < 6; ++k) out[k] = u[k] + v[k] + b[k] / 2;
    return out;
}

bool integral(const Vec& v)
{
    for (const auto& x : v)
        if (!exact::is_integer(x)) return false;
    return true;
}

ClosureEntry closure_entry(std::size_t i, std::size_t j, const Rational& scale)
{
    const auto gens = generator_coordinates();
    const Vec u = to_algebra(gens[i], scale), v = to_algebra(gens[j], scale);
    return {i, j, to_lattice(bch(u, v), scale), to_lattice(bracket(u, v), scale)};
}

MatrixQ as_rational(const MatrixZ& m) { return exact::to_rational(m); }

std::pair<Integer, Integer> commutator_indices(const MatrixZ& c, const MatrixZ& c2, const Rational& scale)
{
    // central: [exp ei, exp ej] and [gamma, exp(scale w_k)]; V part: [gamma, exp ei]
    MatrixZ central(3, 6);
    const Rational e[3][3] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    const std::pair<int, int> pairs[3] = {{1, 2}, {0, 2}, {0, 1}};
    for (int s = 0; s < 3; ++s) {
        const auto w = wedge(e[pairs[s].first], e[pairs[s].second]);
        for (int r = 0; r < 3; ++r) {
            const Rational coord = w[r] / scale;
            if (!exact::is_integer(coord)) return {0, 0};
            central(r, s) = coord.get_num();
        }
    }
    MatrixZ vpart(3, 3);
    for (int k = 0; k < 3; ++k)
        for (int r = 0; r < 3; ++r) {
            central(r, 3 + k) = c2(r, k) - (r == k ? 1 : 0);
            vpart(r, k) = c(r, k) - (r == k ? 1 : 0);
        }
    return {exact::lattice_index(central), exact::lattice_index(vpart)};
}

MatrixQ source_center_change()
{
    // Z1 = W1/2, Z2 = W2, Z3 = -W3
    MatrixQ m(3, 3);
    m(0, 0) = exact::make_rational(1, 2);
    m(1, 1) = 1;
    m(2, 2) = -1;
    return m;
}

std::string check_center_change(const MatrixQ& change)
{
    const auto L = lie::example2();
    const char* xs[3] = {"X1", "X2", "X3"};
    const char* zs[3] = {"Z1", "Z2", "Z3"};
    const Rational e[3][3] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) {
            const auto& b = L.bracket_basis(L.index_of(xs[i]), L.index_of(xs[j]));
            exact::VectorQ z(3);
            for (int k = 0; k < 3; ++k) z[k] = b[L.index_of(zs[k])];
            const auto mapped = change.apply(z);
            const auto w = wedge(e[i], e[j]);
            for (int k = 0; k < 3; ++k)
                if (mapped[k] != w[k]) return "center_change";
        }
    return {};
}

std::string mat_str(const Rational& r) { return exact::to_fraction_string(r); }

Json matrix_json(const MatrixZ& m)
{
    Json out = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).get_str());
        out.push_back(row);
    }
    return out;
}

Json matrix_json(const MatrixQ& m)
{
    Json out = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(mat_str(m(r, c)));
        out.push_back(row);
    }
    return out;
}

Json vec_json(const Vec& v)
{
    Json out = Json::array();
    for (const auto& x : v) out.push_back(mat_str(x));
    return out;
}

Vec vec_from(const Json& j)
{
    Vec v;
    for (const auto& x : j) v.push_back(exact::parse_rational(x.get<std::string>()));
    return v;
}

MatrixZ matz_from(const Json& j)
{
    const std::size_t rows = j.size(), cols = rows ? j[0].size() : 0;
    MatrixZ m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        if (j[r].size() != cols) throw std::invalid_argument("certificate: ragged matrix");
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = Integer(j[r][c].get<std::string>());
    }
    return m;
}

MatrixQ matq_from(const Json& j)
{
    const std::size_t rows = j.size(), cols = rows ? j[0].size() : 0;
    MatrixQ m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = exact::parse_rational(j[r][c].get<std::string>());
    return m;
}

std::pair<Rational, Rational> power_interval(const RootInterval& iv, long a)
{
    auto pw = [](Rational x, long k) {
        Rational r = 1;
        for (long i = 0; i < k; ++i) r *= x;
        return r;
    };
    if (a >= 0) return {pw(iv.lo, a), pw(iv.hi, a)};
    return {1 / pw(iv.hi, -a), 1 / pw(iv.lo, -a)};
}

}  // namespace

UniPoly cubic_polynomial(const CubicSpec& s)
{
    return UniPoly(std::vector<Rational>{-1, Rational(s.q), Rational(-s.p), 1});
}

CubicCheck validate_cubic(const CubicSpec& s)
{
    const UniPoly f = cubic_polynomial(s);
    if (exact::gcd(f, f.derivative()).degree() > 0) return {false, "repeated root"};
    const Rational bound = exact::root_bound(f) + 1;
    const int real = exact::sturm_count(f, -bound, bound);
    if (real != 3) return {false, "only " + std::to_string(real) + " real root" + (real == 1 ? "" : "s")};
    if (s.p == s.q) return {false, "root 1 gives a zero weight"};
    if (exact::sturm_count(f, 0, bound) != 3) return {false, "a root is not positive"};
    return {true, {}};
}

MatrixZ companion(const CubicSpec& s)
{
    const auto v = validate_cubic(s);
    if (!v.ok) throw std::invalid_argument("invalid cubic: " + v.reason);
    MatrixZ c(3, 3);
    c(1, 0) = 1;
    c(2, 1) = 1;
    c(0, 2) = 1;
    c(1, 2) = -s.q;
    c(2, 2) = s.p;
    return c;
}

MatrixZ compound2(const MatrixZ& m)
{
    if (m.rows() != 3 || m.cols() != 3) throw std::invalid_argument("compound2: expected a 3x3 matrix");
    const std::pair<int, int> pairs[3] = {{1, 2}, {0, 2}, {0, 1}};
    MatrixZ out(3, 3);
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) {
            const auto [i, j] = pairs[r];
            const auto [a, b] = pairs[c];
            out(r, c) = m(i, a) * m(j, b) - m(i, b) * m(j, a);
        }
    return out;
}

LambdaData weights_from_cubic(const CubicSpec& s, const Rational& width)
{
    const auto v = validate_cubic(s);
    if (!v.ok) throw std::invalid_argument("invalid cubic: " + v.reason);
    const UniPoly f = cubic_polynomial(s);
    const auto iso = exact::isolate_roots(f, width);
    if (iso.intervals.size() != 3) throw std::logic_error("weights_from_cubic: isolation lost a root");

    LambdaData out{};
    constexpr double inf = std::numeric_limits<double>::infinity();
    for (int i = 0; i < 3; ++i) {
        out.roots[i] = iso.intervals[i];
        const double lo = iso.intervals[i].lo.get_d();  // truncation rounds a positive value down
        const double hi = std::nextafter(iso.intervals[i].hi.get_d(), inf);
        out.lambda[i] = {std::nextafter(std::nextafter(std::log(lo), -inf), -inf),
                         std::nextafter(std::nextafter(std::log(hi), inf), inf)};
    }
    out.sum_zero = f.coeff(0) == -1 && f.leading() == 1;
    out.nonzero = s.p != s.q;
    out.distinct = true;

    double mid[2];
    for (int i = 0; i < 2; ++i) mid[i] = (out.lambda[i].first + out.lambda[i].second) / 2;
    double best = inf;
    for (int a = -10; a <= 10; ++a)
        for (int b = -10; b <= 10; ++b) {
            if (a == 0 && b == 0) continue;
            best = std::min(best, std::abs(a * mid[0] + b * mid[1]));
        }
    out.advisory_min_combination = best;
    out.advisory_independent = best > 1e-12;
    return out;
}

PatternCertificate certify_weight_directions(const CubicSpec& s, const std::vector<std::array<long, 2>>& directions)
{
    const auto v = validate_cubic(s);
    if (!v.ok) throw std::invalid_argument("invalid cubic: " + v.reason);
    auto iso = exact::isolate_roots(cubic_polynomial(s), exact::make_rational(1, 1000));
    for (const auto& d : directions) {
        Rational width = exact::make_rational(1, 1000);
        bool decided = false;
        for (int round = 0; round < 40 && !decided; ++round) {
            const auto p1 = power_interval(iso.intervals[0], d[0]);
            const auto p2 = power_interval(iso.intervals[1], d[1]);
            const Rational lo = p1.first * p2.first, hi = p1.second * p2.second;
            decided = hi < 1 || lo > 1;
            if (!decided) {
                width /= 1024;
                iso.refine(width);
            }
        }
        if (!decided) return {false, d};
    }
    return {true, std::nullopt};
}

std::vector<std::vector<Rational>> generator_coordinates()
{
    std::vector<std::vector<Rational>> out;
    for (int sign : {1, -1})
        for (int k = 0; k < 6; ++k) {
            Vec v(6, 0);
            v[k] = sign;
            out.push_back(v);
        }
    return out;
}

LatticeCertificate build_lattice(const CubicSpec& s)
{
    LatticeCertificate cert;
    cert.cubic = s;
    cert.c = companion(s);
    cert.c2 = compound2(cert.c);
    const auto iso = exact::isolate_roots(cubic_polynomial(s), exact::make_rational(1, 1000000));
    for (int i = 0; i < 3; ++i) cert.roots[i] = iso.intervals.at(i);
    cert.center_scale = exact::make_rational(1, 2);
    cert.center_change = source_center_change();
    const std::size_t n = generator_coordinates().size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            auto e = closure_entry(i, j, cert.center_scale);
            if (!integral(e.product) || !integral(e.commutator))
                throw std::logic_error("build_lattice: product leaves the lattice");
            cert.closure.push_back(std::move(e));
        }
    std::tie(cert.commutator_index, cert.v_index) = commutator_indices(cert.c, cert.c2, cert.center_scale);
    return cert;
}

VerifyResult verify_certificate(const LatticeCertificate& cert)
{
    auto fail = [](std::string what) { return VerifyResult{false, std::move(what), 0}; };
    if (!validate_cubic(cert.cubic).ok) return fail("cubic");

    const UniPoly f = cubic_polynomial(cert.cubic);
    Rational prev_hi = 0;
    for (const auto& iv : cert.roots) {
        if (iv.lo < prev_hi || iv.lo <= 0) return fail("roots");
        if (iv.exact() ? f.evaluate(iv.lo) != 0 : exact::sturm_count(f, iv.lo, iv.hi) != 1) return fail("roots");
        prev_hi = iv.hi;
    }

    if (cert.c.rows() != 3 || cert.c.cols() != 3 || cert.c2.rows() != 3 || cert.c2.cols() != 3)
        return fail("shape");
    if (exact::determinant(cert.c) != 1 || exact::determinant(cert.c2) != 1) return fail("determinant");
    if (exact::charpoly(cert.c) != f) return fail("charpoly C");
    const UniPoly f2(std::vector<Rational>{-1, Rational(cert.cubic.p), Rational(-cert.cubic.q), 1});
    if (exact::charpoly(cert.c2) != f2) return fail("charpoly C2");
    if (compound2(cert.c) != cert.c2) return fail("compound2");
    if (!check_center_change(cert.center_change).empty()) return fail("center_change");
    if (cert.center_scale == 0) return fail("closure");

    const std::size_t n = generator_coordinates().size();
    if (cert.closure.size() != n * n) return fail("closure");
    for (const auto& e : cert.closure) {
        if (e.left >= n || e.right >= n) return fail("closure");
        const auto fresh = closure_entry(e.left, e.right, cert.center_scale);
        if (fresh.product != e.product || fresh.commutator != e.commutator) return fail("closure");
        if (!integral(e.product) || !integral(e.commutator)) return fail("closure");
    }

    // gamma = diag(C, C2) preserves the lattice and the bracket
    const MatrixQ c = as_rational(cert.c), c2 = as_rational(cert.c2);
    const auto gens = generator_coordinates();
    for (std::size_t g = 0; g < 6; ++g) {
        const Vec y = to_algebra(gens[g], cert.center_scale);
        const auto a = c.apply(std::span<const Rational>(y.data(), 3));
        const auto w = c2.apply(std::span<const Rational>(y.data() + 3, 3));
        Vec img{a[0], a[1], a[2], w[0], w[1], w[2]};
        if (!integral(to_lattice(img, cert.center_scale))) return fail("gamma_invariance");
    }
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            const auto ci = c.column(i), cj = c.column(j);
            const auto lhs = wedge(ci.data(), cj.data());
            const Rational e[3][3] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
            const auto w = wedge(e[i], e[j]);
            const auto rhs = c2.apply(std::span<const Rational>(w.data(), 3));
            for (int k = 0; k < 3; ++k)
                if (lhs[k] != rhs[k]) return fail("gamma_automorphism");
        }

    const auto [index, vindex] = commutator_indices(cert.c, cert.c2, cert.center_scale);
    if (index == 0 || vindex == 0) return fail("commutator_index");
    if (index != cert.commutator_index || vindex != cert.v_index) return {false, "commutator_index", index};
    return {true, {}, index};
}

Json to_json(const LatticeCertificate& cert)
{
    Json roots = Json::array();
    for (const auto& iv : cert.roots) roots.push_back({mat_str(iv.lo), mat_str(iv.hi)});
    Json closure = Json::array();
    for (const auto& e : cert.closure)
        closure.push_back(
            {{"left", e.left}, {"right", e.right}, {"product", vec_json(e.product)}, {"commutator", vec_json(e.commutator)}});
    return {
        {"cubic", {{"p", cert.cubic.p.get_str()}, {"q", cert.cubic.q.get_str()}}},
        {"roots", roots},
        {"C", matrix_json(cert.c)},
        {"C2", matrix_json(cert.c2)},
        {"lambda_basis",
         {{"v_basis", "e1, e2, e3 with gamma acting by C"},
          {"center_basis", "center_scale * (e2^e3, e1^e3, e1^e2)"},
          {"center_scale", mat_str(cert.center_scale)},
          {"center_change", matrix_json(cert.center_change)}}},
        {"group", "Z x| exp(Lambda), times Z for the central factor B"},
        {"closure", closure},
        {"prop1_index", cert.commutator_index.get_si()},
        {"v_index", cert.v_index.get_si()},
    };
}

LatticeCertificate certificate_from_json(const Json& j)
{
    try {
        LatticeCertificate cert;
        cert.cubic = {Integer(j.at("cubic").at("p").get<std::string>()), Integer(j.at("cubic").at("q").get<std::string>())};
        const auto& roots = j.at("roots");
        if (roots.size() != 3) throw std::invalid_argument("certificate: expected three roots");
        for (int i = 0; i < 3; ++i) {
            cert.roots[i].lo = exact::parse_rational(roots[i].at(0).get<std::string>());
            cert.roots[i].hi = exact::parse_rational(roots[i].at(1).get<std::string>());
        }
        cert.c = matz_from(j.at("C"));
        cert.c2 = matz_from(j.at("C2"));
        cert.center_scale = exact::parse_rational(j.at("lambda_basis").at("center_scale").get<std::string>());
        cert.center_change = matq_from(j.at("lambda_basis").at("center_change"));
        for (const auto& e : j.at("closure"))
            cert.closure.push_back({e.at("left").get<std::size_t>(), e.at("right").get<std::size_t>(),
                                    vec_from(e.at("product")), vec_from(e.at("commutator"))});
        cert.commutator_index = Integer(j.at("prop1_index").get<long>());
        cert.v_index = Integer(j.at("v_index").get<long>());
        return cert;
    } catch (const Json::exception& e) {
        throw std::invalid_argument(std::string("certificate schema: ") + e.what());
    }
}

}  // namespace solvlat::lattice
