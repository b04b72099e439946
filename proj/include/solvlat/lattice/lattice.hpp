#pragma once

#include "solvlat/exact/matrix.hpp"
#include "solvlat/exact/roots.hpp"
#include "solvlat/obstruct/report.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace solvlat::lattice {

using exact::Integer;
using exact::MatrixQ;
using exact::MatrixZ;
using exact::Rational;
using exact::RootInterval;
using exact::UniPoly;
using Json = obstruct::Json;

/// x^3 - p x^2 + q x - 1
struct CubicSpec {
    Integer p;
    Integer q;
};

UniPoly cubic_polynomial(const CubicSpec& s);

struct CubicCheck {
    bool ok;
    std::string reason;
};

/// Three distinct positive real roots, none equal to 1.
CubicCheck validate_cubic(const CubicSpec& s);

/// Companion matrix with charpoly x^3 - p x^2 + q x - 1. Throws std::invalid_argument for an invalid cubic.
MatrixZ companion(const CubicSpec& s);

/// Action on the wedge basis (e2^e3, e1^e3, e1^e2): entries are 2x2 minors.
/// Throws std::invalid_argument unless m is 3x3.
MatrixZ compound2(const MatrixZ& m);

struct LambdaData {
    /// ascending roots x1 < x2 < x3; lambda_i = ln x_i
    std::array<RootInterval, 3> roots;
    std::array<std::pair<double, double>, 3> lambda;
    bool sum_zero;   // product of the roots is 1
    bool nonzero;    // no root equals 1
    bool distinct;
    /// numeric only: smallest |a l1 + b l2| over 0 < max(|a|,|b|) <= 10
    double advisory_min_combination;
    bool advisory_independent;
};

/// Throws std::invalid_argument for an invalid cubic.
LambdaData weights_from_cubic(const CubicSpec& s, const Rational& width);

/// x1^a x2^b != 1 for every listed direction (a, b), decided by exact interval powers.
struct PatternCertificate {
    bool ok;
    std::optional<std::array<long, 2>> undecided;
};
PatternCertificate certify_weight_directions(const CubicSpec& s, const std::vector<std::array<long, 2>>& directions);

struct ClosureEntry {
    std::size_t left;
    std::size_t right;
    std::vector<Rational> product;     // lattice coordinates of u * v
    std::vector<Rational> commutator;  // lattice coordinates of [u, v]
};

struct LatticeCertificate {
    CubicSpec cubic;
    std::array<RootInterval, 3> roots;
    MatrixZ c;
    MatrixZ c2;
    /// center generators are center_scale * (wedge unit)
    Rational center_scale;
    /// columns: source-table Z1, Z2, Z3 in wedge coordinates
    MatrixQ center_change;
    std::vector<ClosureEntry> closure;
    Integer commutator_index;
    Integer v_index;
};

/// Throws std::invalid_argument for an invalid cubic and std::logic_error if a closure check fails.
LatticeCertificate build_lattice(const CubicSpec& s);

struct VerifyResult {
    bool ok;
    std::string failing_check;
    Integer commutator_index;
};

VerifyResult verify_certificate(const LatticeCertificate& cert);

Json to_json(const LatticeCertificate& cert);
/// Throws std::invalid_argument on schema errors.
LatticeCertificate certificate_from_json(const Json& j);

/// Lattice coordinates of the 6 generators and their negatives (indices 6..11).
std::vector<std::vector<Rational>> generator_coordinates();

}  // namespace solvlat::lattice
