#pragma once

#include "placeode/bipoly.hpp"

#include <string>
#include <utility>
#include <vector>

namespace placeode {

/// Local parametrization (A, B) of the curve at (c0, c1) with A = c0 + lambda*t^e.
/// lambda is 1 whenever its e-th root could be absorbed; see places_at.
struct Place {
    AlgebraicNumber c0, c1;
    int e = 1;
    TruncatedSeries A, B;
    /// min(ord(A - c0), ord(B - c1))
    int order = 1;
    /// Multiplicity of the curve at the center.
    int center_multiplicity = 1;

    /// Coefficient of t^e in A.
    AlgebraicNumber lambda() const { return A[e]; }
    /// ord(B - c1); throws InsufficientPrecision if nothing is certified.
    int b_order() const;
};

struct Edge {
    /// w ~ x^slope along this edge
    Rational slope;
    /// Support points (deg_y, deg_z) on the edge, by increasing deg_z.
    std::vector<std::pair<int, int>> points;
};

/// Lower hull edges of the support of H relevant to branches w(x) -> 0; H(0,0) = 0 required.
std::vector<Edge> newton_polygon(const BiPoly& H);

/// Places centered at (c0, c1), one per equivalence class, with B certified to t^N.
std::vector<Place> places_at(const BiPoly& F, const AlgebraicNumber& c0, const AlgebraicNumber& c1, int N);

/// 2 (deg_y F - 1) deg_z F + 1
int default_bound(const BiPoly& F);

std::pair<AlgebraicNumber, AlgebraicNumber> tangent_vector(const Place& p);

enum class RamificationKind { none, z_ramification, y_ramification, singular };
std::string to_string(RamificationKind k);
RamificationKind ramification_kind(const Place& p);

/// true when q arises from p by t -> mu*t on the jointly certified coefficients.
bool equivalent(const Place& p, const Place& q);

/// gcd of e and the exponents of B - c1 with nonzero coefficient.
int support_gcd(const Place& p);

} // namespace placeode
