#pragma once

#include "placeode/parser.hpp"
#include "placeode/solver.hpp"
#include "placeode/tower.hpp"

namespace fixtures {

using namespace placeode;

inline Rational q(long n, long d = 1)
{
    Rational r(n, d);
    r.canonicalize();
    return r;
}

inline AlgebraicNumber an(long n, long d = 1) { return AlgebraicNumber(q(n, d)); }

inline BiPoly nodal_cubic() { return parse_polynomial("(y')^2 - y^3 - y^2"); }
inline BiPoly sextic() { return parse_polynomial("((y'-1)^2 + y^2)^3 - 4*(y'-1)^2*y^2"); }
inline BiPoly cusp_family(int m) { return parse_polynomial("(y'-1)^2 - y^" + std::to_string(2 * m + 1)); }

/// Coefficient vector of a series from text values, e.g. {"0", "1", "0", "1/6"}.
inline TruncatedSeries series(const std::vector<std::string>& cs, int trunc)
{
    std::vector<AlgebraicNumber> v;
    for (const auto& c : cs)
        v.push_back(parse_value(c));
    return TruncatedSeries(v, trunc);
}

} // namespace fixtures
