#pragma once

#include "placeode/solver.hpp"

#include "json.hpp"

namespace placeode {

using Json = nlohmann::ordered_json;

/// {"tower": [{"label", "minpoly", "enclosure"}...], "level": d, "coeffs": nested "p/q"}
Json to_json(const AlgebraicNumber& a);
/// Rebuilds the tower (roots picked by the recorded enclosures) and the value.
AlgebraicNumber algebraic_from_json(const Json& j);

/// {"coeffs": [...], "trunc": N}
Json to_json(const TruncatedSeries& s);
TruncatedSeries series_from_json(const Json& j);

Json to_json(const Point& p);
Json to_json(const Place& p);
Json to_json(const SolutionTruncation& s);
Json to_json(const CriticalPoint& c);
Json to_json(const Classification& c);

} // namespace placeode
