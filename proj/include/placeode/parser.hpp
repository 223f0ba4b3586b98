#pragma once

#include "placeode/solver.hpp"

#include <string_view>

namespace placeode {

/// Polynomial in y and y' (alias z): integers, p/q, + - * / ^, parentheses.
BiPoly parse_polynomial(std::string_view text);

/// Exact value: rationals, sqrt(q), root(<poly in x>, k) with 1-based k, and + - * / ^.
AlgebraicNumber parse_value(std::string_view text);

/// "c0, c1"
InitialTuple parse_initial_tuple(std::string_view text);

} // namespace placeode
