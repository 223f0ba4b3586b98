#pragma once

#include "placeode/upoly.hpp"

#include <utility>
#include <vector>

namespace placeode {

/// Factors a nonzero rational polynomial into monic irreducible factors over Q with
/// multiplicities. Constant input yields an empty list. Factors are sorted by degree,
/// then by coefficients.
std::vector<std::pair<QPoly, int>> factor_rational(const QPoly& f);

/// Primitive integer polynomial proportional to f (positive leading coefficient).
std::vector<Integer> primitive_integer(const QPoly& f);

/// Rational roots of f, ascending, without multiplicity.
std::vector<Rational> rational_roots(const QPoly& f);

} // namespace placeode
