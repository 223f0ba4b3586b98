#pragma once

#include "placeode/algebraic.hpp"

#include <string>
#include <utility>
#include <vector>

namespace placeode {

/// Maximum absolute degree of any constructed field (default 64).
int degree_cap();
void set_degree_cap(int cap);

/// Lifts every coefficient into one field containing them and K.
UPoly lift_poly(const UPoly& f, const FieldPtr& K);
FieldPtr coefficient_field(const UPoly& f, const FieldPtr& K = Field::rationals());

/// Norm of f over Q, i.e. the product of the conjugates of f under the embeddings of K.
QPoly norm(const UPoly& f, const FieldPtr& K);

/// Monic irreducible factors over K (the coefficient field of f joined with K), with
/// multiplicities.
std::vector<std::pair<UPoly, int>> factor_over(const UPoly& f, const FieldPtr& K);

/// Roots of p lying in K, with multiplicities, in the numeric order.
std::vector<std::pair<AlgebraicNumber, int>> roots_in_tower(const UPoly& p, const FieldPtr& K);

struct Adjoined {
    FieldPtr field;
    AlgebraicNumber root;
};

/// Extends K by a root of p; returns K itself with a root when p already has one in K.
/// The chosen root is the last one in the numeric order of its irreducible factor.
Adjoined adjoin_root(const FieldPtr& K, const UPoly& p);

/// One field per root of the monic irreducible g over K (deg g >= 2), in the numeric
/// order of the roots.
std::vector<Adjoined> adjoin_all(const FieldPtr& K, const UPoly& g, const std::string& label = "");

/// Every complex root of p with multiplicity, extending K as needed; numeric order.
/// Both roots of an irreducible quadratic share one field.
std::vector<std::pair<AlgebraicNumber, int>> all_roots(const UPoly& p, const FieldPtr& K = Field::rationals());

/// Principal square root of a rational.
AlgebraicNumber sqrt_of(const Rational& q);
/// The k-th (1-based) distinct root of p in the numeric order.
AlgebraicNumber indexed_root(const QPoly& p, int k);

UPoly to_upoly(const QPoly& p);

} // namespace placeode
