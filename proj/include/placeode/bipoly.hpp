#pragma once

#include "placeode/algebraic.hpp"
#include "placeode/series.hpp"
#include "placeode/tower.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace placeode {

/// Sparse polynomial in y and z (z stands for y'). Keys are (deg_y, deg_z).
class BiPoly {
public:
    using Key = std::pair<int, int>;

    BiPoly() = default;
    explicit BiPoly(std::map<Key, AlgebraicNumber> terms);
    static BiPoly constant(const AlgebraicNumber& a);
    static BiPoly monomial(const AlgebraicNumber& a, int i, int j);
    static BiPoly y() { return monomial(AlgebraicNumber(1), 1, 0); }
    static BiPoly z() { return monomial(AlgebraicNumber(1), 0, 1); }

    const std::map<Key, AlgebraicNumber>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    AlgebraicNumber coeff(int i, int j) const;
    int deg_y() const;
    int deg_z() const;
    int total_degree() const;
    /// Lowest total degree of a monomial (-1 for zero).
    int lowest_degree() const;

    BiPoly operator-() const;
    friend BiPoly operator+(const BiPoly& a, const BiPoly& b);
    friend BiPoly operator-(const BiPoly& a, const BiPoly& b);
    friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
    friend BiPoly operator*(const AlgebraicNumber& s, const BiPoly& p);
    friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.t_ == b.t_; }
    friend bool operator!=(const BiPoly& a, const BiPoly& b) { return !(a == b); }
    BiPoly pow(int k) const;

    AlgebraicNumber eval(const AlgebraicNumber& y, const AlgebraicNumber& z) const;
    BiPoly derivative_z() const;
    BiPoly derivative_y() const;
    /// F(y + c0, z + c1).
    BiPoly translate(const AlgebraicNumber& c0, const AlgebraicNumber& c1) const;
    /// F(v, z) as a polynomial in z.
    UPoly slice_y(const AlgebraicNumber& v) const;
    /// F(y, v) as a polynomial in y.
    UPoly slice_z(const AlgebraicNumber& v) const;
    /// Coefficient of z^j as a polynomial in y.
    UPoly coeff_z(int j) const;
    /// Substitutes the series pair; the result is certified as far as the inputs allow.
    TruncatedSeries eval_series(const TruncatedSeries& A, const TruncatedSeries& B) const;

    /// Field containing every coefficient.
    FieldPtr field() const;
    /// true if all coefficients are rational.
    bool is_rational() const;
    /// Rescaled so that the leading coefficient (highest z, then y) is one.
    BiPoly monic() const;

    /// Text in the input grammar with y' for z, e.g. "y'^2 - y^3 - y^2".
    std::string str() const;

private:
    std::map<Key, AlgebraicNumber> t_;
};

struct Point {
    AlgebraicNumber y, z;
    int multiplicity = 1;
};

/// Numeric order of points (first coordinate, then second).
bool point_less(const Point& a, const Point& b);
bool same_point(const Point& a, const Point& b);

BiPoly separant(const BiPoly& F);
UPoly univariate_slice_z(const BiPoly& F, const AlgebraicNumber& v);
UPoly univariate_slice_y(const BiPoly& F, const AlgebraicNumber& v);

/// Quotient of exact division, or nothing when g does not divide f.
std::optional<BiPoly> exact_divide(const BiPoly& f, const BiPoly& g);

/// Res_z(F, G) as a polynomial in y.
UPoly resultant_z(const BiPoly& F, const BiPoly& G);

/// Common affine zeros with the resultant multiplicity of their first coordinate.
std::vector<Point> solve_system(const BiPoly& F, const BiPoly& G);

/// Power series root w(x) of H(x, w) = 0 with w(0) = 0, given H(0,0) = 0 and H_w(0,0) != 0.
TruncatedSeries regular_branch(const BiPoly& H, int n);

/// Lowest total degree of F translated to c.
int multiplicity_at(const BiPoly& F, const AlgebraicNumber& c0, const AlgebraicNumber& c1);

/// A nontrivial factor of F over the algebraic closure, if any.
std::optional<BiPoly> find_factor(const BiPoly& F);
/// Throws NotIrreducible, NoDerivative, TrivialLinear or InvalidInput.
void validate_input(const BiPoly& F);

} // namespace placeode
