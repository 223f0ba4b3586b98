#pragma once

#include "placeode/numeric.hpp"
#include "placeode/rational.hpp"
#include "placeode/upoly.hpp"

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

namespace placeode {

class Field;
using FieldPtr = std::shared_ptr<const Field>;

/// An exact element of a field in a tower over Q. Internally a vector of rational
/// coordinates in the power basis of the field's primitive element; values lying in Q
/// are always stored in the rational field.
class AlgebraicNumber {
public:
    AlgebraicNumber();
    AlgebraicNumber(long v);
    AlgebraicNumber(int v) : AlgebraicNumber(static_cast<long>(v)) {}
    AlgebraicNumber(const Rational& q);
    AlgebraicNumber(const Integer& z) : AlgebraicNumber(Rational(z)) {}
    /// Value sum flat[i] * eta^i in the field; reduced modulo the minimal polynomial.
    AlgebraicNumber(FieldPtr field, std::vector<Rational> flat);

    const FieldPtr& field() const { return field_; }
    const std::vector<Rational>& flat() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    bool is_rational() const;
    Rational to_rational() const; // throws unless is_rational()
    /// Depth of the tower level holding this value (0 for rationals).
    int level() const;

    /// Same value represented in a descendant (or otherwise embedding) field.
    AlgebraicNumber lifted(const FieldPtr& target) const;
    /// Coefficients over the parent level in powers of the level generator.
    std::vector<AlgebraicNumber> nested() const;

    /// Box of radius <= 2^-bits around the value.
    Ball enclosure(long bits) const;
    /// Exact text, e.g. "1 + 2/9*sqrt(6)".
    std::string str() const;
    /// Signed terms of str(); a single term means no parentheses are needed.
    std::vector<std::string> terms() const;

    AlgebraicNumber inverse() const;
    AlgebraicNumber pow(long k) const;

    friend AlgebraicNumber operator+(const AlgebraicNumber& a, const AlgebraicNumber& b);
    friend AlgebraicNumber operator-(const AlgebraicNumber& a, const AlgebraicNumber& b);
    friend AlgebraicNumber operator*(const AlgebraicNumber& a, const AlgebraicNumber& b);
    friend AlgebraicNumber operator/(const AlgebraicNumber& a, const AlgebraicNumber& b);
    AlgebraicNumber operator-() const;
    AlgebraicNumber& operator+=(const AlgebraicNumber& o) { return *this = *this + o; }
    AlgebraicNumber& operator-=(const AlgebraicNumber& o) { return *this = *this - o; }
    AlgebraicNumber& operator*=(const AlgebraicNumber& o) { return *this = *this * o; }
    AlgebraicNumber& operator/=(const AlgebraicNumber& o) { return *this = *this / o; }
    friend bool operator==(const AlgebraicNumber& a, const AlgebraicNumber& b);
    friend bool operator!=(const AlgebraicNumber& a, const AlgebraicNumber& b) { return !(a == b); }

private:
    FieldPtr field_;
    std::vector<Rational> c_;
};

inline bool is_zero(const AlgebraicNumber& a) { return a.is_zero(); }

using UPoly = Poly<AlgebraicNumber>;

/// A simple extension L = K(alpha) of its parent K, also described as Q(eta) with the
/// primitive element eta = alpha + shift * eta_K. Immutable once built.
class Field : public std::enable_shared_from_this<Field> {
public:
    static const FieldPtr& rationals();

    const FieldPtr& parent() const { return parent_; }
    int depth() const { return depth_; }
    /// Absolute degree over Q.
    int degree() const { return M_.degree(); }
    int relative_degree() const { return static_cast<int>(minpoly_.size()) - 1; }
    const std::string& label() const { return label_; }
    /// Monic minimal polynomial of the generator over the parent, lowest coefficient first.
    const std::vector<AlgebraicNumber>& minpoly() const { return minpoly_; }
    /// Minimal polynomial of the primitive element over Q.
    const QPoly& primitive_minpoly() const { return M_; }
    const Rational& shift() const { return shift_; }
    /// The level generator alpha as an element of this field.
    AlgebraicNumber generator() const;
    /// The primitive element eta.
    AlgebraicNumber primitive_element() const;
    /// Enclosure of eta with radius <= 2^-bits.
    IsolatedRoot eta_enclosure(long bits) const;
    /// Position of eta among the roots of M in the numeric order.
    int root_index() const { return root_index_; }

    /// true if this field is other or one of its ancestors.
    bool is_ancestor_of(const Field& other) const;
    /// Chain of levels from the first extension up to this field.
    std::vector<const Field*> chain() const;

    // Construction data; use the tower functions instead of calling this directly.
    struct Spec {
        FieldPtr parent;
        std::string label;
        std::vector<AlgebraicNumber> minpoly;
        Rational shift;
        QPoly M;
        std::vector<Rational> parent_eta; // eta_parent in the eta basis
        std::vector<Rational> alpha;      // alpha in the eta basis
        IsolatedRoot root;
        int root_index = 0;
        bool bare = false; // no numeric identification (internal helper fields)
    };
    explicit Field(Spec s);
    /// Field Q[x]/(M) with no root chosen; used for intermediate algebra only.
    static FieldPtr bare(const QPoly& M);

    const std::vector<Rational>& parent_eta() const { return parent_eta_; }
    const std::vector<Rational>& alpha_flat() const { return alpha_; }
    bool is_bare() const { return bare_; }

    /// Reduces a flat coordinate vector modulo M.
    std::vector<Rational> reduce(std::vector<Rational> v) const;
    std::vector<Rational> multiply(const std::vector<Rational>& a, const std::vector<Rational>& b) const;
    std::vector<Rational> invert(const std::vector<Rational>& a) const;
    /// Inverse basis-change: flat coordinates to nested ones (parent degree blocks).
    std::vector<Rational> to_nested(const std::vector<Rational>& flat) const;
    /// Nested coordinates (block i = parent coordinates of alpha^i) to flat coordinates.
    std::vector<Rational> from_nested(const std::vector<std::vector<Rational>>& blocks) const;

private:
    FieldPtr parent_;
    int depth_ = 0;
    std::string label_;
    std::vector<AlgebraicNumber> minpoly_;
    Rational shift_;
    QPoly M_;
    std::vector<Rational> parent_eta_, alpha_;
    IsolatedRoot root_;
    int root_index_ = 0;
    bool bare_ = false;

    mutable std::mutex mu_;
    mutable std::map<long, IsolatedRoot> refined_;
    mutable std::vector<std::vector<Rational>> nested_inv_; // lazily built
    mutable std::vector<std::vector<Rational>> x_powers_;   // x^k mod M for k in [D, 2D-2]
};

/// Image of eta_K in L, or an empty optional-like flag when K is not known to embed in L.
bool embedding(const FieldPtr& K, const FieldPtr& L, std::vector<Rational>& image);
/// Records that eta_K maps to image in L (used by tower merges).
void register_embedding(const FieldPtr& K, const FieldPtr& L, std::vector<Rational> image);
/// Smallest known field containing both; may build a merged field.
FieldPtr common_field(const FieldPtr& a, const FieldPtr& b);
FieldPtr common_field(const std::vector<AlgebraicNumber>& values, FieldPtr start = Field::rationals());

/// Deterministic numeric order: real midpoints, then imaginary; 0 only when equal.
int numeric_compare(const AlgebraicNumber& a, const AlgebraicNumber& b);
/// Same order for values known to be distinct; never merges towers.
int numeric_compare_distinct(const AlgebraicNumber& a, const AlgebraicNumber& b);
/// Order of two balls around distinct complex numbers.
int compare_balls(const std::function<Ball(long)>& a, const std::function<Ball(long)>& b);

/// Text of a polynomial with the given coefficients (lowest first) in variable var.
std::string poly_str(const std::vector<AlgebraicNumber>& coeffs, const std::string& var);

/// Renders the tower (levels from the top field down) as human readable lines.
std::vector<std::string> describe_tower(const FieldPtr& f);

namespace detail {
/// Builds the merged field a(eta_b) and records the embedding of b. Defined with the tower code.
FieldPtr merge_fields(const FieldPtr& a, const FieldPtr& b);
} // namespace detail

} // namespace placeode
