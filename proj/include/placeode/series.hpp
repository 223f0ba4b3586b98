#pragma once

#include "placeode/algebraic.hpp"

#include <optional>
#include <string>
#include <vector>

namespace placeode {

/// Power series known exactly up to t^trunc; higher coefficients are unknown.
/// A truncation of -1 means that nothing is certified.
class TruncatedSeries {
public:
    TruncatedSeries() = default;
    /// Coefficients beyond trunc are dropped; missing ones up to trunc are zero.
    TruncatedSeries(std::vector<AlgebraicNumber> coeffs, int trunc);

    static TruncatedSeries constant(const AlgebraicNumber& a, int trunc);
    /// The series t (certified to trunc).
    static TruncatedSeries variable(int trunc);
    static TruncatedSeries monomial(const AlgebraicNumber& a, int k, int trunc);

    int trunc() const { return N_; }
    const std::vector<AlgebraicNumber>& coeffs() const { return c_; }
    /// Certified coefficient; throws InsufficientPrecision above trunc.
    const AlgebraicNumber& operator[](int i) const;
    /// Index of the first nonzero certified coefficient, empty when all vanish ("> trunc").
    std::optional<int> order() const;
    /// order() or trunc + 1 when every certified coefficient vanishes.
    int order_lower_bound() const;
    /// Largest exponent with nonzero coefficient (-1 for none).
    int last_nonzero() const;

    TruncatedSeries truncated(int n) const;
    TruncatedSeries derivative() const;
    TruncatedSeries invert() const;
    TruncatedSeries pow(int k) const;
    /// outer(inner); inner must have positive order.
    TruncatedSeries compose(const TruncatedSeries& inner) const;
    /// Multiplies every coefficient by s.
    TruncatedSeries scaled(const AlgebraicNumber& s) const;
    /// The series a(lambda * t).
    TruncatedSeries rescaled(const AlgebraicNumber& lambda) const;

    friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
    TruncatedSeries operator-() const;

    /// Equality of all jointly certified coefficients.
    bool agrees_with(const TruncatedSeries& o) const;
    /// Same truncation and identical coefficients.
    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b)
    {
        return a.N_ == b.N_ && a.c_ == b.c_;
    }

    /// "c0 + c1*t + ... + O(t^{N+1})".
    std::string str(const std::string& var = "t") const;
    /// Field containing every coefficient.
    FieldPtr field() const;

private:
    std::vector<AlgebraicNumber> c_; // exactly N_ + 1 entries
    int N_ = -1;
};

/// Text of sum coeffs[k] * var^k (lowest first), without an O() tail.
std::string render_sum(const std::vector<AlgebraicNumber>& coeffs, const std::string& var);

} // namespace placeode
