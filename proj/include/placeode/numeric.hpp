#pragma once

#include "placeode/rational.hpp"

#include <mpfr.h>

#include <string>
#include <vector>

namespace placeode {

/// Owning wrapper around an MPFR number with a fixed precision.
class Real {
public:
    explicit Real(mpfr_prec_t prec = 128);
    Real(const Real& o);
    Real(Real&& o) noexcept;
    Real& operator=(const Real& o);
    Real& operator=(Real&& o) noexcept;
    ~Real();

    static Real from(const Rational& q, mpfr_prec_t prec, mpfr_rnd_t rnd = MPFR_RNDN);
    static Real from(double d, mpfr_prec_t prec);
    static Real pow2(long e, mpfr_prec_t prec = 64); // 2^e exactly

    mpfr_ptr get() { return v_; }
    mpfr_srcptr get() const { return v_; }
    mpfr_prec_t prec() const { return mpfr_get_prec(v_); }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    long exponent() const; // e with 2^(e-1) <= |x| < 2^e, very negative for 0
    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }
    /// Decimal rendering with the given number of significant digits.
    std::string str(int digits = 20) const;

private:
    mpfr_t v_;
};

bool operator<(const Real& a, const Real& b);

struct Complex {
    Real re, im;
    explicit Complex(mpfr_prec_t prec = 128) : re(prec), im(prec) {}
    Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
    mpfr_prec_t prec() const { return re.prec(); }
};

Complex cadd(const Complex& a, const Complex& b);
Complex csub(const Complex& a, const Complex& b);
Complex cmul(const Complex& a, const Complex& b);
Complex cdiv(const Complex& a, const Complex& b);
Complex cscale(const Complex& a, const Real& s);
Complex cfrom(const Rational& q, mpfr_prec_t prec);
Complex cconvert(const Complex& a, mpfr_prec_t prec);
/// Upper bound on |a|.
Real cabs_up(const Complex& a);
/// Lower bound on |a|.
Real cabs_down(const Complex& a);

/// Complex ball: every point within rad (an upper bound) of mid.
struct Ball {
    Complex mid;
    Real rad; // 64-bit precision, rounded up

    explicit Ball(mpfr_prec_t prec = 128);
    Ball(Complex m, Real r);
    static Ball exact(const Rational& q, mpfr_prec_t prec);
    mpfr_prec_t prec() const { return mid.prec(); }
    bool contains_zero() const;
    /// true when the ball lies within the disk(center, radius)
    bool inside(const Complex& center, const Real& radius) const;
};

Ball badd(const Ball& a, const Ball& b);
Ball bsub(const Ball& a, const Ball& b);
Ball bmul(const Ball& a, const Ball& b);
Ball bneg(const Ball& a);
Ball bscale(const Ball& a, const Rational& q);

/// A root of a squarefree polynomial isolated by a disk: the disk (center, radius) contains
/// exactly this root; any root found within `isolation` of center is this root.
struct IsolatedRoot {
    Complex center;
    Real radius;
    Real isolation;
};

/// Evaluates a rational polynomial (lowest coefficient first) on a ball.
Ball eval_ball(const std::vector<Rational>& coeffs, const Ball& x);
/// Evaluates a polynomial with ball coefficients on a ball.
Ball eval_ball(const std::vector<Ball>& coeffs, const Ball& x);

/// Certified isolation of all complex roots of a squarefree rational polynomial.
std::vector<IsolatedRoot> isolate_roots(const std::vector<Rational>& coeffs);
/// Same for a polynomial known through ball coefficients (certification is relative to the
/// midpoints); precision is taken from the coefficients.
std::vector<IsolatedRoot> isolate_roots(const std::vector<Ball>& coeffs);

/// Newton refinement of an isolated root of a rational polynomial to radius <= 2^-bits.
IsolatedRoot refine_root(const std::vector<Rational>& coeffs, const IsolatedRoot& r, long bits);

} // namespace placeode
