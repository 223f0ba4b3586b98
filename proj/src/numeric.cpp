#include "placeode/numeric.hpp"

#include "placeode/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace placeode {

Real::Real(mpfr_prec_t prec)
{
    mpfr_init2(v_, prec);
    mpfr_set_zero(v_, 1);
}

Real::Real(const Real& o)
{
    mpfr_init2(v_, o.prec());
    mpfr_set(v_, o.v_, MPFR_RNDN);
}

Real::Real(Real&& o) noexcept
{
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_swap(v_, o.v_);
}

Real& Real::operator=(const Real& o)
{
    if (this != &o) {
        mpfr_set_prec(v_, o.prec());
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
}

Real& Real::operator=(Real&& o) noexcept
{
    if (this != &o) {
        mpfr_swap(v_, o.v_);
    }
    return *this;
}

Real::~Real() { mpfr_clear(v_); }

Real Real::from(const Rational& q, mpfr_prec_t prec, mpfr_rnd_t rnd)
{
    Real r(prec);
    mpfr_set_q(r.v_, q.get_mpq_t(), rnd);
    return r;
}

Real Real::from(double d, mpfr_prec_t prec)
{
    Real r(prec);
    mpfr_set_d(r.v_, d, MPFR_RNDN);
    return r;
}

Real Real::pow2(long e, mpfr_prec_t prec)
{
    Real r(prec);
    mpfr_set_ui_2exp(r.v_, 1, e, MPFR_RNDN);
    return r;
}

long Real::exponent() const
{
    if (mpfr_zero_p(v_))
        return std::numeric_limits<long>::min() / 4;
    return mpfr_get_exp(v_);
}

std::string Real::str(int digits) const
{
    if (mpfr_zero_p(v_))
        return "0";
    char* buf = nullptr;
    std::string fmt = "%." + std::to_string(digits) + "Rg";
    mpfr_asprintf(&buf, fmt.c_str(), v_);
    std::string s(buf);
    mpfr_free_str(buf);
    return s;
}

bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.get(), b.get()) != 0; }

namespace {

constexpr mpfr_prec_t kRadPrec = 64;

Real add_up(const Real& a, const Real& b)
{
    Real r(kRadPrec);
    mpfr_add(r.get(), a.get(), b.get(), MPFR_RNDU);
    return r;
}

Real mul_up(const Real& a, const Real& b)
{
    Real r(kRadPrec);
    mpfr_mul(r.get(), a.get(), b.get(), MPFR_RNDU);
    return r;
}

// |x| * 2^(4 - prec), an upper bound on accumulated rounding of a few operations
Real rounding_slack(const Real& magnitude, mpfr_prec_t prec)
{
    Real r(kRadPrec);
    mpfr_mul_2si(r.get(), magnitude.get(), 4 - static_cast<long>(prec), MPFR_RNDU);
    return r;
}

} // namespace

Complex cadd(const Complex& a, const Complex& b)
{
    Complex r(std::max(a.prec(), b.prec()));
    mpfr_add(r.re.get(), a.re.get(), b.re.get(), MPFR_RNDN);
    mpfr_add(r.im.get(), a.im.get(), b.im.get(), MPFR_RNDN);
    return r;
}

Complex csub(const Complex& a, const Complex& b)
{
    Complex r(std::max(a.prec(), b.prec()));
    mpfr_sub(r.re.get(), a.re.get(), b.re.get(), MPFR_RNDN);
    mpfr_sub(r.im.get(), a.im.get(), b.im.get(), MPFR_RNDN);
    return r;
}

Complex cmul(const Complex& a, const Complex& b)
{
    const mpfr_prec_t p = std::max(a.prec(), b.prec());
    Complex r(p);
    Real t1(p + 8), t2(p + 8);
    mpfr_mul(t1.get(), a.re.get(), b.re.get(), MPFR_RNDN);
    mpfr_mul(t2.get(), a.im.get(), b.im.get(), MPFR_RNDN);
    mpfr_sub(r.re.get(), t1.get(), t2.get(), MPFR_RNDN);
    mpfr_mul(t1.get(), a.re.get(), b.im.get(), MPFR_RNDN);
    mpfr_mul(t2.get(), a.im.get(), b.re.get(), MPFR_RNDN);
    mpfr_add(r.im.get(), t1.get(), t2.get(), MPFR_RNDN);
    return r;
}

Complex cdiv(const Complex& a, const Complex& b)
{
    const mpfr_prec_t p = std::max(a.prec(), b.prec());
    Real den(p + 8), t(p + 8);
    mpfr_sqr(den.get(), b.re.get(), MPFR_RNDN);
    mpfr_sqr(t.get(), b.im.get(), MPFR_RNDN);
    mpfr_add(den.get(), den.get(), t.get(), MPFR_RNDN);
    if (mpfr_zero_p(den.get()))
        throw DivisionByZero();
    Complex conj(p);
    mpfr_set(conj.re.get(), b.re.get(), MPFR_RNDN);
    mpfr_neg(conj.im.get(), b.im.get(), MPFR_RNDN);
    Complex r = cmul(a, conj);
    mpfr_div(r.re.get(), r.re.get(), den.get(), MPFR_RNDN);
    mpfr_div(r.im.get(), r.im.get(), den.get(), MPFR_RNDN);
    return r;
}

Complex cscale(const Complex& a, const Real& s)
{
    Complex r(a.prec());
    mpfr_mul(r.re.get(), a.re.get(), s.get(), MPFR_RNDN);
    mpfr_mul(r.im.get(), a.im.get(), s.get(), MPFR_RNDN);
    return r;
}

Complex cfrom(const Rational& q, mpfr_prec_t prec) { return Complex(Real::from(q, prec), Real(prec)); }

Complex cconvert(const Complex& a, mpfr_prec_t prec)
{
    Complex r(prec);
    mpfr_set(r.re.get(), a.re.get(), MPFR_RNDN);
    mpfr_set(r.im.get(), a.im.get(), MPFR_RNDN);
    return r;
}

Real cabs_up(const Complex& a)
{
    Real r(kRadPrec);
    mpfr_hypot(r.get(), a.re.get(), a.im.get(), MPFR_RNDU);
    return r;
}

Real cabs_down(const Complex& a)
{
    Real r(kRadPrec);
    mpfr_hypot(r.get(), a.re.get(), a.im.get(), MPFR_RNDD);
    return r;
}

Ball::Ball(mpfr_prec_t prec) : mid(prec), rad(kRadPrec) {}

Ball::Ball(Complex m, Real r) : mid(std::move(m)), rad(kRadPrec)
{
    mpfr_set(rad.get(), r.get(), MPFR_RNDU);
}

Ball Ball::exact(const Rational& q, mpfr_prec_t prec)
{
    Ball b(prec);
    mpfr_set_q(b.mid.re.get(), q.get_mpq_t(), MPFR_RNDN);
    if (!(q.get_den() == 1 && mpz_sizeinbase(q.get_num_mpz_t(), 2) < static_cast<size_t>(prec)))
        b.rad = rounding_slack(cabs_up(b.mid), prec);
    return b;
}

bool Ball::contains_zero() const { return !(rad < cabs_down(mid)); }

bool Ball::inside(const Complex& center, const Real& radius) const
{
    Real d = cabs_up(csub(mid, center));
    Real reach = add_up(d, rad);
    return reach < radius;
}

Ball badd(const Ball& a, const Ball& b)
{
    Complex m = cadd(a.mid, b.mid);
    Real r = add_up(add_up(a.rad, b.rad), rounding_slack(cabs_up(m), m.prec()));
    return Ball(std::move(m), std::move(r));
}

Ball bsub(const Ball& a, const Ball& b)
{
    Complex m = csub(a.mid, b.mid);
    Real r = add_up(add_up(a.rad, b.rad), rounding_slack(cabs_up(m), m.prec()));
    return Ball(std::move(m), std::move(r));
}

Ball bmul(const Ball& a, const Ball& b)
{
    Complex m = cmul(a.mid, b.mid);
    Real A = cabs_up(a.mid), B = cabs_up(b.mid);
    Real r = add_up(mul_up(A, b.rad), mul_up(B, a.rad));
    r = add_up(r, mul_up(a.rad, b.rad));
    r = add_up(r, rounding_slack(mul_up(A, B), m.prec()));
    return Ball(std::move(m), std::move(r));
}

Ball bneg(const Ball& a)
{
    Ball r = a;
    mpfr_neg(r.mid.re.get(), r.mid.re.get(), MPFR_RNDN);
    mpfr_neg(r.mid.im.get(), r.mid.im.get(), MPFR_RNDN);
    return r;
}

Ball bscale(const Ball& a, const Rational& q) { return bmul(a, Ball::exact(q, a.prec())); }

Ball eval_ball(const std::vector<Rational>& coeffs, const Ball& x)
{
    Ball acc(x.prec());
    for (std::size_t i = coeffs.size(); i-- > 0;)
        acc = badd(bmul(acc, x), Ball::exact(coeffs[i], x.prec()));
    return acc;
}

Ball eval_ball(const std::vector<Ball>& coeffs, const Ball& x)
{
    Ball acc(x.prec());
    for (std::size_t i = coeffs.size(); i-- > 0;)
        acc = badd(bmul(acc, x), coeffs[i]);
    return acc;
}

namespace {

std::vector<Ball> derivative_balls(const std::vector<Ball>& c)
{
    std::vector<Ball> d;
    for (std::size_t i = 1; i < c.size(); ++i)
        d.push_back(bscale(c[i], Rational(static_cast<long>(i))));
    return d;
}

std::vector<Ball> to_balls(const std::vector<Rational>& c, mpfr_prec_t prec)
{
    std::vector<Ball> out;
    out.reserve(c.size());
    for (const auto& q : c)
        out.push_back(Ball::exact(q, prec));
    return out;
}

std::vector<Ball> reprec(const std::vector<Ball>& c, mpfr_prec_t prec)
{
    std::vector<Ball> out;
    for (const auto& b : c)
        out.emplace_back(cconvert(b.mid, prec), b.rad);
    return out;
}

// Horner for value and derivative on midpoints.
void eval_fd(const std::vector<Ball>& c, const Complex& z, Complex& f, Complex& fp)
{
    const mpfr_prec_t p = z.prec();
    f = Complex(p);
    fp = Complex(p);
    for (std::size_t i = c.size(); i-- > 0;) {
        fp = cadd(cmul(fp, z), f);
        f = cadd(cmul(f, z), c[i].mid);
    }
}

double log2_abs(const Complex& z)
{
    Real a = cabs_up(z);
    if (a.is_zero())
        return -std::numeric_limits<double>::infinity();
    long e;
    double m = mpfr_get_d_2exp(&e, a.get(), MPFR_RNDN);
    return std::log2(m) + static_cast<double>(e);
}

std::vector<Complex> initial_guesses(const std::vector<Ball>& c, mpfr_prec_t prec)
{
    const int n = static_cast<int>(c.size()) - 1;
    const double ln = log2_abs(c[n].mid);
    double best = -1e300;
    for (int i = 0; i < n; ++i) {
        double li = log2_abs(c[i].mid);
        if (std::isinf(li))
            continue;
        best = std::max(best, (li - ln) / (n - i));
    }
    double lr = (best < -1e299) ? 0.0 : best + 1.0;
    std::vector<Complex> z;
    for (int k = 0; k < n; ++k) {
        const double ang = 2.0 * M_PI * k / n + 0.4;
        const double scale = 0.5 + 0.5 * (k + 1.0) / n;
        Complex w(prec);
        Real r = Real::pow2(static_cast<long>(std::floor(lr)), prec);
        Real s = Real::from(scale * std::exp2(lr - std::floor(lr)), prec);
        mpfr_mul(r.get(), r.get(), s.get(), MPFR_RNDN);
        Real cs = Real::from(std::cos(ang), prec), sn = Real::from(std::sin(ang), prec);
        mpfr_mul(w.re.get(), r.get(), cs.get(), MPFR_RNDN);
        mpfr_mul(w.im.get(), r.get(), sn.get(), MPFR_RNDN);
        z.push_back(std::move(w));
    }
    return z;
}

// Aberth-Ehrlich iteration; returns true on convergence.
bool aberth(const std::vector<Ball>& c, std::vector<Complex>& z, int max_iter)
{
    const int n = static_cast<int>(z.size());
    const mpfr_prec_t p = z.empty() ? 128 : z[0].prec();
    std::vector<bool> done(n, false);
    Complex f(p), fp(p);
    for (int it = 0; it < max_iter; ++it) {
        bool all = true;
        for (int i = 0; i < n; ++i) {
            if (done[i])
                continue;
            eval_fd(c, z[i], f, fp);
            if (mpfr_zero_p(f.re.get()) && mpfr_zero_p(f.im.get())) {
                done[i] = true;
                continue;
            }
            if (mpfr_zero_p(fp.re.get()) && mpfr_zero_p(fp.im.get())) {
                // nudge off a critical point
                Real eps = Real::pow2(-(p / 4), p);
                mpfr_add(z[i].re.get(), z[i].re.get(), eps.get(), MPFR_RNDN);
                all = false;
                continue;
            }
            Complex ratio = cdiv(f, fp);
            Complex sum(p);
            for (int j = 0; j < n; ++j) {
                if (j == i)
                    continue;
                Complex d = csub(z[i], z[j]);
                if (mpfr_zero_p(d.re.get()) && mpfr_zero_p(d.im.get()))
                    continue;
                Complex one(p);
                mpfr_set_ui(one.re.get(), 1, MPFR_RNDN);
                sum = cadd(sum, cdiv(one, d));
            }
            Complex one(p);
            mpfr_set_ui(one.re.get(), 1, MPFR_RNDN);
            Complex den = csub(one, cmul(ratio, sum));
            Complex w = (mpfr_zero_p(den.re.get()) && mpfr_zero_p(den.im.get())) ? ratio : cdiv(ratio, den);
            z[i] = csub(z[i], w);
            Real wa = cabs_up(w);
            Real za = cabs_up(z[i]);
            Real tol(kRadPrec);
            mpfr_set_ui(tol.get(), 1, MPFR_RNDN);
            tol = add_up(tol, za);
            mpfr_mul_2si(tol.get(), tol.get(), 12 - static_cast<long>(p), MPFR_RNDN);
            if (wa < tol)
                done[i] = true;
            else
                all = false;
        }
        if (all)
            return true;
    }
    return false;
}

bool certify(const std::vector<Ball>& c, const std::vector<Complex>& z, std::vector<IsolatedRoot>& out)
{
    const int n = static_cast<int>(z.size());
    std::vector<Ball> d = derivative_balls(c);
    std::vector<Real> rad;
    for (int i = 0; i < n; ++i) {
        Ball pt(z[i], Real(kRadPrec));
        Ball fv = eval_ball(c, pt);
        Ball dv = eval_ball(d, pt);
        Real fu = add_up(cabs_up(fv.mid), fv.rad);
        Real dl(kRadPrec);
        mpfr_sub(dl.get(), cabs_down(dv.mid).get(), dv.rad.get(), MPFR_RNDD);
        if (dl.sign() <= 0)
            return false;
        Real r(kRadPrec);
        mpfr_div(r.get(), fu.get(), dl.get(), MPFR_RNDU);
        mpfr_mul_ui(r.get(), r.get(), static_cast<unsigned long>(n), MPFR_RNDU);
        rad.push_back(std::move(r));
    }
    out.clear();
    for (int i = 0; i < n; ++i) {
        Real iso(kRadPrec);
        mpfr_set_inf(iso.get(), 1);
        for (int j = 0; j < n; ++j) {
            if (i == j)
                continue;
            Real dist = cabs_down(csub(z[i], z[j]));
            Real sep(kRadPrec);
            mpfr_sub(sep.get(), dist.get(), rad[i].get(), MPFR_RNDD);
            mpfr_sub(sep.get(), sep.get(), rad[j].get(), MPFR_RNDD);
            if (sep.sign() <= 0)
                return false;
            Real cand(kRadPrec);
            mpfr_sub(cand.get(), dist.get(), rad[j].get(), MPFR_RNDD);
            if (cand < iso)
                iso = cand;
        }
        out.push_back(IsolatedRoot{z[i], rad[i], iso});
    }
    return true;
}

std::vector<IsolatedRoot> isolate_impl(const std::vector<Rational>* qc, std::vector<Ball> c)
{
    while (!c.empty() && c.back().contains_zero() && c.back().rad.is_zero())
        c.pop_back();
    const int n = static_cast<int>(c.size()) - 1;
    if (n <= 0)
        return {};
    mpfr_prec_t prec = std::max<mpfr_prec_t>(128, c[0].prec());
    std::vector<Complex> z;
    for (int round = 0; round < 12; ++round) {
        std::vector<Ball> cc = qc ? to_balls(*qc, prec) : reprec(c, prec);
        if (z.empty())
            z = initial_guesses(cc, prec);
        else
            for (auto& w : z)
                w = cconvert(w, prec);
        bool ok = aberth(cc, z, 200 + 20 * n);
        std::vector<IsolatedRoot> out;
        if (ok && certify(cc, z, out))
            return out;
        if (!qc && round >= 2)
            break;
        prec *= 2;
    }
    throw Error("numeric root isolation failed");
}

} // namespace

std::vector<IsolatedRoot> isolate_roots(const std::vector<Rational>& coeffs)
{
    std::vector<Ball> c = to_balls(coeffs, 128);
    return isolate_impl(&coeffs, std::move(c));
}

std::vector<IsolatedRoot> isolate_roots(const std::vector<Ball>& coeffs) { return isolate_impl(nullptr, coeffs); }

IsolatedRoot refine_root(const std::vector<Rational>& coeffs, const IsolatedRoot& r, long bits)
{
    const int n = static_cast<int>(coeffs.size()) - 1;
    Real target = Real::pow2(-bits);
    if (!(target < r.radius))
        return r;
    mpfr_prec_t prec = std::max<mpfr_prec_t>(r.center.prec(), 64);
    Complex z = r.center;
    for (int it = 0; it < 200; ++it) {
        prec = std::min<mpfr_prec_t>(prec * 2, bits + 96);
        z = cconvert(z, prec);
        std::vector<Ball> c = to_balls(coeffs, prec);
        Complex f(prec), fp(prec);
        eval_fd(c, z, f, fp);
        if (!(mpfr_zero_p(fp.re.get()) && mpfr_zero_p(fp.im.get())))
            z = csub(z, cdiv(f, fp));
        // certify
        std::vector<Ball> d = derivative_balls(c);
        Ball pt(z, Real(kRadPrec));
        Ball fv = eval_ball(c, pt);
        Ball dv = eval_ball(d, pt);
        Real fu = add_up(cabs_up(fv.mid), fv.rad);
        Real dl(kRadPrec);
        mpfr_sub(dl.get(), cabs_down(dv.mid).get(), dv.rad.get(), MPFR_RNDD);
        if (dl.sign() <= 0)
            continue;
        Real rad(kRadPrec);
        mpfr_div(rad.get(), fu.get(), dl.get(), MPFR_RNDU);
        mpfr_mul_ui(rad.get(), rad.get(), static_cast<unsigned long>(n), MPFR_RNDU);
        Ball disk(z, rad);
        if (rad < target && disk.inside(r.center, r.isolation))
            return IsolatedRoot{z, rad, r.isolation};
    }
    throw Error("root refinement failed");
}

} // namespace placeode
