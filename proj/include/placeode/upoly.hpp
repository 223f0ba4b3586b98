#pragma once

#include "placeode/errors.hpp"
#include "placeode/rational.hpp"

#include <algorithm>
#include <cstddef>
#include <tuple>
#include <utility>
#include <vector>

namespace placeode {

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

/// Dense univariate polynomial over a field F, coefficients lowest degree first.
/// The zero polynomial has no coefficients; otherwise the leading one is nonzero.
template <class F>
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<F> c) : c_(std::move(c)) { normalize(); }
    Poly(std::initializer_list<F> c) : c_(c) { normalize(); }

    static Poly constant(const F& a) { return Poly(std::vector<F>{a}); }
    static Poly monomial(const F& a, int k)
    {
        std::vector<F> c(static_cast<std::size_t>(k) + 1, F(0));
        c[k] = a;
        return Poly(std::move(c));
    }
    static Poly x() { return monomial(F(1), 1); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    std::size_t size() const { return c_.size(); }
    const std::vector<F>& coeffs() const { return c_; }
    F coeff(int i) const { return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : F(0); }
    const F& operator[](std::size_t i) const { return c_[i]; }
    const F& leading() const { return c_.back(); }

    Poly operator-() const
    {
        Poly r = *this;
        for (auto& a : r.c_)
            a = -a;
        return r;
    }
    Poly& operator+=(const Poly& o)
    {
        if (o.c_.size() > c_.size())
            c_.resize(o.c_.size(), F(0));
        for (std::size_t i = 0; i < o.c_.size(); ++i)
            c_[i] = c_[i] + o.c_[i];
        normalize();
        return *this;
    }
    Poly& operator-=(const Poly& o)
    {
        if (o.c_.size() > c_.size())
            c_.resize(o.c_.size(), F(0));
        for (std::size_t i = 0; i < o.c_.size(); ++i)
            c_[i] = c_[i] - o.c_[i];
        normalize();
        return *this;
    }
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b)
    {
        if (a.is_zero() || b.is_zero())
            return Poly();
        std::vector<F> r(a.c_.size() + b.c_.size() - 1, F(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (placeode_is_zero(a.c_[i]))
                continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                r[i + j] = r[i + j] + a.c_[i] * b.c_[j];
        }
        return Poly(std::move(r));
    }
    friend Poly operator*(const F& s, const Poly& p)
    {
        Poly r = p;
        for (auto& a : r.c_)
            a = s * a;
        r.normalize();
        return r;
    }
    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    /// Horner evaluation in any ring R that accepts F scalars.
    template <class R>
    R eval(const R& x) const
    {
        R acc = R(0);
        for (std::size_t i = c_.size(); i-- > 0;)
            acc = acc * x + R(c_[i]);
        return acc;
    }
    F operator()(const F& x) const
    {
        F acc = F(0);
        for (std::size_t i = c_.size(); i-- > 0;)
            acc = acc * x + c_[i];
        return acc;
    }

    Poly derivative() const
    {
        if (c_.size() <= 1)
            return Poly();
        std::vector<F> r(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i)
            r[i - 1] = F(static_cast<long>(i)) * c_[i];
        return Poly(std::move(r));
    }

    Poly monic() const
    {
        if (is_zero())
            return *this;
        F inv = F(1) / leading();
        return inv * *this;
    }

    /// p(x + a)
    Poly shifted(const F& a) const
    {
        // Horner with the linear polynomial x + a
        Poly lin({a, F(1)});
        Poly acc;
        for (std::size_t i = c_.size(); i-- > 0;)
            acc = acc * lin + constant(c_[i]);
        return acc;
    }

private:
    static bool placeode_is_zero(const F& a)
    {
        using placeode::is_zero;
        return is_zero(a);
    }
    void normalize()
    {
        while (!c_.empty() && placeode_is_zero(c_.back()))
            c_.pop_back();
    }

    std::vector<F> c_;
};

using QPoly = Poly<Rational>;

template <class F>
std::pair<Poly<F>, Poly<F>> divrem(const Poly<F>& a, const Poly<F>& b)
{
    if (b.is_zero())
        throw DivisionByZero();
    if (a.degree() < b.degree())
        return {Poly<F>(), a};
    std::vector<F> r = a.coeffs();
    std::vector<F> q(static_cast<std::size_t>(a.degree() - b.degree()) + 1, F(0));
    F inv = F(1) / b.leading();
    const int db = b.degree();
    for (int k = a.degree() - db; k >= 0; --k) {
        F c = r[k + db] * inv;
        q[k] = c;
        using placeode::is_zero;
        if (is_zero(c))
            continue;
        for (int j = 0; j <= db; ++j)
            r[k + j] = r[k + j] - c * b[j];
    }
    r.resize(static_cast<std::size_t>(db));
    return {Poly<F>(std::move(q)), Poly<F>(std::move(r))};
}

template <class F>
Poly<F> operator%(const Poly<F>& a, const Poly<F>& b)
{
    return divrem(a, b).second;
}

/// Monic gcd; gcd(0, 0) = 0.
template <class F>
Poly<F> gcd(Poly<F> a, Poly<F> b)
{
    while (!b.is_zero()) {
        Poly<F> r = divrem(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

/// Returns (g, s, t) with s*a + t*b = g monic.
template <class F>
std::tuple<Poly<F>, Poly<F>, Poly<F>> ext_gcd(const Poly<F>& a, const Poly<F>& b)
{
    Poly<F> r0 = a, r1 = b;
    Poly<F> s0 = Poly<F>::constant(F(1)), s1;
    Poly<F> t0, t1 = Poly<F>::constant(F(1));
    while (!r1.is_zero()) {
        auto [q, r] = divrem(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        Poly<F> s2 = s0 - q * s1;
        Poly<F> t2 = t0 - q * t1;
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.is_zero())
        return {r0, s0, t0};
    F inv = F(1) / r0.leading();
    return {inv * r0, inv * s0, inv * t0};
}

/// Resultant via the Euclidean remainder sequence (exact over a field).
template <class F>
F resultant(Poly<F> a, Poly<F> b)
{
    if (a.is_zero() || b.is_zero())
        return F(0);
    F acc = F(1);
    for (;;) {
        const int n = a.degree(), m = b.degree();
        if (m == 0) {
            F p = F(1);
            for (int i = 0; i < n; ++i)
                p = p * b.leading();
            return acc * p;
        }
        if (n == 0) {
            F p = F(1);
            for (int i = 0; i < m; ++i)
                p = p * a.leading();
            return acc * p;
        }
        Poly<F> r = divrem(a, b).second;
        if (r.is_zero())
            return F(0);
        // Res(a, b) = (-1)^{nm} lc(b)^{n - deg r} Res(b, r)
        if ((n * m) % 2 != 0)
            acc = -acc;
        for (int i = 0; i < n - r.degree(); ++i)
            acc = acc * b.leading();
        a = std::move(b);
        b = std::move(r);
    }
}

/// Yun's squarefree decomposition: f = lc * prod g_i^i, returns (g_i, i) with deg g_i > 0.
template <class F>
std::vector<std::pair<Poly<F>, int>> squarefree_decomposition(const Poly<F>& f)
{
    std::vector<std::pair<Poly<F>, int>> out;
    if (f.degree() <= 0)
        return out;
    Poly<F> fp = f.derivative();
    Poly<F> a = gcd(f, fp);
    Poly<F> b = divrem(f, a).first;
    Poly<F> c = divrem(fp, a).first;
    Poly<F> d = c - b.derivative();
    int i = 1;
    while (b.degree() > 0) {
        a = gcd(b, d);
        if (a.degree() > 0)
            out.emplace_back(a.monic(), i);
        b = divrem(b, a).first;
        c = divrem(d, a).first;
        d = c - b.derivative();
        ++i;
    }
    return out;
}

template <class F>
Poly<F> squarefree_part(const Poly<F>& f)
{
    if (f.degree() <= 0)
        return f;
    return divrem(f, gcd(f, f.derivative())).first.monic();
}

/// p(q(x))
template <class F>
Poly<F> compose(const Poly<F>& p, const Poly<F>& q)
{
    Poly<F> acc;
    for (std::size_t i = p.size(); i-- > 0;)
        acc = acc * q + Poly<F>::constant(p[i]);
    return acc;
}

/// Newton interpolation through (xs[i], ys[i]).
template <class F>
Poly<F> interpolate(const std::vector<F>& xs, std::vector<F> ys)
{
    const std::size_t n = xs.size();
    for (std::size_t j = 1; j < n; ++j)
        for (std::size_t i = n - 1; i >= j; --i) {
            ys[i] = (ys[i] - ys[i - 1]) / (xs[i] - xs[i - j]);
            if (i == j)
                break;
        }
    Poly<F> acc;
    for (std::size_t i = n; i-- > 0;) {
        acc = acc * Poly<F>({-xs[i], F(1)}) + Poly<F>::constant(ys[i]);
    }
    return acc;
}

} // namespace placeode
