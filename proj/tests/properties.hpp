#pragma once

#include "common.hpp"

#include <functional>
#include <random>
#include <sstream>

// Randomized algebraic identity suites shared by the unit tests and the acceptance binary.
namespace properties {

using namespace placeode;

struct Outcome {
    int cases = 0;
    int failures = 0;
    std::string first_failure;
};

class Generator {
public:
    explicit Generator(unsigned seed) : rng_(seed)
    {
        gens_ = {AlgebraicNumber(1), sqrt_of(Rational(2)), sqrt_of(Rational(-3)),
                 indexed_root(QPoly({Rational(-2), Rational(0), Rational(0), Rational(1)}), 1)};
    }

    Rational rational()
    {
        std::uniform_int_distribution<long> num(-9, 9), den(1, 6);
        Rational r(num(rng_), den(rng_));
        r.canonicalize();
        return r;
    }

    /// Random element of one of Q, Q(sqrt 2), Q(sqrt -3), Q(2^(1/3)).
    AlgebraicNumber element()
    {
        std::uniform_int_distribution<int> pick(0, static_cast<int>(gens_.size()) - 1);
        const AlgebraicNumber& g = gens_[static_cast<std::size_t>(pick(rng_))];
        AlgebraicNumber a(rational());
        AlgebraicNumber p = g;
        for (int k = 1; k < 3; ++k, p *= g)
            a += AlgebraicNumber(rational()) * p;
        return a;
    }

    /// Elements of one common field, so products stay cheap.
    std::vector<AlgebraicNumber> elements(int n)
    {
        std::uniform_int_distribution<int> pick(0, static_cast<int>(gens_.size()) - 1);
        const AlgebraicNumber g = gens_[static_cast<std::size_t>(pick(rng_))];
        std::vector<AlgebraicNumber> v;
        for (int i = 0; i < n; ++i)
            v.push_back(AlgebraicNumber(rational()) + AlgebraicNumber(rational()) * g + AlgebraicNumber(rational()) * g * g);
        return v;
    }

    TruncatedSeries series(int trunc, int valuation = 0)
    {
        std::vector<AlgebraicNumber> cs = elements(trunc + 1);
        for (int i = 0; i < valuation && i <= trunc; ++i)
            cs[static_cast<std::size_t>(i)] = AlgebraicNumber();
        if (valuation <= trunc && cs[static_cast<std::size_t>(valuation)].is_zero())
            cs[static_cast<std::size_t>(valuation)] = AlgebraicNumber(1);
        return TruncatedSeries(std::move(cs), trunc);
    }

    int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

private:
    std::mt19937 rng_;
    std::vector<AlgebraicNumber> gens_;
};

inline void check(Outcome& o, bool ok, const std::function<std::string()>& what)
{
    ++o.cases;
    if (!ok && o.failures++ == 0)
        o.first_failure = what();
}

inline Outcome field_axioms(int n, unsigned seed)
{
    Generator g(seed);
    Outcome o;
    const AlgebraicNumber zero, one(1);
    for (int i = 0; i < n; ++i) {
        auto v = g.elements(3);
        const AlgebraicNumber &a = v[0], &b = v[1], &c = v[2];
        bool ok = a + b == b + a && a * b == b * a && (a + b) + c == a + (b + c) && (a * b) * c == a * (b * c) &&
                  a * (b + c) == a * b + a * c && a + zero == a && a * one == a && a + (-a) == zero;
        if (!a.is_zero())
            ok = ok && a * a.inverse() == one && (b / a) * a == b;
        check(o, ok, [&] { return "a = " + a.str() + ", b = " + b.str() + ", c = " + c.str(); });
    }
    return o;
}

inline Outcome ring_axioms(int n, unsigned seed)
{
    Generator g(seed);
    Outcome o;
    for (int i = 0; i < n; ++i) {
        const int N = g.integer(0, 6);
        TruncatedSeries a = g.series(N), b = g.series(N), c = g.series(N);
        bool ok = a + b == b + a && a * b == b * a && (a * b) * c == a * (b * c) &&
                  a * (b + c) == a * b + a * c && (a - a).order() == std::nullopt;
        check(o, ok, [&] { return "a = " + a.str() + ", b = " + b.str() + ", c = " + c.str(); });
    }
    return o;
}

inline Outcome chain_rule(int n, unsigned seed)
{
    Generator g(seed);
    Outcome o;
    for (int i = 0; i < n; ++i) {
        const int N = g.integer(1, 6);
        TruncatedSeries f = g.series(N), inner = g.series(N, g.integer(1, 2));
        TruncatedSeries lhs = f.compose(inner).derivative();
        TruncatedSeries rhs = f.derivative().compose(inner) * inner.derivative();
        bool ok = lhs.agrees_with(rhs) && std::min(lhs.trunc(), rhs.trunc()) >= 0;
        check(o, ok, [&] { return "f = " + f.str() + ", g = " + inner.str(); });
    }
    return o;
}

inline Outcome invert_compose(int n, unsigned seed)
{
    Generator g(seed);
    Outcome o;
    for (int i = 0; i < n; ++i) {
        const int N = g.integer(0, 6);
        TruncatedSeries u = g.series(N);
        TruncatedSeries one = TruncatedSeries::constant(AlgebraicNumber(1), N);
        bool ok = u * u.invert() == one && u.invert().invert() == u;
        TruncatedSeries f = g.series(N), h = g.series(N, 1), k = g.series(N, 1);
        TruncatedSeries t = TruncatedSeries::variable(N);
        ok = ok && f.compose(t) == f && h.compose(t) == h;
        // composition is associative and multiplicative in the outer argument
        ok = ok && f.compose(h.compose(k)).agrees_with(f.compose(h).compose(k));
        ok = ok && (f * u).compose(h).agrees_with(f.compose(h) * u.compose(h));
        ok = ok && u.compose(h).invert().agrees_with(u.invert().compose(h));
        check(o, ok, [&] { return "u = " + u.str() + ", f = " + f.str() + ", h = " + h.str(); });
    }
    return o;
}

inline std::string describe(const Outcome& o)
{
    std::ostringstream s;
    s << o.cases - o.failures << "/" << o.cases << " cases";
    if (o.failures)
        s << ", first failure: " << o.first_failure;
    return s.str();
}

} // namespace properties
