#include "placeode/factor.hpp"

#include <algorithm>
#include <cstdint>
#include <random>

namespace placeode {

namespace {

using u64 = std::uint64_t;
using MPoly = std::vector<u64>; // coefficients mod p, lowest first, normalized
using ZPoly = std::vector<Integer>;

// ---- arithmetic mod a word-size prime

u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>((static_cast<unsigned __int128>(a) * b) % p); }

u64 powmod(u64 a, u64 e, u64 p)
{
    u64 r = 1;
    while (e) {
        if (e & 1)
            r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

u64 invmod(u64 a, u64 p) { return powmod(a, p - 2, p); }

void trim(MPoly& a)
{
    while (!a.empty() && a.back() == 0)
        a.pop_back();
}

int deg(const MPoly& a) { return static_cast<int>(a.size()) - 1; }

MPoly msub(const MPoly& a, const MPoly& b, u64 p)
{
    MPoly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) {
        u64 x = i < a.size() ? a[i] : 0, y = i < b.size() ? b[i] : 0;
        r[i] = (x + p - y) % p;
    }
    trim(r);
    return r;
}

MPoly mmul(const MPoly& a, const MPoly& b, u64 p)
{
    if (a.empty() || b.empty())
        return {};
    MPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = (r[i + j] + mulmod(a[i], b[j], p)) % p;
    trim(r);
    return r;
}

void mdivrem(const MPoly& a, const MPoly& b, u64 p, MPoly& q, MPoly& r)
{
    r = a;
    q.clear();
    if (deg(a) < deg(b))
        return;
    q.assign(a.size() - b.size() + 1, 0);
    u64 inv = invmod(b.back(), p);
    const int db = deg(b);
    for (int k = deg(a) - db; k >= 0; --k) {
        u64 c = mulmod(r[k + db], inv, p);
        q[k] = c;
        if (c == 0)
            continue;
        for (int j = 0; j <= db; ++j)
            r[k + j] = (r[k + j] + p - mulmod(c, b[j], p)) % p;
    }
    trim(r);
    trim(q);
}

MPoly mrem(const MPoly& a, const MPoly& b, u64 p)
{
    MPoly q, r;
    mdivrem(a, b, p, q, r);
    return r;
}

MPoly mmonic(MPoly a, u64 p)
{
    if (a.empty())
        return a;
    u64 inv = invmod(a.back(), p);
    for (auto& c : a)
        c = mulmod(c, inv, p);
    return a;
}

MPoly mgcd(MPoly a, MPoly b, u64 p)
{
    while (!b.empty()) {
        MPoly r = mrem(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return mmonic(a, p);
}

// s*a + t*b = 1 for coprime a, b
void mext_gcd(const MPoly& a, const MPoly& b, u64 p, MPoly& s, MPoly& t)
{
    MPoly r0 = a, r1 = b, s0{1}, s1, t0, t1{1};
    while (!r1.empty()) {
        MPoly q, r;
        mdivrem(r0, r1, p, q, r);
        r0 = std::move(r1);
        r1 = std::move(r);
        MPoly s2 = msub(s0, mmul(q, s1, p), p);
        MPoly t2 = msub(t0, mmul(q, t1, p), p);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    u64 inv = invmod(r0.back(), p);
    s = s0;
    t = t0;
    for (auto& c : s)
        c = mulmod(c, inv, p);
    for (auto& c : t)
        c = mulmod(c, inv, p);
}

MPoly mpow_mod(MPoly base, const Integer& e, const MPoly& m, u64 p)
{
    MPoly r{1};
    base = mrem(base, m, p);
    const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (std::size_t i = bits; i-- > 0;) {
        r = mrem(mmul(r, r, p), m, p);
        if (mpz_tstbit(e.get_mpz_t(), i))
            r = mrem(mmul(r, base, p), m, p);
    }
    return r;
}

MPoly mderiv(const MPoly& a, u64 p)
{
    MPoly r;
    for (std::size_t i = 1; i < a.size(); ++i)
        r.push_back(mulmod(a[i], i % p, p));
    trim(r);
    return r;
}

MPoly reduce(const ZPoly& f, u64 p)
{
    MPoly r;
    for (const auto& c : f)
        r.push_back(mpz_fdiv_ui(c.get_mpz_t(), p));
    trim(r);
    return r;
}

// Equal-degree splitting (Cantor-Zassenhaus) of a product of monic irreducibles of degree d.
void edf(const MPoly& f, int d, u64 p, std::mt19937_64& rng, std::vector<MPoly>& out)
{
    if (deg(f) == d) {
        out.push_back(f);
        return;
    }
    Integer e;
    mpz_ui_pow_ui(e.get_mpz_t(), p, d);
    e = (e - 1) / 2;
    for (;;) {
        MPoly a(deg(f), 0);
        for (auto& c : a)
            c = rng() % p;
        trim(a);
        if (deg(a) < 1)
            continue;
        MPoly g = mgcd(a, f, p);
        if (deg(g) > 0 && deg(g) < deg(f)) {
            MPoly q, r;
            mdivrem(f, g, p, q, r);
            edf(g, d, p, rng, out);
            edf(mmonic(q, p), d, p, rng, out);
            return;
        }
        MPoly b = mpow_mod(a, e, f, p);
        b = msub(b, MPoly{1}, p);
        g = mgcd(b, f, p);
        if (deg(g) > 0 && deg(g) < deg(f)) {
            MPoly q, r;
            mdivrem(f, g, p, q, r);
            edf(g, d, p, rng, out);
            edf(mmonic(q, p), d, p, rng, out);
            return;
        }
    }
}

// Factors a monic squarefree polynomial mod p into monic irreducibles.
std::vector<MPoly> factor_mod_p(MPoly f, u64 p)
{
    std::mt19937_64 rng(0x5eed);
    std::vector<MPoly> out;
    MPoly x{0, 1};
    MPoly h = x;
    for (int d = 1; 2 * d <= deg(f); ++d) {
        h = mpow_mod(h, Integer(static_cast<unsigned long>(p)), f, p);
        MPoly g = mgcd(msub(h, x, p), f, p);
        if (deg(g) > 0) {
            edf(g, d, p, rng, out);
            MPoly q, r;
            mdivrem(f, g, p, q, r);
            f = mmonic(q, p);
            h = mrem(h, f, p);
        }
    }
    if (deg(f) > 0)
        out.push_back(f);
    return out;
}

// ---- integer polynomials modulo m

void ztrim(ZPoly& a)
{
    while (!a.empty() && a.back() == 0)
        a.pop_back();
}

ZPoly zmod(ZPoly a, const Integer& m)
{
    for (auto& c : a)
        mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
    ztrim(a);
    return a;
}

ZPoly zadd(const ZPoly& a, const ZPoly& b)
{
    ZPoly r(std::max(a.size(), b.size()), Integer(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i)
        r[i] += b[i];
    ztrim(r);
    return r;
}

ZPoly zsub(const ZPoly& a, const ZPoly& b)
{
    ZPoly r(std::max(a.size(), b.size()), Integer(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i)
        r[i] -= b[i];
    ztrim(r);
    return r;
}

ZPoly zmul(const ZPoly& a, const ZPoly& b)
{
    if (a.empty() || b.empty())
        return {};
    ZPoly r(a.size() + b.size() - 1, Integer(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0)
            continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] += a[i] * b[j];
    }
    ztrim(r);
    return r;
}

ZPoly zmulm(const ZPoly& a, const ZPoly& b, const Integer& m) { return zmod(zmul(a, b), m); }

// division by a monic polynomial modulo m
void zdivrem_monic(const ZPoly& a, const ZPoly& b, const Integer& m, ZPoly& q, ZPoly& r)
{
    r = zmod(a, m);
    q.clear();
    const int da = static_cast<int>(r.size()) - 1, db = static_cast<int>(b.size()) - 1;
    if (da < db)
        return;
    q.assign(static_cast<std::size_t>(da - db) + 1, Integer(0));
    for (int k = da - db; k >= 0; --k) {
        Integer c = r[k + db];
        mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
        q[k] = c;
        if (c == 0)
            continue;
        for (int j = 0; j <= db; ++j)
            r[k + j] -= c * b[j];
    }
    r.resize(static_cast<std::size_t>(db));
    r = zmod(r, m);
    q = zmod(q, m);
}

ZPoly lift_mpoly(const MPoly& a)
{
    ZPoly r;
    for (u64 c : a)
        r.emplace_back(static_cast<unsigned long>(c));
    return r;
}

// One quadratic Hensel step: f = g*h mod m, s*g + t*h = 1 mod m, h monic -> same mod m^2.
void hensel_step(const ZPoly& f, ZPoly& g, ZPoly& h, ZPoly& s, ZPoly& t, const Integer& m)
{
    const Integer m2 = m * m;
    ZPoly e = zmod(zsub(f, zmul(g, h)), m2);
    ZPoly q, r;
    zdivrem_monic(zmul(s, e), h, m2, q, r);
    ZPoly g2 = zmod(zadd(zadd(g, zmul(t, e)), zmul(q, g)), m2);
    ZPoly h2 = zmod(zadd(h, r), m2);
    ZPoly b = zmod(zsub(zadd(zmul(s, g2), zmul(t, h2)), ZPoly{Integer(1)}), m2);
    ZPoly c, d;
    zdivrem_monic(zmul(s, b), h2, m2, c, d);
    s = zmod(zsub(s, d), m2);
    t = zmod(zsub(zsub(t, zmul(t, b)), zmul(c, g2)), m2);
    g = std::move(g2);
    h = std::move(h2);
}

// Lifts f = lc * prod(u_i) mod p to modulus M = p^(2^k) >= bound. Returns lifted monic factors.
std::vector<ZPoly> multi_lift(const ZPoly& f, const std::vector<MPoly>& us, u64 p, const Integer& bound,
                              Integer& M)
{
    M = p;
    int steps = 0;
    while (M <= bound) {
        M *= M;
        ++steps;
    }
    std::vector<ZPoly> out;
    ZPoly cur = f; // cur = lc_cur * prod(remaining)
    for (std::size_t i = 0; i + 1 < us.size(); ++i) {
        Integer lc = cur.back();
        // g = lc * u_i, h = prod of remaining (monic)
        MPoly hm{1};
        for (std::size_t j = i + 1; j < us.size(); ++j)
            hm = mmul(hm, us[j], p);
        MPoly gm = us[i];
        u64 lcp = mpz_fdiv_ui(lc.get_mpz_t(), p);
        for (auto& c : gm)
            c = mulmod(c, lcp, p);
        MPoly sm, tm;
        mext_gcd(gm, hm, p, sm, tm);
        ZPoly g = lift_mpoly(gm), h = lift_mpoly(hm), s = lift_mpoly(sm), t = lift_mpoly(tm);
        Integer m = p;
        for (int k = 0; k < steps; ++k) {
            hensel_step(cur, g, h, s, t, m);
            m *= m;
        }
        // monic version of g modulo M
        Integer inv;
        Integer lcM = g.back();
        mpz_invert(inv.get_mpz_t(), lcM.get_mpz_t(), M.get_mpz_t());
        for (auto& c : g)
            c = c * inv;
        out.push_back(zmod(g, M));
        cur = h;
    }
    out.push_back(cur);
    return out;
}

Integer content(const ZPoly& f)
{
    Integer g = 0;
    for (const auto& c : f)
        g = gcd(g, c);
    return g;
}

ZPoly primitive_part(ZPoly f)
{
    Integer c = content(f);
    if (c == 0)
        return f;
    if (f.back() < 0)
        c = -c;
    for (auto& a : f)
        a /= c;
    return f;
}

ZPoly symmetric(ZPoly f, const Integer& M)
{
    Integer half = M / 2;
    for (auto& c : f) {
        mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), M.get_mpz_t());
        if (c > half)
            c -= M;
    }
    ztrim(f);
    return f;
}

// exact division over Z; returns false if b does not divide a
bool zdivide(const ZPoly& a, const ZPoly& b, ZPoly& q)
{
    ZPoly r = a;
    const int da = static_cast<int>(a.size()) - 1, db = static_cast<int>(b.size()) - 1;
    if (da < db)
        return false;
    q.assign(static_cast<std::size_t>(da - db) + 1, Integer(0));
    for (int k = da - db; k >= 0; --k) {
        if (!mpz_divisible_p(r[k + db].get_mpz_t(), b.back().get_mpz_t()))
            return false;
        Integer c = r[k + db] / b.back();
        q[k] = c;
        if (c == 0)
            continue;
        for (int j = 0; j <= db; ++j)
            r[k + j] -= c * b[j];
    }
    for (int i = 0; i < db; ++i)
        if (r[i] != 0)
            return false;
    ztrim(q);
    return true;
}

bool next_prime_ok(const ZPoly& f, u64 p)
{
    if (mpz_fdiv_ui(f.back().get_mpz_t(), p) == 0)
        return false;
    MPoly fm = reduce(f, p);
    return deg(mgcd(fm, mderiv(fm, p), p)) == 0;
}

bool is_prime(u64 n)
{
    if (n < 2)
        return false;
    for (u64 d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

// Zassenhaus factorization of a primitive squarefree integer polynomial of degree >= 2.
std::vector<ZPoly> zassenhaus(ZPoly f)
{
    const int n = static_cast<int>(f.size()) - 1;
    // pick the prime giving the fewest modular factors among a few candidates
    u64 best_p = 0;
    std::vector<MPoly> best;
    int tried = 0;
    for (u64 p = 3; tried < 5; p += 2) {
        if (!is_prime(p) || !next_prime_ok(f, p))
            continue;
        ++tried;
        auto fs = factor_mod_p(mmonic(reduce(f, p), p), p);
        if (best_p == 0 || fs.size() < best.size()) {
            best_p = p;
            best = std::move(fs);
        }
        if (best.size() == 1)
            break;
    }
    if (best.size() == 1)
        return {f};

    Integer norm2 = 0;
    for (const auto& c : f)
        norm2 += c * c;
    Integer norm;
    mpz_sqrt(norm.get_mpz_t(), norm2.get_mpz_t());
    norm += 1;
    Integer bound = 2 * abs(f.back()) * norm;
    mpz_mul_2exp(bound.get_mpz_t(), bound.get_mpz_t(), static_cast<unsigned long>(n));

    Integer M;
    std::vector<ZPoly> lifted = multi_lift(f, best, best_p, bound, M);

    std::vector<ZPoly> result;
    std::vector<int> active(lifted.size());
    for (std::size_t i = 0; i < lifted.size(); ++i)
        active[i] = static_cast<int>(i);
    int s = 1;
    while (2 * s <= static_cast<int>(active.size())) {
        bool found = false;
        const int r = static_cast<int>(active.size());
        std::vector<int> idx(s);
        for (int i = 0; i < s; ++i)
            idx[i] = i;
        for (;;) {
            const Integer lc = f.back();
            // constant-term early abort
            Integer c0 = lc;
            for (int i : idx)
                c0 = (c0 * (lifted[active[i]].empty() ? Integer(0) : lifted[active[i]][0])) % M;
            {
                ZPoly cz = symmetric(ZPoly{c0}, M);
                Integer cc = cz.empty() ? Integer(0) : cz[0];
                bool possible = true;
                if (f[0] != 0 && cc != 0) {
                    // constant term of lc*g must divide lc*f(0)
                    Integer target = lc * f[0];
                    possible = mpz_divisible_p(target.get_mpz_t(), cc.get_mpz_t()) != 0;
                } else if (f[0] != 0 && cc == 0) {
                    possible = false;
                }
                if (possible) {
                    ZPoly g{lc};
                    for (int i : idx)
                        g = zmulm(g, lifted[active[i]], M);
                    g = primitive_part(symmetric(g, M));
                    ZPoly q;
                    if (zdivide(f, g, q)) {
                        result.push_back(g);
                        f = primitive_part(q);
                        std::vector<int> rest;
                        for (int k = 0, j = 0; k < r; ++k) {
                            if (j < s && idx[j] == k) {
                                ++j;
                                continue;
                            }
                            rest.push_back(active[k]);
                        }
                        active = std::move(rest);
                        found = true;
                        break;
                    }
                }
            }
            // next combination
            int i = s - 1;
            while (i >= 0 && idx[i] == r - s + i)
                --i;
            if (i < 0)
                break;
            ++idx[i];
            for (int j = i + 1; j < s; ++j)
                idx[j] = idx[j - 1] + 1;
        }
        if (!found)
            ++s;
    }
    result.push_back(primitive_part(f));
    return result;
}

QPoly to_qpoly(const ZPoly& z)
{
    std::vector<Rational> c;
    for (const auto& a : z)
        c.emplace_back(a);
    return QPoly(std::move(c)).monic();
}

bool qpoly_less(const QPoly& a, const QPoly& b)
{
    if (a.degree() != b.degree())
        return a.degree() < b.degree();
    for (int i = a.degree(); i >= 0; --i)
        if (a.coeff(i) != b.coeff(i))
            return a.coeff(i) < b.coeff(i);
    return false;
}

} // namespace

std::vector<Integer> primitive_integer(const QPoly& f)
{
    Integer den = 1;
    for (const auto& c : f.coeffs())
        den = lcm(den, c.get_den());
    ZPoly z;
    for (const auto& c : f.coeffs())
        z.push_back(c.get_num() * (den / c.get_den()));
    return primitive_part(z);
}

std::vector<std::pair<QPoly, int>> factor_rational(const QPoly& f)
{
    if (f.is_zero())
        throw Error("cannot factor the zero polynomial");
    std::vector<std::pair<QPoly, int>> out;
    for (const auto& [part, mult] : squarefree_decomposition(f)) {
        ZPoly z = primitive_integer(part);
        // strip x factors
        std::size_t k = 0;
        while (k < z.size() && z[k] == 0)
            ++k;
        if (k > 0) {
            out.emplace_back(QPoly::x(), mult);
            z.erase(z.begin(), z.begin() + static_cast<long>(k));
        }
        if (z.size() <= 1)
            continue;
        if (z.size() == 2) {
            out.emplace_back(to_qpoly(z), mult);
            continue;
        }
        for (const auto& g : zassenhaus(z))
            out.emplace_back(to_qpoly(g), mult);
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.first == b.first)
            return a.second < b.second;
        return qpoly_less(a.first, b.first);
    });
    return out;
}

std::vector<Rational> rational_roots(const QPoly& f)
{
    std::vector<Rational> out;
    if (f.is_zero())
        return out;
    for (const auto& [g, m] : factor_rational(f))
        if (g.degree() == 1)
            out.push_back(-g.coeff(0));
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace placeode
