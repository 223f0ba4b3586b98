#include "placeode/tower.hpp"

#include "placeode/errors.hpp"
#include "placeode/factor.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <map>
#include <mutex>

namespace placeode {

namespace {

std::atomic<int> g_degree_cap{64};

struct Interned {
    std::mutex mu;
    std::map<std::string, FieldPtr> fields;
};

Interned& interned()
{
    static Interned i;
    return i;
}

std::string qpoly_key(const QPoly& p)
{
    std::string s;
    for (const auto& c : p.coeffs())
        s += to_string(c) + ",";
    return s;
}

bool is_q(const FieldPtr& f) { return f->depth() == 0 && !f->is_bare(); }

std::vector<Rational> flat_in(const AlgebraicNumber& a, const FieldPtr& K) { return a.lifted(K).flat(); }

// Ball containment helpers
bool ball_disjoint(const Ball& a, const Complex& c, const Real& r)
{
    Real d = cabs_down(csub(a.mid, c));
    Real s(64);
    mpfr_add(s.get(), a.rad.get(), r.get(), MPFR_RNDU);
    return s < d;
}

Ball root_ball(const IsolatedRoot& r, long bits)
{
    return Ball(cconvert(r.center, static_cast<mpfr_prec_t>(std::max<long>(bits + 64, r.center.prec()))), r.radius);
}

Ball eval_flat(const std::vector<Rational>& flat, const Ball& eta) { return eval_ball(flat, eta); }

// sort isolated roots by midpoint, real then imaginary
std::vector<IsolatedRoot> sorted_roots(const QPoly& M)
{
    std::vector<IsolatedRoot> rs = isolate_roots(M.coeffs());
    std::sort(rs.begin(), rs.end(), [](const IsolatedRoot& a, const IsolatedRoot& b) {
        int c = mpfr_cmp(a.center.re.get(), b.center.re.get());
        if (c != 0)
            return c < 0;
        return mpfr_cmp(a.center.im.get(), b.center.im.get()) < 0;
    });
    return rs;
}

FieldPtr intern(Field::Spec spec)
{
    std::string key = std::to_string(reinterpret_cast<std::uintptr_t>(spec.parent.get())) + "|" + qpoly_key(spec.M) +
                      "|" + to_string(spec.shift) + "|" + std::to_string(spec.root_index);
    auto& in = interned();
    std::lock_guard<std::mutex> lk(in.mu);
    auto it = in.fields.find(key);
    if (it != in.fields.end())
        return it->second;
    FieldPtr f = std::make_shared<const Field>(std::move(spec));
    in.fields.emplace(key, f);
    return f;
}

std::string generic_label(const FieldPtr& K) { return "a" + std::to_string(K->depth() + 1); }

// Norm with a squarefree result of f(x - s*eta), trying s = 0, 1, -1, 2, ...
QPoly squarefree_norm(const UPoly& f, const FieldPtr& K, Rational& s)
{
    AlgebraicNumber eta = K->primitive_element();
    for (int k = 0; k < 200; ++k) {
        s = (k == 0) ? Rational(0) : Rational((k + 1) / 2 * ((k % 2) ? 1 : -1));
        UPoly g = sgn(s) == 0 ? f : f.shifted(AlgebraicNumber(-s) * eta);
        QPoly N = norm(g, K);
        if (gcd(N, N.derivative()).degree() == 0)
            return N;
    }
    throw Error("no squarefree norm found");
}

std::vector<UPoly> trager(const UPoly& f, const FieldPtr& K)
{
    Rational s;
    QPoly N = squarefree_norm(f, K, s);
    auto fs = factor_rational(N);
    if (fs.size() == 1)
        return {f.monic()};
    AlgebraicNumber shift = AlgebraicNumber(s) * K->primitive_element();
    std::vector<UPoly> out;
    for (const auto& [Ni, m] : fs) {
        UPoly h = to_upoly(Ni).shifted(shift);
        UPoly g = gcd(f, h);
        if (g.degree() > 0)
            out.push_back(g);
    }
    return out;
}

// Whether the ball polynomial value might vanish.
bool may_vanish(const UPoly& g, const Ball& x, long bits)
{
    std::vector<Ball> cs;
    for (const auto& c : g.coeffs())
        cs.push_back(c.enclosure(bits));
    Ball v = eval_ball(cs, x);
    return v.contains_zero();
}

} // namespace

int degree_cap() { return g_degree_cap.load(); }
void set_degree_cap(int cap) { g_degree_cap.store(cap); }

UPoly to_upoly(const QPoly& p)
{
    std::vector<AlgebraicNumber> c;
    for (const auto& q : p.coeffs())
        c.emplace_back(q);
    return UPoly(std::move(c));
}

FieldPtr coefficient_field(const UPoly& f, const FieldPtr& K) { return common_field(f.coeffs(), K); }

UPoly lift_poly(const UPoly& f, const FieldPtr& K)
{
    FieldPtr L = coefficient_field(f, K);
    std::vector<AlgebraicNumber> c;
    for (const auto& a : f.coeffs())
        c.push_back(a.lifted(L));
    return UPoly(std::move(c));
}

QPoly norm(const UPoly& f, const FieldPtr& K)
{
    if (is_q(K) || K->degree() <= 1) {
        std::vector<Rational> c;
        for (const auto& a : f.coeffs())
            c.push_back(a.to_rational());
        return QPoly(std::move(c));
    }
    const int n = f.degree();
    const int D = K->degree();
    std::vector<std::vector<Rational>> fl;
    for (const auto& a : f.coeffs())
        fl.push_back(flat_in(a, K));
    const QPoly& M = K->primitive_minpoly();
    std::vector<Rational> xs, ys;
    for (int i = 0; i <= n * D; ++i) {
        Rational x(i);
        std::vector<Rational> g;
        Rational xp(1);
        for (int j = 0; j <= n; ++j) {
            if (g.size() < fl[j].size())
                g.resize(fl[j].size(), Rational(0));
            for (std::size_t k = 0; k < fl[j].size(); ++k)
                g[k] += fl[j][k] * xp;
            xp *= x;
        }
        xs.push_back(x);
        QPoly G(g);
        ys.push_back(G.is_zero() ? Rational(0) : resultant(M, G));
    }
    return interpolate(xs, ys);
}

std::vector<std::pair<UPoly, int>> factor_over(const UPoly& f0, const FieldPtr& K0)
{
    if (f0.degree() <= 0)
        return {};
    FieldPtr K = coefficient_field(f0, K0);
    UPoly f = lift_poly(f0, K).monic();
    std::vector<std::pair<UPoly, int>> out;
    bool rational = std::all_of(f.coeffs().begin(), f.coeffs().end(), [](const AlgebraicNumber& a) { return a.is_rational(); });
    if (rational) {
        std::vector<Rational> c;
        for (const auto& a : f.coeffs())
            c.push_back(a.to_rational());
        for (const auto& [g, m] : factor_rational(QPoly(c))) {
            if (is_q(K) || g.degree() == 1) {
                out.emplace_back(to_upoly(g), m);
                continue;
            }
            for (auto& h : trager(to_upoly(g), K))
                out.emplace_back(std::move(h), m);
        }
        return out;
    }
    for (const auto& [part, m] : squarefree_decomposition(f)) {
        if (part.degree() == 1) {
            out.emplace_back(part, m);
            continue;
        }
        for (auto& h : trager(part, K))
            out.emplace_back(std::move(h), m);
    }
    return out;
}

std::vector<std::pair<AlgebraicNumber, int>> roots_in_tower(const UPoly& p, const FieldPtr& K)
{
    std::vector<std::pair<AlgebraicNumber, int>> out;
    if (p.degree() <= 0)
        return out;
    for (const auto& [g, m] : factor_over(p, K))
        if (g.degree() == 1)
            out.emplace_back(-g.coeff(0) / g.coeff(1), m);
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return numeric_compare_distinct(a.first, b.first) < 0; });
    return out;
}

std::vector<Adjoined> adjoin_all(const FieldPtr& K0, const UPoly& g0, const std::string& label)
{
    FieldPtr K = coefficient_field(g0, K0);
    UPoly g = lift_poly(g0, K).monic();
    const int r = g.degree();
    if (r < 2)
        throw Error("adjoin_all expects an irreducible polynomial of degree at least 2");
    const long D = static_cast<long>(K->degree()) * r;
    if (D > degree_cap())
        throw ExtensionLimitExceeded("extension of degree " + std::to_string(D) + " exceeds the cap of " +
                                         std::to_string(degree_cap()),
                                     K);
    Field::Spec base;
    base.parent = K;
    base.label = label.empty() ? generic_label(K) : label;
    base.minpoly = g.coeffs();
    std::vector<Rational> h;
    if (is_q(K)) {
        std::vector<Rational> c;
        for (const auto& a : g.coeffs())
            c.push_back(a.to_rational());
        base.M = QPoly(c);
        base.shift = 0;
        base.alpha = {Rational(0), Rational(1)};
    } else {
        Rational s;
        base.M = squarefree_norm(g, K, s).monic();
        base.shift = s;
        FieldPtr B = Field::bare(base.M);
        AlgebraicNumber etaB = B->primitive_element();
        // P2(theta) = sum_j g_j(theta) * (etaB - s*theta)^j over B
        UPoly lin(std::vector<AlgebraicNumber>{etaB, AlgebraicNumber(-s)});
        UPoly P2, pw = UPoly::constant(AlgebraicNumber(1));
        for (int j = 0; j <= r; ++j) {
            std::vector<AlgebraicNumber> gj;
            for (const auto& q : flat_in(g.coeff(j), K))
                gj.emplace_back(q);
            P2 = P2 + UPoly(gj) * pw;
            pw = pw * lin;
        }
        UPoly P1 = to_upoly(K->primitive_minpoly());
        UPoly G = gcd(P1, P2);
        if (G.degree() != 1)
            throw Error("primitive element construction failed");
        AlgebraicNumber hv = -G.coeff(0);
        h = hv.lifted(B).flat();
        if (hv.is_rational())
            h = hv.flat();
        base.parent_eta = h;
        std::vector<Rational> alpha{Rational(0), Rational(1)};
        if (alpha.size() < h.size())
            alpha.resize(h.size(), Rational(0));
        for (std::size_t i = 0; i < h.size(); ++i)
            alpha[i] -= s * h[i];
        base.alpha = alpha;
    }

    std::vector<IsolatedRoot> roots = sorted_roots(base.M);
    std::vector<Adjoined> out;
    for (std::size_t i = 0; i < roots.size(); ++i) {
        bool keep = true;
        if (!is_q(K)) {
            keep = false;
            for (long bits = 64;; bits *= 2) {
                IsolatedRoot ri = refine_root(base.M.coeffs(), roots[i], bits);
                Ball hb = eval_flat(h, root_ball(ri, bits));
                IsolatedRoot ek = K->eta_enclosure(bits);
                if (hb.inside(ek.center, ek.isolation)) {
                    keep = true;
                    break;
                }
                if (ball_disjoint(hb, ek.center, ek.radius))
                    break;
                if (bits > (1L << 16))
                    throw Error("could not identify the conjugate of the base field");
            }
        }
        if (!keep)
            continue;
        Field::Spec spec = base;
        spec.root = roots[i];
        spec.root_index = static_cast<int>(i);
        FieldPtr L = intern(std::move(spec));
        out.push_back(Adjoined{L, L->generator()});
    }
    if (static_cast<int>(out.size()) != r)
        throw Error("unexpected number of conjugates while adjoining a root");
    std::sort(out.begin(), out.end(), [](const Adjoined& a, const Adjoined& b) {
        return compare_balls([&](long bits) { return a.root.enclosure(bits); },
                             [&](long bits) { return b.root.enclosure(bits); }) < 0;
    });
    return out;
}

namespace {

// Field containing both roots of the monic irreducible quadratic g over K, and the roots.
std::pair<FieldPtr, std::vector<AlgebraicNumber>> adjoin_quadratic(const FieldPtr& K, const UPoly& g)
{
    AlgebraicNumber b = g.coeff(1), c = g.coeff(0);
    AlgebraicNumber disc = b * b - AlgebraicNumber(4) * c;
    AlgebraicNumber root_d;
    FieldPtr L;
    if (disc.is_rational()) {
        Rational d = disc.to_rational();
        Integer sq, core;
        square_split(d.get_num() * d.get_den(), sq, core);
        UPoly m(std::vector<AlgebraicNumber>{AlgebraicNumber(Rational(-core)), AlgebraicNumber(0), AlgebraicNumber(1)});
        auto cands = adjoin_all(K, m, "sqrt(" + core.get_str() + ")");
        L = cands.back().field;
        Rational scale(sq, d.get_den());
        scale.canonicalize();
        root_d = AlgebraicNumber(scale) * cands.back().root;
    } else {
        UPoly m(std::vector<AlgebraicNumber>{-disc, AlgebraicNumber(0), AlgebraicNumber(1)});
        auto cands = adjoin_all(K, m);
        L = cands.back().field;
        root_d = cands.back().root;
    }
    AlgebraicNumber half = AlgebraicNumber(Rational(1, 2));
    std::vector<AlgebraicNumber> roots{half * (-b - root_d), half * (-b + root_d)};
    std::sort(roots.begin(), roots.end(),
              [](const auto& x, const auto& y) { return numeric_compare_distinct(x, y) < 0; });
    return {L, roots};
}

} // namespace

Adjoined adjoin_root(const FieldPtr& K0, const UPoly& p)
{
    if (p.degree() <= 0)
        throw InvalidInput("cannot adjoin a root of a constant polynomial");
    FieldPtr K = coefficient_field(p, K0);
    auto fs = factor_over(p, K);
    std::vector<AlgebraicNumber> in_field;
    for (const auto& [g, m] : fs)
        if (g.degree() == 1)
            in_field.push_back(-g.coeff(0));
    if (!in_field.empty()) {
        std::sort(in_field.begin(), in_field.end(),
                  [](const auto& x, const auto& y) { return numeric_compare_distinct(x, y) < 0; });
        return Adjoined{K, in_field.back()};
    }
    const UPoly* best = nullptr;
    for (const auto& [g, m] : fs)
        if (!best || g.degree() < best->degree())
            best = &g;
    if (best->degree() == 2) {
        auto [L, roots] = adjoin_quadratic(K, *best);
        return Adjoined{L, roots.back()};
    }
    auto cands = adjoin_all(K, *best);
    return cands.back();
}

std::vector<std::pair<AlgebraicNumber, int>> all_roots(const UPoly& p, const FieldPtr& K0)
{
    std::vector<std::pair<AlgebraicNumber, int>> out;
    if (p.degree() <= 0)
        return out;
    FieldPtr K = coefficient_field(p, K0);
    for (const auto& [g, m] : factor_over(p, K)) {
        if (g.degree() == 1) {
            out.emplace_back(-g.coeff(0), m);
        } else if (g.degree() == 2) {
            for (auto& r : adjoin_quadratic(K, g).second)
                out.emplace_back(r, m);
        } else {
            for (auto& a : adjoin_all(K, g))
                out.emplace_back(a.root, m);
        }
    }
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return numeric_compare_distinct(a.first, b.first) < 0; });
    return out;
}

AlgebraicNumber sqrt_of(const Rational& q)
{
    if (sgn(q) == 0)
        return AlgebraicNumber();
    UPoly p(std::vector<AlgebraicNumber>{AlgebraicNumber(-q), AlgebraicNumber(0), AlgebraicNumber(1)});
    auto roots = all_roots(p);
    if (sgn(q) > 0)
        return roots.back().first; // the positive one is last
    return roots.back().first;     // +i*sqrt(|q|) has the larger imaginary part
}

AlgebraicNumber indexed_root(const QPoly& p, int k)
{
    if (p.degree() <= 0)
        throw InvalidInput("root() needs a non-constant polynomial");
    auto roots = all_roots(to_upoly(p));
    if (k < 1 || k > static_cast<int>(roots.size()))
        throw InvalidInput("root index " + std::to_string(k) + " out of range 1.." + std::to_string(roots.size()));
    return roots[static_cast<std::size_t>(k - 1)].first;
}

namespace detail {

FieldPtr merge_fields(const FieldPtr& A, const FieldPtr& B)
{
    // re-adjoin the levels of B over A one at a time, keeping their labels
    FieldPtr cur = A;
    for (const Field* lb : B->chain()) {
        FieldPtr Lb = lb->shared_from_this();
        std::vector<Rational> img;
        if (embedding(Lb, cur, img))
            continue;
        const FieldPtr& Pb = Lb->parent();
        std::vector<AlgebraicNumber> mc;
        for (const auto& c : Lb->minpoly())
            mc.push_back(c.lifted(cur));
        UPoly mp(std::move(mc));
        AlgebraicNumber gen_b = Lb->generator();
        auto gen_ball = [&](long bits) { return gen_b.enclosure(bits); };
        auto fs = factor_over(mp, cur);
        std::vector<const UPoly*> live;
        for (const auto& f : fs)
            live.push_back(&f.first);
        for (long bits = 64; live.size() > 1; bits *= 2) {
            std::vector<const UPoly*> next;
            for (const UPoly* g : live)
                if (may_vanish(*g, gen_ball(bits), bits))
                    next.push_back(g);
            live = std::move(next);
            if (bits > (1L << 16))
                throw Error("could not match a root while merging towers");
        }
        if (live.empty())
            throw Error("no factor vanishes at the generator while merging towers");
        const UPoly& g = *live[0];
        // eta_b = alpha_b + shift * eta_parent
        AlgebraicNumber eta_parent = Pb->depth() == 0 ? AlgebraicNumber() : Pb->primitive_element().lifted(cur);
        AlgebraicNumber root;
        if (g.degree() == 1) {
            root = -g.coeff(0);
        } else {
            auto cands = adjoin_all(cur, g, Lb->label());
            const Adjoined* pick = nullptr;
            for (long bits = 64; !pick; bits *= 2) {
                Ball target = gen_ball(bits);
                std::vector<const Adjoined*> hit;
                for (const auto& c : cands)
                    if (!ball_disjoint(c.root.enclosure(bits), target.mid, target.rad))
                        hit.push_back(&c);
                if (hit.size() == 1)
                    pick = hit[0];
                if (bits > (1L << 16))
                    throw Error("could not pin the merged generator");
            }
            cur = pick->field;
            root = pick->root;
            eta_parent = eta_parent.lifted(cur);
        }
        AlgebraicNumber eta_img = root + AlgebraicNumber(Lb->shift()) * eta_parent;
        register_embedding(Lb, cur, eta_img.lifted(cur).flat());
    }
    return cur;
}

} // namespace detail

} // namespace placeode
