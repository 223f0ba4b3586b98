#include "placeode/puiseux.hpp"

#include "placeode/errors.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace placeode {

int Place::b_order() const
{
    for (int k = 1; k <= B.trunc(); ++k)
        if (!B[k].is_zero())
            return k;
    throw InsufficientPrecision("second coordinate of the place is constant to the certified order");
}

std::vector<Edge> newton_polygon(const BiPoly& H)
{
    if (H.is_zero() || !H.coeff(0, 0).is_zero())
        throw DegenerateInput("the polynomial does not vanish at the origin");
    int j0 = -1;
    for (const auto& [k, v] : H.terms())
        if (k.first == 0 && (j0 < 0 || k.second < j0))
            j0 = k.second;
    if (j0 < 0)
        throw DegenerateInput("the polynomial is divisible by y");
    // lowest deg_y in each row deg_z = j
    std::vector<int> low(static_cast<std::size_t>(j0 + 1), -1);
    for (const auto& [k, v] : H.terms())
        if (k.second <= j0 && (low[k.second] < 0 || k.first < low[k.second]))
            low[k.second] = k.first;
    int jend = 0;
    while (low[jend] < 0)
        ++jend;
    std::vector<Edge> edges;
    int ci = 0, cj = j0;
    while (cj > jend) {
        // next vertex minimizes (i - ci) / (cj - j); ties go to the lowest row
        int best = -1;
        for (int j = cj - 1; j >= jend; --j) {
            if (low[j] < 0)
                continue;
            if (best < 0 || Integer(low[j] - ci) * (cj - best) <= Integer(low[best] - ci) * (cj - j))
                best = j;
        }
        Rational slope(low[best] - ci, cj - best);
        slope.canonicalize();
        Edge e{slope, {}};
        for (int j = best; j <= cj; ++j)
            if (low[j] >= 0 && Rational(low[j] - ci) == slope * Rational(cj - j))
                e.points.emplace_back(low[j], j);
        edges.push_back(std::move(e));
        ci = low[best];
        cj = best;
    }
    return edges;
}

namespace {

struct Stage {
    AlgebraicNumber xi;
    int q, m, u, v;
};

struct Branch {
    std::vector<Stage> stages;
    BiPoly chart;     // regular chart, unused when exact_zero
    bool exact_zero = false;
};

// H(xi^v x^q, x^m (xi^u + w)) / x^l
BiPoly substitute(const BiPoly& H, const AlgebraicNumber& xi, int q, int m, int u, int v, int l)
{
    const AlgebraicNumber xu = xi.pow(u), xv = xi.pow(v);
    const int dz = H.deg_z(), dy = H.deg_y();
    std::vector<AlgebraicNumber> xvp{AlgebraicNumber(1)}, xup{AlgebraicNumber(1)};
    for (int i = 1; i <= dy; ++i)
        xvp.push_back(xvp.back() * xv);
    for (int j = 1; j <= dz; ++j)
        xup.push_back(xup.back() * xu);
    // (xu + w)^j coefficients
    std::vector<std::vector<AlgebraicNumber>> expand(static_cast<std::size_t>(dz + 1));
    std::vector<Integer> binom{Integer(1)};
    for (int j = 0; j <= dz; ++j) {
        if (j > 0) {
            std::vector<Integer> next(static_cast<std::size_t>(j + 1), Integer(1));
            for (int b = 1; b < j; ++b)
                next[b] = binom[b - 1] + binom[b];
            binom = std::move(next);
        }
        for (int b = 0; b <= j; ++b)
            expand[j].push_back(AlgebraicNumber(Rational(binom[b])) * xup[j - b]);
    }
    std::map<BiPoly::Key, AlgebraicNumber> acc;
    for (const auto& [k, a] : H.terms()) {
        const int i = k.first, j = k.second;
        const int xp = q * i + m * j - l;
        AlgebraicNumber c = a * xvp[i];
        for (int b = 0; b <= j; ++b)
            acc[{xp, b}] += c * expand[j][b];
    }
    return BiPoly(std::move(acc));
}

// u q - v m = 1 with u, v >= 0
std::pair<int, int> bezout(int q, int m)
{
    for (int u = 1; u <= m; ++u)
        if ((static_cast<long>(u) * q - 1) % m == 0)
            return {u, static_cast<int>((static_cast<long>(u) * q - 1) / m)};
    throw DegenerateInput("edge slope is not in lowest terms");
}

void expand_branches(BiPoly H, std::vector<Stage>& chain, std::vector<Branch>& out)
{
    int jmin = std::numeric_limits<int>::max();
    for (const auto& [k, v] : H.terms())
        jmin = std::min(jmin, k.second);
    if (jmin > 0) {
        if (jmin > 1)
            throw DegenerateInput("repeated branch");
        out.push_back(Branch{chain, BiPoly(), true});
        std::map<BiPoly::Key, AlgebraicNumber> t;
        for (const auto& [k, v] : H.terms())
            t[{k.first, k.second - 1}] = v;
        H = BiPoly(std::move(t));
        if (!H.coeff(0, 0).is_zero())
            return;
    }
    for (const Edge& edge : newton_polygon(H)) {
        const int m = static_cast<int>(edge.slope.get_num().get_si());
        const int q = static_cast<int>(edge.slope.get_den().get_si());
        const int jlo = edge.points.front().second;
        const int l = q * edge.points.front().first + m * jlo;
        std::vector<AlgebraicNumber> phi(static_cast<std::size_t>((edge.points.back().second - jlo) / q + 1));
        for (auto [i, j] : edge.points)
            phi[(j - jlo) / q] = H.coeff(i, j);
        auto [u, v] = bezout(q, m);
        auto roots = all_roots(UPoly(std::move(phi)), H.field());
        for (auto it = roots.rbegin(); it != roots.rend(); ++it) {
            const auto& [xi, r] = *it;
            BiPoly H1 = substitute(H, xi, q, m, u, v, l);
            chain.push_back(Stage{xi, q, m, u, v});
            if (r == 1)
                out.push_back(Branch{chain, H1, false});
            else
                expand_branches(H1, chain, out);
            chain.pop_back();
        }
    }
}

Place assemble(const Branch& br, const AlgebraicNumber& c0, const AlgebraicNumber& c1, int N, int mult)
{
    // x_k = kappa_k t^E_k, walking up from the last chart where x_K = t
    const std::size_t K = br.stages.size();
    std::vector<AlgebraicNumber> kappa(K + 1);
    std::vector<int> E(K + 1);
    kappa[K] = AlgebraicNumber(1);
    E[K] = 1;
    long shift = 0;
    for (std::size_t k = K; k-- > 0;) {
        const Stage& s = br.stages[k];
        kappa[k] = s.xi.pow(s.v) * kappa[k + 1].pow(s.q);
        E[k] = s.q * E[k + 1];
        shift += static_cast<long>(s.m) * E[k + 1];
    }
    // the singular part always stays visible
    N = std::max<int>(N, static_cast<int>(shift));
    const int big = N + 1;
    TruncatedSeries W;
    if (br.exact_zero) {
        W = TruncatedSeries({}, big);
    } else {
        const int P = static_cast<int>(std::max<long>(N - shift, 0));
        W = regular_branch(br.chart, P);
    }
    for (std::size_t k = K; k-- > 0;) {
        const Stage& s = br.stages[k];
        const int pw = s.m * E[k + 1];
        TruncatedSeries mono = TruncatedSeries::monomial(kappa[k + 1].pow(s.m), pw, pw + big);
        TruncatedSeries lead = TruncatedSeries::constant(s.xi.pow(s.u), big + pw);
        W = mono * (lead + W);
    }
    Place p;
    p.c0 = c0;
    p.c1 = c1;
    p.e = E[0];
    p.center_multiplicity = mult;
    AlgebraicNumber lambda = kappa[0];
    std::vector<AlgebraicNumber> bc = W.truncated(N).coeffs();
    bc[0] += c1;
    TruncatedSeries B(std::move(bc), N);
    // absorb lambda^(1/e) when possible; a rational lambda keeps only its sign
    if (lambda != AlgebraicNumber(1)) {
        std::vector<AlgebraicNumber> xe(static_cast<std::size_t>(p.e + 1));
        xe[0] = -lambda;
        xe[p.e] = AlgebraicNumber(1);
        FieldPtr K0 = common_field(B.field(), lambda.field());
        auto in_field = roots_in_tower(UPoly(xe), K0);
        if (!in_field.empty()) {
            B = B.rescaled(in_field.back().first.inverse());
            lambda = AlgebraicNumber(1);
        } else if (lambda.is_rational()) {
            Rational q = lambda.to_rational();
            xe[0] = AlgebraicNumber(Rational(-abs(q)));
            auto roots = all_roots(UPoly(xe));
            B = B.rescaled(roots.back().first.inverse());
            lambda = AlgebraicNumber(sgn(q));
        }
    }
    std::vector<AlgebraicNumber> ac(static_cast<std::size_t>(p.e + 1));
    ac[0] = c0;
    ac[p.e] = lambda;
    p.A = TruncatedSeries(std::move(ac), N);
    p.B = std::move(B);
    p.order = std::min(p.e, p.b_order());
    return p;
}

} // namespace

std::vector<Place> places_at(const BiPoly& F, const AlgebraicNumber& c0, const AlgebraicNumber& c1, int N)
{
    if (N < 1)
        throw InvalidInput("truncation order must be positive");
    if (!F.eval(c0, c1).is_zero())
        throw PointNotOnCurve();
    BiPoly H = F.translate(c0, c1);
    const int mult = H.lowest_degree();
    std::vector<Stage> chain;
    std::vector<Branch> branches;
    expand_branches(H, chain, branches);
    std::vector<Place> out;
    for (const auto& br : branches)
        out.push_back(assemble(br, c0, c1, N, mult));
    return out;
}

int default_bound(const BiPoly& F)
{
    return 2 * std::max(F.deg_y() - 1, 0) * std::max(F.deg_z(), 0) + 1;
}

std::pair<AlgebraicNumber, AlgebraicNumber> tangent_vector(const Place& p)
{
    const int n = p.e, m = p.b_order();
    if (n == m)
        return {p.A[n], p.B[m]};
    if (n < m)
        return {p.A[n], AlgebraicNumber()};
    return {AlgebraicNumber(), p.B[m]};
}

std::string to_string(RamificationKind k)
{
    switch (k) {
    case RamificationKind::none:
        return "none";
    case RamificationKind::z_ramification:
        return "z_ramification";
    case RamificationKind::y_ramification:
        return "y_ramification";
    case RamificationKind::singular:
        return "singular";
    }
    return "none";
}

RamificationKind ramification_kind(const Place& p)
{
    if (p.center_multiplicity > 1)
        return RamificationKind::singular;
    const int n = p.e, m = p.b_order();
    if (n > m)
        return RamificationKind::z_ramification;
    if (m > n)
        return RamificationKind::y_ramification;
    return RamificationKind::none;
}

bool equivalent(const Place& p, const Place& q)
{
    if (p.e != q.e || p.c0 != q.c0 || p.c1 != q.c1)
        return false;
    // t -> mu t maps p.A onto q.A iff mu^e = q.lambda / p.lambda
    std::vector<AlgebraicNumber> xe(static_cast<std::size_t>(p.e + 1));
    xe[0] = -(q.lambda() / p.lambda());
    xe[p.e] = AlgebraicNumber(1);
    for (const auto& [mu, mult] : all_roots(UPoly(xe), common_field(p.B.field(), q.B.field())))
        if (p.B.rescaled(mu).agrees_with(q.B))
            return true;
    return false;
}

int support_gcd(const Place& p)
{
    int g = p.e;
    for (int k = 1; k <= p.B.trunc(); ++k)
        if (!p.B[k].is_zero())
            g = std::gcd(g, k);
    return g;
}

} // namespace placeode
