#include "placeode/solver.hpp"

#include "placeode/errors.hpp"

#include <algorithm>
#include <future>
#include <stdexcept>

namespace placeode {

namespace {

int series_order(const TruncatedSeries& s)
{
    auto o = s.order();
    if (!o)
        throw InsufficientPrecision("series order is not certified at the current truncation");
    return *o;
}

// drops the first k coefficients: s / t^k
TruncatedSeries shift_down(const TruncatedSeries& s, int k)
{
    const auto& c = s.coeffs();
    return TruncatedSeries(std::vector<AlgebraicNumber>(c.begin() + std::min<std::size_t>(k, c.size()), c.end()),
                           s.trunc() - k);
}

// integral with zero constant term
TruncatedSeries integral(const TruncatedSeries& s)
{
    std::vector<AlgebraicNumber> c(static_cast<std::size_t>(s.trunc() + 2));
    for (int i = 0; i <= s.trunc(); ++i)
        c[i + 1] = s[i] / AlgebraicNumber(static_cast<long>(i + 1));
    return TruncatedSeries(std::move(c), s.trunc() + 1);
}

} // namespace

bool is_order_suitable(const Place& p)
{
    const int ordAp = p.e - 1;
    const int ordB = p.c1.is_zero() ? series_order(p.B) : 0;
    const bool plain = ordAp == ordB;
    // orders at the center: c1 != 0 needs ord_c(A) = 1, otherwise ord_c(B) = ord_c(A) - 1
    const bool centered = p.c1.is_zero() ? p.b_order() == p.e - 1 : p.e == 1;
    if (plain != centered)
        throw std::logic_error("order-suitability criteria disagree");
    return plain;
}

TruncatedSeries reparametrize(const Place& p, int N)
{
    if (!is_order_suitable(p))
        throw NotOrderSuitable();
    const int k = p.e - 1;
    TruncatedSeries alpha = shift_down(p.A.derivative(), k);
    TruncatedSeries beta = shift_down(p.B, k);
    // S' = W(S) with W = beta / alpha, W(0) = b_k / a_k != 0
    TruncatedSeries W = beta * alpha.invert();
    const int n = std::min(N, W.trunc() + 1);
    if (n < 1)
        throw InsufficientPrecision("place carries too few coefficients to reparametrize");
    // G(S(t)) = t with G' = 1/W; Newton on the series reversion
    TruncatedSeries G = integral(W.invert());
    TruncatedSeries S({AlgebraicNumber(), W[0]}, 1);
    int prec = 1;
    while (prec < n) {
        const int next = std::min(2 * prec + 1, n);
        TruncatedSeries Sp(S.coeffs(), next);
        TruncatedSeries r = G.truncated(next).compose(Sp) - TruncatedSeries::variable(next);
        TruncatedSeries w = W.truncated(std::min(W.trunc(), next)).compose(Sp);
        S = (Sp - r * w).truncated(next);
        prec = next;
    }
    return S.truncated(n);
}

std::vector<SolutionTruncation> solve_at(const BiPoly& F, const InitialTuple& c, int N)
{
    if (N < 1)
        throw InvalidInput("truncation order must be positive");
    std::vector<SolutionTruncation> out;
    if (!F.eval(c.c0, c.c1).is_zero())
        return out;
    const int mult = multiplicity_at(F, c.c0, c.c1);
    int need = std::max(N, mult + 1);
    for (int attempt = 0; attempt < 64; ++attempt) {
        std::vector<Place> places = places_at(F, c.c0, c.c1, need);
        int want = need;
        for (const Place& p : places)
            if (is_order_suitable(p))
                want = std::max(want, mult + p.e);
        if (want > need) {
            need = want;
            continue;
        }
        out.clear();
        for (std::size_t i = 0; i < places.size(); ++i) {
            const Place& p = places[i];
            if (!is_order_suitable(p))
                continue;
            const int order = std::max(N, mult + p.e);
            TruncatedSeries S = reparametrize(p, order - p.e + 1);
            // A = c0 + lambda t^e is exact
            TruncatedSeries y = TruncatedSeries::constant(c.c0, order) + S.pow(p.e).scaled(p.lambda());
            out.push_back(SolutionTruncation{y.truncated(order), c, static_cast<int>(i) + 1, S});
        }
        bool distinct = true;
        for (std::size_t i = 0; i < out.size(); ++i)
            for (std::size_t j = i + 1; j < out.size(); ++j)
                if (out[i].y.agrees_with(out[j].y))
                    distinct = false;
        if (distinct)
            return out;
        ++need;
        ++N;
    }
    throw InsufficientPrecision("solution truncations could not be separated");
}

std::vector<AlgebraicNumber> constant_solutions(const BiPoly& F)
{
    std::vector<AlgebraicNumber> out;
    for (auto& [r, m] : all_roots(F.slice_z(AlgebraicNumber())))
        out.push_back(r);
    return out;
}

std::vector<CriticalPoint> critical_set(const BiPoly& F)
{
    std::vector<Point> pts = solve_system(F, BiPoly::z());
    BiPoly S = separant(F);
    for (auto& p : solve_system(F, S))
        if (std::none_of(pts.begin(), pts.end(), [&](const Point& q) { return same_point(p, q); }))
            pts.push_back(p);
    std::sort(pts.begin(), pts.end(), point_less);
    std::vector<CriticalPoint> out;
    for (auto& p : pts) {
        CriticalPoint c{p};
        c.on_z_axis = p.z.is_zero();
        c.separant_zero = S.eval(p.y, p.z).is_zero();
        c.non_solution_place = c.on_z_axis && !c.separant_zero;
        out.push_back(std::move(c));
    }
    return out;
}

Classification classify(const BiPoly& F, int N, int jobs)
{
    Classification cl;
    std::vector<CriticalPoint> crit = critical_set(F);
    std::vector<std::size_t> counts(crit.size());
    if (jobs <= 1) {
        for (std::size_t i = 0; i < crit.size(); ++i)
            counts[i] = solve_at(F, {crit[i].point.y, crit[i].point.z}, N).size();
    } else {
        for (std::size_t start = 0; start < crit.size(); start += static_cast<std::size_t>(jobs)) {
            std::vector<std::future<std::size_t>> fs;
            const std::size_t stop = std::min(crit.size(), start + static_cast<std::size_t>(jobs));
            for (std::size_t i = start; i < stop; ++i)
                fs.push_back(std::async(std::launch::async, [&, i] {
                    return solve_at(F, {crit[i].point.y, crit[i].point.z}, N).size();
                }));
            for (std::size_t i = start; i < stop; ++i)
                counts[i] = fs[i - start].get();
        }
    }
    for (std::size_t i = 0; i < crit.size(); ++i) {
        cl.a1_complement_of.push_back(crit[i].point);
        if (counts[i] == 1)
            cl.a1_extra.push_back(crit[i].point);
        else
            cl.buckets[static_cast<int>(counts[i])].push_back(crit[i].point);
    }
    cl.constants = constant_solutions(F);
    return cl;
}

SolutionTruncation direct_method(const BiPoly& F, const InitialTuple& c, int N)
{
    if (N < 1)
        throw InvalidInput("truncation order must be positive");
    if (!F.eval(c.c0, c.c1).is_zero())
        throw PointNotOnCurve();
    const AlgebraicNumber s = separant(F).eval(c.c0, c.c1);
    if (s.is_zero())
        throw SeparantVanishes();
    std::vector<AlgebraicNumber> y{c.c0, c.c1};
    for (int k = 1; k < N; ++k) {
        // coefficient of t^k in F(y, y') with c_{k+1} = 0 is affine in c_{k+1} with slope (k+1) s
        TruncatedSeries Y(y, k);
        TruncatedSeries Yp = Y.derivative();
        Yp = TruncatedSeries(Yp.coeffs(), k);
        AlgebraicNumber rho = F.eval_series(Y, Yp)[k];
        y.push_back(-rho / (AlgebraicNumber(static_cast<long>(k + 1)) * s));
    }
    return SolutionTruncation{TruncatedSeries(y, N), c, 0, TruncatedSeries()};
}

} // namespace placeode
