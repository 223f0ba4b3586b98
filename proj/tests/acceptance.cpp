// Acceptance driver: `acceptance <n>` checks criterion n and prints one PASS/FAIL line.
#include "properties.hpp"

#include <chrono>
#include <iostream>
#include <random>

using namespace placeode;
using fixtures::an;
using fixtures::q;
using fixtures::series;

namespace {

struct Report {
    std::vector<std::string> problems;
    void require(bool ok, const std::string& what)
    {
        if (!ok)
            problems.push_back(what);
    }
};

// Everything produced by criteria 1-4, for the residual suite.
struct Produced {
    std::vector<std::pair<BiPoly, Place>> places;
    std::vector<std::pair<BiPoly, SolutionTruncation>> solutions;

    void add(const BiPoly& F, const std::vector<Place>& ps)
    {
        for (const auto& p : ps)
            places.emplace_back(F, p);
    }
    void add(const BiPoly& F, const std::vector<SolutionTruncation>& ss)
    {
        for (const auto& s : ss)
            solutions.emplace_back(F, s);
    }
};

bool has_point(const std::vector<Point>& pts, const AlgebraicNumber& y, const AlgebraicNumber& z)
{
    return std::any_of(pts.begin(), pts.end(), [&](const Point& p) { return p.y == y && p.z == z; });
}

std::vector<Place> places_with_suitable(const BiPoly& F, const InitialTuple& c, int N, Produced& out)
{
    auto ps = places_at(F, c.c0, c.c1, N);
    out.add(F, ps);
    return ps;
}

void criterion1(Report& r, Produced& out)
{
    BiPoly F = fixtures::nodal_cubic();
    auto cs = critical_set(F);
    r.require(cs.size() == 2 && cs[0].point.y == an(-1) && cs[0].point.z == an(0) && cs[1].point.y == an(0) &&
                  cs[1].point.z == an(0),
              "critical set differs from {(0,0), (-1,0)}");
    places_with_suitable(F, {an(0), an(0)}, 4, out);
    places_with_suitable(F, {an(-1), an(0)}, 4, out);
    auto s0 = solve_at(F, {an(0), an(0)}, 4);
    out.add(F, s0);
    r.require(s0.empty(), "solutions at (0,0)");
    auto s1 = solve_at(F, {an(-1), an(0)}, 4);
    out.add(F, s1);
    r.require(s1.size() == 1 && s1[0].y.truncated(4) == series({"-1", "0", "1/4", "0", "-1/24"}, 4),
              "solution at (-1,0)");
    places_with_suitable(F, {an(1), sqrt_of(q(2))}, 3, out);
    auto s2 = solve_at(F, {an(1), sqrt_of(q(2))}, 3);
    out.add(F, s2);
    r.require(s2.size() == 1 && s2[0].y.truncated(3) == series({"1", "sqrt(2)", "5/4", "2/3*sqrt(2)"}, 3),
              "solution at (1, sqrt(2))");
    Classification cl = classify(F, 1);
    r.require(cl.buckets.size() == 1 && cl.buckets[0].size() == 1 && has_point(cl.buckets[0], an(0), an(0)),
              "A0 differs from {(0,0)}");
    r.require(cl.a1_extra.size() == 1 && has_point(cl.a1_extra, an(-1), an(0)) && cl.a1_complement_of.size() == 2,
              "A1 differs from the complement of (0,0)");
    r.require(cl.constants == std::vector<AlgebraicNumber>{an(-1), an(0)}, "constants differ from {0, -1}");
}

void criterion2(Report& r, Produced& out)
{
    BiPoly F = fixtures::sextic();
    auto ps = places_with_suitable(F, {an(0), an(1)}, 6, out);
    AlgebraicNumber s2 = sqrt_of(q(2));
    if (ps.size() != 4) {
        r.require(false, "expected 4 places at (0,1), got " + std::to_string(ps.size()));
    } else {
        auto lead = [](const Place& p, int a_to, int b_to) {
            return std::make_pair(p.A.truncated(a_to), p.B.truncated(b_to));
        };
        r.require(lead(ps[0], 2, 1) == std::make_pair(series({"0", "0", "1"}, 2), series({"1", "sqrt(2)"}, 1)),
                  "P1 leading terms");
        r.require(lead(ps[1], 2, 1) == std::make_pair(series({"0", "0", "-1"}, 2), series({"1", "-sqrt(2)"}, 1)),
                  "P2 leading terms");
        r.require(lead(ps[2], 1, 5) == std::make_pair(series({"0", "1"}, 1), series({"1", "0", "1/2", "0", "3/16", "0"}, 5)),
                  "P3 leading terms");
        r.require(lead(ps[3], 1, 5) ==
                      std::make_pair(series({"0", "1"}, 1), series({"1", "0", "-1/2", "0", "-3/16", "0"}, 5)),
                  "P4 leading terms");
        r.require(!is_order_suitable(ps[0]) && !is_order_suitable(ps[1]) && is_order_suitable(ps[2]) &&
                      is_order_suitable(ps[3]),
                  "order-suitable places are not exactly P3, P4");
    }
    (void)s2;
    auto sols = solve_at(F, {an(0), an(1)}, 5);
    out.add(F, sols);
    const std::vector<TruncatedSeries> printed = {series({"0", "1", "0", "1/6", "0", "17/240"}, 5),
                                                  series({"0", "1", "0", "-1/6", "0", "17/240"}, 5)};
    if (sols.size() != 2) {
        r.require(false, "expected 2 solutions at (0,1), got " + std::to_string(sols.size()));
    } else {
        for (std::size_t i = 0; i < 2; ++i)
            r.require(sols[i].y.truncated(5) == printed[i], "solution " + std::to_string(i + 1) + " is " +
                                                               sols[i].y.truncated(5).str() + ", expected " +
                                                               printed[i].str());
    }
    Classification cl = classify(F, 1, 4);
    int alpha = 0, beta_gamma = 0;
    auto is_alpha = [](const AlgebraicNumber& a) { return (a.pow(6) + an(3) * a.pow(4) - a.pow(2) + an(1)).is_zero(); };
    for (const auto& p : cl.buckets[0]) {
        if (p.z.is_zero() && is_alpha(p.y))
            ++alpha;
        AlgebraicNumber b = p.y * an(9, 4);
        if ((b * b - an(3)).is_zero() && (an(27) * p.z * p.z - an(54) * p.z + an(19)).is_zero())
            ++beta_gamma;
    }
    r.require(cl.buckets[0].size() == 10 && alpha == 6 && beta_gamma == 4, "A0 differs from the 10 points");
    r.require(cl.buckets.count(2) && cl.buckets[2].size() == 1 && has_point(cl.buckets[2], an(0), an(1)),
              "A2 differs from {(0,1)}");
    r.require(cl.constants.size() == 6 && std::all_of(cl.constants.begin(), cl.constants.end(), is_alpha),
              "constants differ from the six alpha");
}

void criterion3(Report& r, Produced& out)
{
    for (int m = 1; m <= 4; ++m) {
        BiPoly G = fixtures::cusp_family(m);
        auto sols = solve_at(G, {an(0), an(1)}, 4);
        out.add(G, sols);
        r.require(sols.empty(), "solutions found for m = " + std::to_string(m));
        auto ps = places_with_suitable(G, {an(0), an(1)}, 2 * m + 3, out);
        if (ps.size() != 1) {
            r.require(false, "expected one place for m = " + std::to_string(m));
            continue;
        }
        auto [a, b] = tangent_vector(ps[0]);
        r.require(a.is_zero() && !b.is_zero(), "m = " + std::to_string(m) + ": tangent (" + a.str() + ", " +
                                                   b.str() + ") is not parallel to the z-axis");
    }
}

BiPoly random_cubic(std::mt19937& rng)
{
    std::uniform_int_distribution<int> coef(-3, 3);
    for (;;) {
        BiPoly F;
        for (int i = 0; i <= 3; ++i)
            for (int j = 0; i + j <= 3; ++j)
                F = F + BiPoly::monomial(an(coef(rng)), i, j);
        if (F.total_degree() != 3 || F.deg_z() < 1)
            continue;
        try {
            validate_input(F);
            return F;
        } catch (const InvalidInput&) {
        }
    }
}

void criterion4(Report& r, Produced& out)
{
    std::vector<BiPoly> curves = {fixtures::nodal_cubic(), fixtures::sextic(), fixtures::cusp_family(1),
                                  fixtures::cusp_family(2)};
    std::mt19937 rng(20240917);
    for (int i = 0; i < 5; ++i)
        curves.push_back(random_cubic(rng));
    int sampled = 0;
    const std::vector<long> c0s = {1, 2, -2, 3};
    for (const auto& F : curves) {
        int here = 0;
        for (long c0 : c0s) {
            if (here >= 3)
                break;
            UPoly slice = F.slice_y(an(c0));
            if (slice.degree() < 1)
                continue;
            for (const auto& [c1, mult] : all_roots(slice)) {
                if (here >= 3)
                    break;
                if (c1.is_zero() || separant(F).eval(an(c0), c1).is_zero())
                    continue;
                InitialTuple c{an(c0), c1};
                auto d = direct_method(F, c, 10);
                auto s = solve_at(F, c, 10);
                out.add(F, s);
                out.solutions.emplace_back(F, d);
                ++sampled;
                ++here;
                const bool ok = s.size() == 1 && s[0].y.truncated(10) == d.y.truncated(10);
                r.require(ok, "disagreement for " + F.str() + " at (" + std::to_string(c0) + ", " + c1.str() + ")");
            }
        }
    }
    r.require(sampled >= 20, "only " + std::to_string(sampled) + " points sampled");
}

void criterion5(Report& r)
{
    Report ignore;
    Produced all;
    criterion1(ignore, all);
    criterion2(ignore, all);
    criterion3(ignore, all);
    criterion4(ignore, all);
    for (const auto& [F, p] : all.places) {
        const int N = std::min(p.A.trunc(), p.B.trunc());
        r.require(F.eval_series(p.A, p.B).order_lower_bound() > N, "place residual " + p.B.str());
    }
    for (const auto& [F, s] : all.solutions)
        r.require(F.eval_series(s.y, s.y.derivative()).order_lower_bound() >= s.y.trunc(),
                  "solution residual " + s.y.str());
    r.require(all.places.size() >= 10 && all.solutions.size() >= 20, "too few objects collected");
}

void criterion6(Report& r)
{
    const std::vector<std::tuple<BiPoly, InitialTuple, int>> cases = {
        {fixtures::nodal_cubic(), {an(0), an(0)}, 2}, {fixtures::sextic(), {an(0), an(1)}, 4}};
    for (const auto& [F, c, expect] : cases) {
        int total = 0;
        for (const auto& p : places_at(F, c.c0, c.c1, 4))
            total += p.order;
        const int lowest = F.translate(c.c0, c.c1).lowest_degree();
        r.require(total == expect && lowest == expect && multiplicity_at(F, c.c0, c.c1) == expect,
                  "multiplicity " + std::to_string(total) + " from places, " + std::to_string(lowest) +
                      " from the translated polynomial, expected " + std::to_string(expect));
    }
}

void criterion7(Report& r)
{
    using namespace properties;
    const std::vector<std::pair<std::string, Outcome>> suites = {
        {"field axioms", field_axioms(1000, 1)},
        {"ring axioms", ring_axioms(1000, 2)},
        {"chain rule", chain_rule(1000, 3)},
        {"invert/compose", invert_compose(1000, 4)},
    };
    for (const auto& [name, o] : suites)
        r.require(o.failures == 0 && o.cases >= 1000, name + ": " + describe(o));
}

} // namespace

int main(int argc, char** argv)
{
    if (argc != 2) {
        std::cerr << "usage: acceptance <criterion 1-7>\n";
        return 2;
    }
    const int n = std::atoi(argv[1]);
    const auto start = std::chrono::steady_clock::now();
    Report r;
    Produced sink;
    try {
        switch (n) {
        case 1: criterion1(r, sink); break;
        case 2: criterion2(r, sink); break;
        case 3: criterion3(r, sink); break;
        case 4: criterion4(r, sink); break;
        case 5: criterion5(r); break;
        case 6: criterion6(r); break;
        case 7: criterion7(r); break;
        default:
            std::cerr << "unknown criterion " << n << "\n";
            return 2;
        }
    } catch (const std::exception& e) {
        r.problems.push_back(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cout << "C" << n << (r.problems.empty() ? " PASS" : " FAIL") << " (" << secs << " s)";
    for (const auto& p : r.problems)
        std::cout << "; " << p;
    std::cout << "\n";
    return r.problems.empty() ? 0 : 1;
}
