#include "common.hpp"

#include <gtest/gtest.h>

using namespace placeode;
using fixtures::an;
using fixtures::q;
using fixtures::series;

namespace {

// ord F(A, B) > N for a place certified to N
void expect_residual(const BiPoly& F, const Place& p)
{
    const int N = std::min(p.A.trunc(), p.B.trunc());
    TruncatedSeries r = F.eval_series(p.A, p.B);
    EXPECT_GT(r.order_lower_bound(), N) << p.B.str();
}

} // namespace

TEST(NewtonPolygon, CuspEdge)
{
    // w^2 - x^3: one edge of slope 3/2
    auto edges = newton_polygon(parse_polynomial("y'^2 - y^3"));
    ASSERT_EQ(edges.size(), 1u);
    EXPECT_EQ(edges[0].slope, q(3, 2));
    EXPECT_EQ(edges[0].points.front(), std::make_pair(3, 0));
    EXPECT_EQ(edges[0].points.back(), std::make_pair(0, 2));
}

TEST(NewtonPolygon, TwoSlopes)
{
    // the sextic at (0,1): w^6 + ... - 4 w^2 x^2 + x^6 has slopes 1/2 and 2
    BiPoly H = fixtures::sextic().translate(an(0), an(1));
    auto edges = newton_polygon(H);
    ASSERT_EQ(edges.size(), 2u);
    EXPECT_EQ(edges[0].slope, q(1, 2));
    EXPECT_EQ(edges[1].slope, q(2));
}

TEST(Places, NodalCubicNode)
{
    BiPoly F = fixtures::nodal_cubic();
    auto ps = places_at(F, an(0), an(0), 6);
    ASSERT_EQ(ps.size(), 2u);
    // t * sqrt(1 + t) and its negative
    EXPECT_EQ(ps[0].B, series({"0", "1", "1/2", "-1/8", "1/16", "-5/128", "7/256"}, 6));
    EXPECT_EQ(ps[1].B, series({"0", "-1", "-1/2", "1/8", "-1/16", "5/128", "-7/256"}, 6));
    for (const auto& p : ps) {
        EXPECT_EQ(p.e, 1);
        EXPECT_EQ(p.order, 1);
        EXPECT_EQ(ramification_kind(p), RamificationKind::singular);
        expect_residual(F, p);
    }
    EXPECT_EQ(tangent_vector(ps[0]), std::make_pair(an(1), an(1)));
}

TEST(Places, NodalCubicRamification)
{
    BiPoly F = fixtures::nodal_cubic();
    auto ps = places_at(F, an(-1), an(0), 5);
    ASSERT_EQ(ps.size(), 1u);
    EXPECT_EQ(ps[0].e, 2);
    EXPECT_EQ(ps[0].A, series({"-1", "0", "1"}, 5));
    EXPECT_EQ(ps[0].B, series({"0", "1", "0", "-1"}, 5));
    EXPECT_EQ(ramification_kind(ps[0]), RamificationKind::z_ramification);
    EXPECT_EQ(tangent_vector(ps[0]), std::make_pair(an(0), an(1)));
    expect_residual(F, ps[0]);
}

TEST(Places, NodalCubicRegularPoint)
{
    BiPoly F = fixtures::nodal_cubic();
    auto ps = places_at(F, an(1), sqrt_of(q(2)), 3);
    ASSERT_EQ(ps.size(), 1u);
    EXPECT_EQ(ps[0].B, series({"sqrt(2)", "5/4*sqrt(2)", "7/32*sqrt(2)", "-3/128*sqrt(2)"}, 3));
    EXPECT_EQ(ramification_kind(ps[0]), RamificationKind::none);
}

TEST(Places, SexticSingularity)
{
    BiPoly F = fixtures::sextic();
    auto ps = places_at(F, an(0), an(1), 6);
    ASSERT_EQ(ps.size(), 4u);
    EXPECT_EQ(ps[0].A, series({"0", "0", "1"}, 6));
    EXPECT_EQ(ps[0].B, series({"1", "sqrt(2)", "0", "-3/8*sqrt(2)", "0", "-15/128*sqrt(2)", "0"}, 6));
    EXPECT_EQ(ps[1].A, series({"0", "0", "-1"}, 6));
    EXPECT_EQ(ps[1].B.coeffs()[1], -sqrt_of(q(2)));
    EXPECT_EQ(ps[2].B, series({"1", "0", "1/2", "0", "3/16", "0", "39/256"}, 6));
    EXPECT_EQ(ps[3].B, series({"1", "0", "-1/2", "0", "-3/16", "0", "-39/256"}, 6));
    int total = 0;
    for (const auto& p : ps) {
        total += p.order;
        EXPECT_EQ(support_gcd(p), 1);
        expect_residual(F, p);
    }
    EXPECT_EQ(total, multiplicity_at(F, an(0), an(1)));
    EXPECT_EQ(tangent_vector(ps[0]), std::make_pair(an(0), sqrt_of(q(2))));
}

TEST(Places, CuspFamilyCusp)
{
    auto ps = places_at(fixtures::cusp_family(1), an(0), an(1), 8);
    ASSERT_EQ(ps.size(), 1u);
    EXPECT_EQ(ps[0].A, series({"0", "0", "1"}, 8));
    EXPECT_EQ(ps[0].B, series({"1", "0", "0", "1"}, 8));
    EXPECT_EQ(ps[0].order, 2);
}

TEST(Places, Deterministic)
{
    BiPoly F = fixtures::sextic();
    auto a = places_at(F, an(0), an(1), 5);
    auto b = places_at(F, an(0), an(1), 5);
    ASSERT_EQ(a.size(), b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        EXPECT_EQ(a[i].A, b[i].A);
        EXPECT_EQ(a[i].B, b[i].B);
    }
}

TEST(Places, NotConjugate)
{
    auto ps = places_at(fixtures::sextic(), an(0), an(1), 5);
    for (std::size_t i = 0; i < ps.size(); ++i)
        for (std::size_t j = i + 1; j < ps.size(); ++j)
            EXPECT_FALSE(equivalent(ps[i], ps[j]));
}

TEST(Places, EquivalenceUnderRescaling)
{
    Place p = places_at(fixtures::nodal_cubic(), an(-1), an(0), 5)[0];
    Place r = p;
    r.A = p.A.rescaled(an(-1));
    r.B = p.B.rescaled(an(-1));
    EXPECT_TRUE(equivalent(p, r));
}

TEST(Places, OffCurve)
{
    EXPECT_THROW(places_at(fixtures::nodal_cubic(), an(1), an(1), 3), PointNotOnCurve);
}

TEST(Places, DefaultBound)
{
    EXPECT_EQ(default_bound(fixtures::nodal_cubic()), 9);
    EXPECT_EQ(default_bound(fixtures::sextic()), 61);
}

TEST(Kinds, Rendering)
{
    EXPECT_EQ(to_string(RamificationKind::y_ramification), "y_ramification");
    EXPECT_EQ(to_string(RamificationKind::none), "none");
}

TEST(Kinds, YRamification)
{
    // z = y^2 is tangent to the y-axis at the origin
    auto ps = places_at(parse_polynomial("y' - y^2"), an(0), an(0), 4);
    ASSERT_EQ(ps.size(), 1u);
    EXPECT_EQ(ramification_kind(ps[0]), RamificationKind::y_ramification);
}
