#include "common.hpp"

#include "placeode/factor.hpp"
#include "placeode/json_io.hpp"

#include <gtest/gtest.h>

using namespace placeode;
using fixtures::an;
using fixtures::q;

namespace {

QPoly qpoly(std::vector<long> cs)
{
    std::vector<Rational> v;
    for (long c : cs)
        v.emplace_back(c);
    return QPoly(v);
}

std::vector<int> factor_degrees(const QPoly& f)
{
    std::vector<int> d;
    for (const auto& [g, m] : factor_rational(f))
        for (int i = 0; i < m; ++i)
            d.push_back(g.degree());
    std::sort(d.begin(), d.end());
    return d;
}

} // namespace

TEST(Rational, ParseAndPrint)
{
    EXPECT_EQ(parse_rational("-6/4"), q(-3, 2));
    EXPECT_EQ(to_string(q(12, 27)), "4/9");
    EXPECT_EQ(to_string(q(5)), "5");
    EXPECT_THROW(parse_rational("1/0"), Error);
    EXPECT_THROW(parse_rational("x"), Error);
}

TEST(Rational, SquareSplit)
{
    Integer s, c;
    square_split(Integer(-72), s, c);
    EXPECT_EQ(s, 6);
    EXPECT_EQ(c, -2);
}

// factorizations checked with an independent CAS
TEST(FactorQ, SophieGermain)
{
    auto f = factor_rational(qpoly({4, 0, 0, 0, 1}));
    ASSERT_EQ(f.size(), 2u);
    QPoly prod = qpoly({1});
    for (const auto& [g, m] : f)
        prod = prod * g;
    EXPECT_EQ(prod, qpoly({4, 0, 0, 0, 1}));
    EXPECT_EQ(factor_degrees(qpoly({4, 0, 0, 0, 1})), (std::vector<int>{2, 2}));
}

TEST(FactorQ, IrreducibleSextic)
{
    EXPECT_EQ(factor_degrees(qpoly({1, 0, -1, 0, 3, 0, 1})), (std::vector<int>{6}));
}

TEST(FactorQ, CyclotomicSplit)
{
    EXPECT_EQ(factor_degrees(qpoly({-1, 0, 0, 0, 0, 0, 0, 0, 1})), (std::vector<int>{1, 1, 2, 4}));
}

TEST(FactorQ, Multiplicities)
{
    QPoly f = qpoly({-1, 1}) * qpoly({-1, 1}) * qpoly({2, 0, 1});
    auto fs = factor_rational(f);
    ASSERT_EQ(fs.size(), 2u);
    int total = 0;
    for (const auto& [g, m] : fs)
        total += m * g.degree();
    EXPECT_EQ(total, 4);
}

TEST(FactorQ, RationalRoots)
{
    auto r = rational_roots(qpoly({-6, 1, 1}) * qpoly({1, 2}));
    std::sort(r.begin(), r.end());
    EXPECT_EQ(r, (std::vector<Rational>{q(-3), q(-1, 2), q(2)}));
}

TEST(Algebraic, SquareRootArithmetic)
{
    AlgebraicNumber s = sqrt_of(q(2));
    EXPECT_EQ(s * s, an(2));
    EXPECT_FALSE(s.is_rational());
    EXPECT_EQ((an(1) + s) * (an(1) - s), an(-1));
    EXPECT_EQ((an(1) / (an(1) + s)), s - an(1));
    EXPECT_EQ(s.str(), "sqrt(2)");
    EXPECT_EQ(sqrt_of(q(12, 27)).str(), "2/3");
    EXPECT_EQ(sqrt_of(q(8)), an(2) * s);
}

TEST(Algebraic, ImaginaryUnit)
{
    AlgebraicNumber i = sqrt_of(q(-1));
    EXPECT_EQ(i * i, an(-1));
    EXPECT_EQ(i.str(), "sqrt(-1)");
}

TEST(Algebraic, DivisionByZeroThrows)
{
    EXPECT_THROW(an(1) / an(0), DivisionByZero);
    EXPECT_THROW(an(0).inverse(), DivisionByZero);
}

TEST(Algebraic, TowerOfTwoRoots)
{
    AlgebraicNumber a = sqrt_of(q(2)), b = sqrt_of(q(3));
    AlgebraicNumber c = a + b;
    // (sqrt2 + sqrt3)^2 = 5 + 2 sqrt6
    EXPECT_EQ(c * c - an(5), an(2) * a * b);
    EXPECT_EQ((a * b) * (a * b), an(6));
    EXPECT_EQ(common_field({a, b})->degree(), 4);
}

TEST(Algebraic, IndexedRootOrder)
{
    // roots of x^2 - 2 in numeric order: -sqrt2, sqrt2
    EXPECT_EQ(indexed_root(qpoly({-2, 0, 1}), 1), -sqrt_of(q(2)));
    EXPECT_EQ(indexed_root(qpoly({-2, 0, 1}), 2), sqrt_of(q(2)));
    // the complex pair has real part -0.63 and precedes the real root
    AlgebraicNumber r = indexed_root(qpoly({-2, 0, 0, 1}), 3);
    EXPECT_EQ(r * r * r, an(2));
    EXPECT_LT(indexed_root(qpoly({-2, 0, 0, 1}), 1).enclosure(64).mid.im.to_double(), 0);
    EXPECT_NEAR(r.enclosure(64).mid.re.to_double(), 1.2599210498948732, 1e-15);
}

TEST(Algebraic, NumericCompare)
{
    EXPECT_LT(numeric_compare(sqrt_of(q(2)), an(3, 2)), 0);
    EXPECT_GT(numeric_compare(sqrt_of(q(3)), sqrt_of(q(2))), 0);
    EXPECT_EQ(numeric_compare(sqrt_of(q(4)), an(2)), 0);
}

TEST(Tower, AllRootsOfQuartic)
{
    auto roots = all_roots(to_upoly(qpoly({4, 0, 0, 0, 1})));
    ASSERT_EQ(roots.size(), 4u);
    for (const auto& [r, m] : roots) {
        EXPECT_EQ(m, 1);
        EXPECT_EQ(r.pow(4), an(-4));
    }
}

TEST(Tower, FactorOverExtension)
{
    // x^2 - 2 splits over Q(sqrt2)
    auto fs = factor_over(to_upoly(qpoly({-2, 0, 1})), sqrt_of(q(2)).field());
    EXPECT_EQ(fs.size(), 2u);
}

TEST(Tower, DegreeCapRaises)
{
    const int old = degree_cap();
    set_degree_cap(2);
    AlgebraicNumber a = sqrt_of(q(2));
    EXPECT_THROW(a + sqrt_of(q(3)), ExtensionLimitExceeded);
    set_degree_cap(old);
}

TEST(Json, AlgebraicRoundTrip)
{
    std::vector<AlgebraicNumber> values = {an(-7, 3), sqrt_of(q(2)) * an(3, 5) + an(1),
                                           sqrt_of(q(-1)) - sqrt_of(q(2)),
                                           indexed_root(qpoly({-2, 0, 0, 1}), 1)};
    for (const auto& v : values) {
        Json j = to_json(v);
        AlgebraicNumber back = algebraic_from_json(Json::parse(j.dump()));
        EXPECT_EQ(back, v) << j.dump();
    }
}

TEST(Json, SeriesRoundTrip)
{
    TruncatedSeries s = fixtures::series({"1", "sqrt(2)", "0", "-1/6"}, 4);
    EXPECT_EQ(series_from_json(to_json(s)), s);
}

TEST(Json, MalformedRecord)
{
    EXPECT_THROW(algebraic_from_json(Json::parse("{\"coeffs\": 1}")), InvalidInput);
}
