#include "common.hpp"

#include <gtest/gtest.h>

using namespace placeode;
using fixtures::an;
using fixtures::q;
using fixtures::series;

TEST(Series, ConstructionPadsAndDrops)
{
    TruncatedSeries s({an(1), an(2), an(3), an(4)}, 2);
    EXPECT_EQ(s.trunc(), 2);
    EXPECT_EQ(s.coeffs().size(), 3u);
    TruncatedSeries p({an(1)}, 3);
    EXPECT_TRUE(p[3].is_zero());
    EXPECT_THROW(p[4], InsufficientPrecision);
}

TEST(Series, Orders)
{
    TruncatedSeries s = series({"0", "0", "3"}, 4);
    EXPECT_EQ(s.order(), 2);
    EXPECT_EQ(s.last_nonzero(), 2);
    TruncatedSeries z({}, 3);
    EXPECT_FALSE(z.order().has_value());
    EXPECT_EQ(z.order_lower_bound(), 4);
}

TEST(Series, ProductPrecision)
{
    // a known to t^5 with valuation 0, b known to t^3 with valuation 2
    TruncatedSeries a = series({"1", "1", "1", "1", "1", "1"}, 5);
    TruncatedSeries b = series({"0", "0", "1", "1"}, 3);
    TruncatedSeries p = a * b;
    EXPECT_EQ(p.trunc(), 3);
    EXPECT_EQ(p, series({"0", "0", "1", "2"}, 3));
}

TEST(Series, InvertGeometric)
{
    TruncatedSeries s = series({"1", "-1"}, 6);
    EXPECT_EQ(s.invert(), series({"1", "1", "1", "1", "1", "1", "1"}, 6));
    EXPECT_THROW(series({"0", "1"}, 3).invert(), NotAUnit);
}

TEST(Series, ComposeFibonacci)
{
    // 1/(1 - u) with u = t + t^2 gives 1/(1 - t - t^2)
    TruncatedSeries geo = series({"1", "1", "1", "1", "1", "1", "1", "1"}, 7);
    TruncatedSeries r = geo.compose(series({"0", "1", "1"}, 7));
    EXPECT_EQ(r, series({"1", "1", "2", "3", "5", "8", "13", "21"}, 7));
    EXPECT_THROW(geo.compose(series({"1", "1"}, 3)), InnerNotPositiveOrder);
}

TEST(Series, ComposePrecisionFromInner)
{
    TruncatedSeries geo = series({"1", "1", "1", "1", "1", "1", "1", "1"}, 7);
    EXPECT_EQ(geo.compose(series({"0", "1", "1"}, 3)).trunc(), 3);
    // inner valuation 2 doubles the reach of the outer truncation
    EXPECT_EQ(series({"0", "0", "1"}, 2).compose(series({"0", "0", "1"}, 9)).trunc(), 5);
}

TEST(Series, DerivativeAndPow)
{
    TruncatedSeries s = series({"1", "2", "3", "4"}, 3);
    EXPECT_EQ(s.derivative(), series({"2", "6", "12"}, 2));
    EXPECT_EQ(series({"1", "1"}, 4).pow(4), series({"1", "4", "6", "4", "1"}, 4));
    EXPECT_EQ(s.pow(0), TruncatedSeries::constant(an(1), 3));
}

TEST(Series, RescaleAndScale)
{
    TruncatedSeries s = series({"1", "1", "1"}, 2);
    EXPECT_EQ(s.rescaled(an(-2)), series({"1", "-2", "4"}, 2));
    EXPECT_EQ(s.scaled(sqrt_of(q(2))).coeffs()[1], sqrt_of(q(2)));
}

TEST(Series, AgreesWith)
{
    EXPECT_TRUE(series({"1", "2"}, 1).agrees_with(series({"1", "2", "7"}, 2)));
    EXPECT_FALSE(series({"1", "3"}, 1).agrees_with(series({"1", "2", "7"}, 2)));
}

TEST(Series, Render)
{
    EXPECT_EQ(series({"-1", "0", "1/4", "0", "-1/24"}, 4).str(), "-1 + 1/4*t^2 - 1/24*t^4 + O(t^5)");
    EXPECT_EQ(TruncatedSeries({}, 0).str(), "O(t)");
    EXPECT_EQ(series({"0", "sqrt(2)"}, 1).str(), "sqrt(2)*t + O(t^2)");
}
