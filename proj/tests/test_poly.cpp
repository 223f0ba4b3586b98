#include "common.hpp"

#include <gtest/gtest.h>

using namespace placeode;
using fixtures::an;
using fixtures::q;

TEST(BiPoly, ArithmeticAndDegrees)
{
    BiPoly F = fixtures::sextic();
    EXPECT_EQ(F.deg_y(), 6);
    EXPECT_EQ(F.deg_z(), 6);
    EXPECT_EQ(F.total_degree(), 6);
    BiPoly G = parse_polynomial("(y - y')*(y + y')");
    EXPECT_EQ(G, parse_polynomial("y^2 - y'^2"));
    EXPECT_EQ((G - G).is_zero(), true);
    EXPECT_EQ(parse_polynomial("y'").pow(3), parse_polynomial("y'*y'*y'"));
}

TEST(BiPoly, EvalAndTranslate)
{
    BiPoly F = fixtures::nodal_cubic();
    EXPECT_EQ(F.eval(an(1), sqrt_of(q(2))), an(0));
    BiPoly T = F.translate(an(1), sqrt_of(q(2)));
    EXPECT_TRUE(T.coeff(0, 0).is_zero());
    EXPECT_EQ(T.eval(an(-1), -sqrt_of(q(2))), F.eval(an(0), an(0)));
    EXPECT_EQ(T.lowest_degree(), 1);
}

TEST(BiPoly, Derivatives)
{
    BiPoly F = fixtures::nodal_cubic();
    EXPECT_EQ(F.derivative_z(), parse_polynomial("2*y'"));
    EXPECT_EQ(separant(F), parse_polynomial("2*y'"));
    EXPECT_EQ(F.derivative_y(), parse_polynomial("-3*y^2 - 2*y"));
}

TEST(BiPoly, ExactDivide)
{
    BiPoly f = parse_polynomial("(y' - y^2 + 1)*(y'^2 + y)");
    auto d = exact_divide(f, parse_polynomial("y'^2 + y"));
    ASSERT_TRUE(d.has_value());
    EXPECT_EQ(*d, parse_polynomial("y' - y^2 + 1"));
    EXPECT_FALSE(exact_divide(f, parse_polynomial("y' + 1")).has_value());
}

TEST(BiPoly, RenderText)
{
    EXPECT_EQ(parse_polynomial("y'^2 - y").str(), "y'^2 - y");
    EXPECT_EQ(parse_polynomial("1/2*y*y' + 3").str().find("1/2"), 0u);
}

// resultants checked with an independent CAS, compared up to a constant factor
TEST(Resultant, NodalCubic)
{
    BiPoly F = fixtures::nodal_cubic();
    UPoly r = resultant_z(F, separant(F)).monic();
    EXPECT_EQ(r, to_upoly(QPoly({q(0), q(0), q(1), q(1)})));
}

TEST(Resultant, Sextic)
{
    BiPoly F = fixtures::sextic();
    UPoly r = resultant_z(F, separant(F)).monic();
    // 16384 y^18 (27 y^2 - 16)^2, made monic
    QPoly b({q(-16, 27), q(0), q(1)});
    QPoly expect = b * b;
    for (int i = 0; i < 18; ++i)
        expect = expect * QPoly({q(0), q(1)});
    EXPECT_EQ(r, to_upoly(expect));
}

TEST(SolveSystem, NodalCubicCriticalPoints)
{
    BiPoly F = fixtures::nodal_cubic();
    auto pts = solve_system(F, separant(F));
    ASSERT_EQ(pts.size(), 2u);
    EXPECT_EQ(pts[0].y, an(-1));
    EXPECT_EQ(pts[0].z, an(0));
    EXPECT_EQ(pts[1].y, an(0));
    EXPECT_EQ(pts[1].z, an(0));
}

TEST(SolveSystem, SexticSeparantPoints)
{
    BiPoly F = fixtures::sextic();
    auto pts = solve_system(F, separant(F));
    EXPECT_EQ(pts.size(), 5u);
    for (const auto& p : pts) {
        EXPECT_TRUE(F.eval(p.y, p.z).is_zero());
        EXPECT_TRUE(separant(F).eval(p.y, p.z).is_zero());
    }
}

TEST(SolveSystem, CommonComponent)
{
    EXPECT_THROW(solve_system(parse_polynomial("y'*y"), parse_polynomial("y'*(y+1)")), CommonComponent);
}

TEST(Multiplicity, Points)
{
    EXPECT_EQ(multiplicity_at(fixtures::nodal_cubic(), an(0), an(0)), 2);
    EXPECT_EQ(multiplicity_at(fixtures::nodal_cubic(), an(-1), an(0)), 1);
    EXPECT_EQ(multiplicity_at(fixtures::sextic(), an(0), an(1)), 4);
    EXPECT_EQ(multiplicity_at(fixtures::cusp_family(2), an(0), an(1)), 2);
    EXPECT_THROW(multiplicity_at(fixtures::nodal_cubic(), an(1), an(1)), PointNotOnCurve);
}

TEST(RegularBranch, CatalanSeries)
{
    // w = x + w^2 gives the Catalan numbers
    TruncatedSeries w = regular_branch(parse_polynomial("y' - y - y'^2"), 6);
    EXPECT_EQ(w, fixtures::series({"0", "1", "1", "2", "5", "14", "42"}, 6));
}

TEST(Validate, ErrorKinds)
{
    EXPECT_THROW(validate_input(BiPoly()), InvalidInput);
    EXPECT_THROW(validate_input(parse_polynomial("y^2 - 1")), NoDerivative);
    EXPECT_THROW(validate_input(parse_polynomial("3*y' - 2")), TrivialLinear);
    EXPECT_NO_THROW(validate_input(fixtures::nodal_cubic()));
    EXPECT_NO_THROW(validate_input(fixtures::sextic()));
    EXPECT_NO_THROW(validate_input(parse_polynomial("y' - y")));
}

TEST(Validate, ReducibleWitness)
{
    auto witness = [](const std::string& f) {
        try {
            validate_input(parse_polynomial(f));
        } catch (const NotIrreducible& e) {
            return e.witness();
        }
        return std::string("irreducible");
    };
    EXPECT_EQ(witness("y'^2 - y^2"), "y' - y");
    EXPECT_EQ(witness("y'^2 + y^2"), "y' - sqrt(-1)*y");
    EXPECT_EQ(witness("(y' - y)*(y' - y^2 + 1)"), "y' - y");
    EXPECT_EQ(witness("(y'^2 - y)*(y'^3 - y)"), "y'^2 - y");
    EXPECT_EQ(witness("y'^4 - 4*y^2"), "y'^2 - 2*y");
    EXPECT_EQ(witness("y*y' + y^2"), "y");
    EXPECT_EQ(witness("y'^2 - y^3 - y^2"), "irreducible");
}
