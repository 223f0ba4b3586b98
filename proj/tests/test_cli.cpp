#include "common.hpp"

#include "placeode/cli.hpp"
#include "placeode/json_io.hpp"

#include <gtest/gtest.h>

#include <sstream>

using namespace placeode;
using fixtures::an;
using fixtures::q;

namespace {

struct CliResult {
    int code;
    std::string out, err;
};

CliResult run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST(Parser, Polynomials)
{
    EXPECT_EQ(parse_polynomial("z^2 - y"), parse_polynomial("y'^2 - y"));
    EXPECT_EQ(parse_polynomial("(y' - 1/2)*2"), parse_polynomial("2*y' - 1"));
    EXPECT_EQ(parse_polynomial("y/2"), parse_polynomial("1/2*y"));
    EXPECT_EQ(parse_polynomial("-(-y)"), parse_polynomial("y"));
    EXPECT_EQ(parse_polynomial("2^-1*y"), parse_polynomial("y/2"));
}

TEST(Parser, ErrorOffsets)
{
    auto offset = [](const std::string& s) -> long {
        try {
            parse_polynomial(s);
        } catch (const ParseError& e) {
            return static_cast<long>(e.offset());
        }
        return -1;
    };
    EXPECT_EQ(offset("y -"), 3);
    EXPECT_EQ(offset("y + x"), 4);
    EXPECT_EQ(offset("(y"), 2);
    EXPECT_EQ(offset("y / y'"), 2);
    EXPECT_EQ(offset("y ) "), 2);
    EXPECT_EQ(offset("y^"), 2);
}

TEST(Parser, Values)
{
    EXPECT_EQ(parse_value("sqrt(8)/2"), sqrt_of(q(2)));
    EXPECT_EQ(parse_value("root(x^2 - 3, 2)"), sqrt_of(q(3)));
    EXPECT_EQ(parse_value("root(x^2 - 3, 1)"), -sqrt_of(q(3)));
    EXPECT_EQ(parse_value("(1 + sqrt(2))^2"), an(3) + an(2) * sqrt_of(q(2)));
    EXPECT_THROW(parse_value("root(x^2 - 3, 3)"), ParseError);
    EXPECT_THROW(parse_value("sqrt(sqrt(2))"), ParseError);
    EXPECT_THROW(parse_value("y"), ParseError);
}

TEST(Parser, InitialTuple)
{
    InitialTuple c = parse_initial_tuple("1, sqrt(2)");
    EXPECT_EQ(c.c0, an(1));
    EXPECT_EQ(c.c1, sqrt_of(q(2)));
    EXPECT_EQ(parse_initial_tuple("root(x^3 - 2, 1), 0").c1, an(0));
    EXPECT_THROW(parse_initial_tuple("1"), ParseError);
    EXPECT_THROW(parse_initial_tuple("1, 2, 3"), ParseError);
}

TEST(Parser, RenderRoundTrip)
{
    for (const char* s : {"y'^2 - y^3 - y^2", "((y'-1)^2 + y^2)^3 - 4*(y'-1)^2*y^2", "1/3*y*y' - 7/2"}) {
        BiPoly F = parse_polynomial(s);
        EXPECT_EQ(parse_polynomial(F.str()), F) << F.str();
    }
}

TEST(Cli, SolveText)
{
    CliResult r = run({"solve", "--ode", "y'^2 - y^3 - y^2", "--at", "-1, 0", "--order", "4"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "y(t) = -1 + 1/4*t^2 - 1/24*t^4 + O(t^5)\n");
}

TEST(Cli, SolveNone)
{
    CliResult r = run({"solve", "--ode", "y'^2 - y^3 - y^2", "--at", "0, 0"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "no non-constant formal power series solutions\n");
}

TEST(Cli, SolveJson)
{
    CliResult r = run({"solve", "--ode", "y'^2 - y^3 - y^2", "--at", "1, sqrt(2)", "--order", "3", "--format", "json"});
    ASSERT_EQ(r.code, 0);
    Json j = Json::parse(r.out);
    ASSERT_EQ(j["solutions"].size(), 1u);
    EXPECT_EQ(j["solutions"][0]["series"]["trunc"], 3);
    EXPECT_EQ(j["solutions"][0]["place_id"], 1);
}

TEST(Cli, Places)
{
    CliResult r = run({"places", "--ode", "y'^2 - y^3 - y^2", "--at", "-1, 0", "--order", "4"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "P1: A = -1 + t^2 + O(t^5), B = t - t^3 + O(t^5), e = 2, order = 1, tangent = (0, 1), "
                     "kind = z_ramification\n");
}

TEST(Cli, ClassifyText)
{
    CliResult r = run({"classify", "--ode", "y'^2 - y^3 - y^2"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "A0:\n  (0, 0)\nA1: C(F) minus\n  (0, 0)\nconstants:\n  -1\n  0\n");
}

TEST(Cli, Bound)
{
    CliResult r = run({"bound", "--ode", "y'^2 - y^3 - y^2"});
    EXPECT_EQ(r.out, "9\n");
}

TEST(Cli, ExitCodes)
{
    EXPECT_EQ(run({"solve", "--ode", "y -", "--at", "0, 0"}).code, 2);
    EXPECT_EQ(run({"solve", "--ode", "y'^2 - y^2", "--at", "0, 0"}).code, 2);
    EXPECT_EQ(run({"solve", "--ode", "y'^2 - y^3 - y^2", "--at", "1, 1"}).code, 0);
    EXPECT_EQ(run({"places", "--ode", "y'^2 - y^3 - y^2", "--at", "1, 1"}).code, 2);
    EXPECT_EQ(run({"direct", "--ode", "y'^2 - y^3 - y^2", "--at", "0, 0"}).code, 2);
    EXPECT_EQ(run({"solve", "--ode", "y'^2 - y^3 - y^2"}).code, 2);
    EXPECT_EQ(run({"frobnicate"}).code, 2);
    EXPECT_EQ(run({"--help"}).code, 0);
    EXPECT_EQ(run({"solve", "--ode", "y'^2 - y^3 - y^2", "--at", "1, sqrt(2)", "--degree-cap", "1"}).code, 3);
}

TEST(Cli, Messages)
{
    CliResult r = run({"solve", "--ode", "y -", "--at", "0, 0"});
    EXPECT_NE(r.err.find("offset 3"), std::string::npos);
    r = run({"classify", "--ode", "y'^2 - y^2"});
    EXPECT_NE(r.err.find("y' - y"), std::string::npos);
}
