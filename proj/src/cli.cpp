#include "placeode/cli.hpp"

#include "placeode/errors.hpp"
#include "placeode/json_io.hpp"
#include "placeode/parser.hpp"
#include "placeode/tower.hpp"

#include "CLI11.hpp"

#include <ostream>
#include <set>

namespace placeode {

namespace {

struct Options {
    std::string ode, at, format = "text";
    int order = 0;
    int degree_cap = 0;
    int jobs = 1;
};

std::string point_str(const AlgebraicNumber& a, const AlgebraicNumber& b)
{
    return "(" + a.str() + ", " + b.str() + ")";
}

// " where a1: root of ..." for generically labelled levels of the given values
std::string where(const std::vector<AlgebraicNumber>& values)
{
    FieldPtr F = common_field(values);
    std::vector<std::string> lines = describe_tower(F);
    if (lines.empty())
        return "";
    std::string s = "  where ";
    for (std::size_t i = 0; i < lines.size(); ++i)
        s += (i ? "; " : "") + lines[i];
    return s;
}

std::vector<AlgebraicNumber> series_values(const TruncatedSeries& s) { return s.coeffs(); }

class Runner {
public:
    Runner(const Options& o, std::ostream& out) : o_(o), out_(out) {}

    void run(const std::string& cmd)
    {
        F_ = parse_polynomial(o_.ode);
        validate_input(F_);
        json_ = o_.format == "json";
        if (cmd == "solve")
            solve();
        else if (cmd == "direct")
            direct();
        else if (cmd == "places")
            places();
        else if (cmd == "critical")
            critical();
        else if (cmd == "constants")
            constants();
        else if (cmd == "classify")
            classify_cmd();
        else if (cmd == "bound")
            bound();
    }

private:
    const Options& o_;
    std::ostream& out_;
    BiPoly F_;
    bool json_ = false;

    InitialTuple tuple() const
    {
        if (o_.at.empty())
            throw InvalidInput("this subcommand needs --at \"c0, c1\"");
        return parse_initial_tuple(o_.at);
    }

    void emit(const Json& j) { out_ << j.dump(2) << "\n"; }

    void solve()
    {
        InitialTuple c = tuple();
        int N = o_.order;
        if (N <= 0)
            N = F_.eval(c.c0, c.c1).is_zero() ? 2 * multiplicity_at(F_, c.c0, c.c1) : 1;
        auto sols = solve_at(F_, c, N);
        if (json_) {
            Json arr = Json::array();
            for (const auto& s : sols)
                arr.push_back(to_json(s));
            emit({{"solutions", arr}});
            return;
        }
        if (sols.empty())
            out_ << "no non-constant formal power series solutions\n";
        for (const auto& s : sols)
            out_ << "y(t) = " << s.y.str() << where(series_values(s.y)) << "\n";
    }

    void direct()
    {
        InitialTuple c = tuple();
        auto s = direct_method(F_, c, o_.order > 0 ? o_.order : 6);
        if (json_)
            emit(to_json(s));
        else
            out_ << "y(t) = " << s.y.str() << where(series_values(s.y)) << "\n";
    }

    void print_places(const std::vector<Place>& ps, Json& arr)
    {
        for (std::size_t i = 0; i < ps.size(); ++i) {
            const Place& p = ps[i];
            if (json_) {
                arr.push_back(to_json(p));
                continue;
            }
            auto [a, b] = tangent_vector(p);
            std::vector<AlgebraicNumber> vals = p.B.coeffs();
            vals.push_back(p.c0);
            vals.push_back(p.lambda());
            out_ << "P" << i + 1 << ": A = " << p.A.str() << ", B = " << p.B.str() << ", e = " << p.e
                 << ", order = " << p.order << ", tangent = " << point_str(a, b)
                 << ", kind = " << to_string(ramification_kind(p)) << where(vals) << "\n";
        }
    }

    void places()
    {
        const int N = o_.order > 0 ? o_.order : default_bound(F_);
        Json arr = Json::array();
        if (!o_.at.empty()) {
            InitialTuple c = tuple();
            print_places(places_at(F_, c.c0, c.c1, N), arr);
        } else {
            for (const auto& cp : critical_set(F_)) {
                if (!json_)
                    out_ << "at " << point_str(cp.point.y, cp.point.z) << where({cp.point.y, cp.point.z}) << "\n";
                print_places(places_at(F_, cp.point.y, cp.point.z, N), arr);
            }
        }
        if (json_)
            emit({{"places", arr}});
    }

    void critical()
    {
        auto cs = critical_set(F_);
        if (json_) {
            Json arr = Json::array();
            for (const auto& c : cs)
                arr.push_back(to_json(c));
            emit({{"critical", arr}});
            return;
        }
        for (const auto& c : cs) {
            out_ << point_str(c.point.y, c.point.z);
            if (c.on_z_axis)
                out_ << "  z-axis";
            if (c.separant_zero)
                out_ << "  separant";
            if (c.non_solution_place)
                out_ << "  non-solution-place";
            out_ << where({c.point.y, c.point.z}) << "\n";
        }
    }

    void constants()
    {
        auto cs = constant_solutions(F_);
        if (json_) {
            Json arr = Json::array();
            for (const auto& c : cs)
                arr.push_back(to_json(c));
            emit({{"constants", arr}});
            return;
        }
        for (const auto& c : cs)
            out_ << c.str() << where({c}) << "\n";
    }

    void classify_cmd()
    {
        Classification cl = classify(F_, o_.order > 0 ? o_.order : 1, o_.jobs);
        if (json_) {
            emit(to_json(cl));
            return;
        }
        auto list = [&](const std::vector<Point>& pts) {
            for (const auto& p : pts)
                out_ << "  " << point_str(p.y, p.z) << where({p.y, p.z}) << "\n";
        };
        auto zero = cl.buckets.find(0);
        out_ << "A0:" << (zero == cl.buckets.end() ? " none" : "") << "\n";
        if (zero != cl.buckets.end())
            list(zero->second);
        // A1 is the curve minus the critical points that did not land in A1
        std::vector<Point> removed;
        for (const auto& p : cl.a1_complement_of)
            if (std::none_of(cl.a1_extra.begin(), cl.a1_extra.end(),
                             [&](const Point& q) { return same_point(p, q); }))
                removed.push_back(p);
        out_ << "A1: C(F)" << (removed.empty() ? "" : " minus") << "\n";
        list(removed);
        for (const auto& [k, pts] : cl.buckets)
            if (k >= 2) {
                out_ << "A" << k << ":\n";
                list(pts);
            }
        out_ << "constants:\n";
        for (const auto& c : cl.constants)
            out_ << "  " << c.str() << where({c}) << "\n";
    }

    void bound()
    {
        if (json_)
            emit({{"bound", default_bound(F_)}});
        else
            out_ << default_bound(F_) << "\n";
    }
};

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Formal power series solutions of first-order autonomous algebraic ODEs"};
    app.require_subcommand(1);
    Options o;
    const std::vector<std::pair<std::string, std::string>> cmds = {
        {"solve", "non-constant solutions through an initial tuple"},
        {"classify", "classify initial tuples by number of solutions"},
        {"places", "places of the curve at a point (all critical points without --at)"},
        {"critical", "critical set V(F, y') united with V(F, S_F)"},
        {"constants", "constant solutions"},
        {"direct", "separant recursion at a regular initial tuple"},
        {"bound", "truncation bound for the singular part of places"},
    };
    for (const auto& [name, help] : cmds) {
        CLI::App* sub = app.add_subcommand(name, help);
        sub->add_option("--ode", o.ode, "polynomial F(y, y')")->required();
        if (name == "solve" || name == "direct" || name == "places")
            sub->add_option("--at", o.at, "initial tuple \"c0, c1\"");
        sub->add_option("--order", o.order, "truncation order")->check(CLI::PositiveNumber);
        sub->add_option("--format", o.format, "output format")->check(CLI::IsMember({"text", "json"}));
        sub->add_option("--degree-cap", o.degree_cap, "maximum absolute degree of number fields")
            ->check(CLI::PositiveNumber);
        if (name == "classify")
            sub->add_option("--jobs", o.jobs, "critical points processed concurrently")->check(CLI::PositiveNumber);
    }
    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    std::string cmd = app.get_subcommands().front()->get_name();
    const int old_cap = degree_cap();
    if (o.degree_cap > 0)
        set_degree_cap(o.degree_cap);
    int code = 0;
    try {
        Runner(o, out).run(cmd);
    } catch (const NotIrreducible& e) {
        err << "error: " << e.what() << "\n";
        code = 2;
    } catch (const InvalidInput& e) {
        err << "error: " << e.what() << "\n";
        code = 2;
    } catch (const ExtensionLimitExceeded& e) {
        err << "error: " << e.what() << "\n";
        code = 3;
    } catch (const InsufficientPrecision& e) {
        err << "error: " << e.what() << "\n";
        code = 3;
    } catch (const PointNotOnCurve& e) {
        err << "error: " << e.what() << "\n";
        code = 2;
    } catch (const SeparantVanishes& e) {
        err << "error: " << e.what() << "\n";
        code = 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        code = 1;
    }
    set_degree_cap(old_cap);
    return code;
}

} // namespace placeode
