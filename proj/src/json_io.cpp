#include "placeode/json_io.hpp"

#include "placeode/errors.hpp"
#include "placeode/tower.hpp"

#include <cmath>

namespace placeode {

namespace {

Json nest(const FieldPtr& F, std::vector<Rational> flat)
{
    if (F->depth() == 0)
        return to_string(flat.empty() ? Rational(0) : flat[0]);
    flat.resize(static_cast<std::size_t>(F->degree()), Rational(0));
    std::vector<Rational> nested = F->to_nested(flat);
    const FieldPtr& P = F->parent();
    const std::size_t dp = static_cast<std::size_t>(P->degree());
    Json arr = Json::array();
    for (int i = 0; i < F->relative_degree(); ++i)
        arr.push_back(nest(P, std::vector<Rational>(nested.begin() + i * dp, nested.begin() + (i + 1) * dp)));
    return arr;
}

std::vector<Rational> flat_in(const AlgebraicNumber& a, const FieldPtr& F)
{
    if (a.is_rational())
        return {a.to_rational()};
    return a.lifted(F).flat();
}

std::vector<Rational> unnest(const FieldPtr& F, const Json& j)
{
    if (F->depth() == 0) {
        if (!j.is_string())
            throw InvalidInput("expected a rational string in algebraic number record");
        return {parse_rational(j.get<std::string>())};
    }
    if (!j.is_array() || static_cast<int>(j.size()) != F->relative_degree())
        throw InvalidInput("malformed nested coefficients in algebraic number record");
    std::vector<std::vector<Rational>> blocks;
    for (const auto& item : j) {
        std::vector<Rational> b = unnest(F->parent(), item);
        b.resize(static_cast<std::size_t>(F->parent()->degree()), Rational(0));
        blocks.push_back(std::move(b));
    }
    return F->from_nested(blocks);
}

AlgebraicNumber value(const FieldPtr& F, std::vector<Rational> flat)
{
    if (F->depth() == 0)
        return flat.empty() ? AlgebraicNumber() : AlgebraicNumber(flat[0]);
    return AlgebraicNumber(F, std::move(flat));
}

double parse_decimal(const std::string& s)
{
    Real r(128);
    if (mpfr_set_str(r.get(), s.c_str(), 10, MPFR_RNDN) != 0)
        throw InvalidInput("malformed enclosure '" + s + "'");
    return r.to_double();
}

} // namespace

Json to_json(const AlgebraicNumber& a)
{
    Json j;
    const FieldPtr& F = a.field();
    Json tower = Json::array();
    for (const Field* level : F->chain()) {
        Json lv;
        lv["label"] = level->label();
        Json mp = Json::array();
        for (const auto& c : level->minpoly())
            mp.push_back(nest(level->parent(), flat_in(c, level->parent())));
        lv["minpoly"] = mp;
        Ball b = level->generator().enclosure(128);
        lv["enclosure"] = Json::array({b.mid.re.str(30), b.mid.im.str(30)});
        tower.push_back(std::move(lv));
    }
    j["tower"] = tower;
    j["level"] = F->depth();
    j["coeffs"] = nest(F, flat_in(a, F));
    return j;
}

AlgebraicNumber algebraic_from_json(const Json& j)
{
    if (!j.is_object() || !j.contains("tower") || !j.contains("coeffs"))
        throw InvalidInput("malformed algebraic number record");
    FieldPtr F = Field::rationals();
    for (const auto& lv : j.at("tower")) {
        std::vector<AlgebraicNumber> mp;
        for (const auto& c : lv.at("minpoly"))
            mp.push_back(value(F, unnest(F, c)));
        const double re = parse_decimal(lv.at("enclosure").at(0).get<std::string>());
        const double im = parse_decimal(lv.at("enclosure").at(1).get<std::string>());
        auto cands = adjoin_all(F, UPoly(mp), lv.at("label").get<std::string>());
        std::size_t best = 0;
        double bestd = INFINITY;
        for (std::size_t i = 0; i < cands.size(); ++i) {
            Ball b = cands[i].root.enclosure(64);
            double d = std::hypot(b.mid.re.to_double() - re, b.mid.im.to_double() - im);
            if (d < bestd) {
                bestd = d;
                best = i;
            }
        }
        F = cands.at(best).field;
    }
    if (j.contains("level") && j.at("level").get<int>() != F->depth())
        throw InvalidInput("tower depth does not match the level of the record");
    return value(F, unnest(F, j.at("coeffs")));
}

Json to_json(const TruncatedSeries& s)
{
    Json j;
    Json cs = Json::array();
    for (const auto& c : s.coeffs())
        cs.push_back(to_json(c));
    j["coeffs"] = cs;
    j["trunc"] = s.trunc();
    return j;
}

TruncatedSeries series_from_json(const Json& j)
{
    std::vector<AlgebraicNumber> cs;
    for (const auto& c : j.at("coeffs"))
        cs.push_back(algebraic_from_json(c));
    return TruncatedSeries(std::move(cs), j.at("trunc").get<int>());
}

Json to_json(const Point& p) { return Json::array({to_json(p.y), to_json(p.z)}); }

Json to_json(const Place& p)
{
    Json j;
    j["center"] = Json::array({to_json(p.c0), to_json(p.c1)});
    j["e"] = p.e;
    j["A"] = to_json(p.A);
    j["B"] = to_json(p.B);
    j["order"] = p.order;
    auto [a, b] = tangent_vector(p);
    j["tangent"] = Json::array({to_json(a), to_json(b)});
    j["kind"] = to_string(ramification_kind(p));
    return j;
}

Json to_json(const SolutionTruncation& s)
{
    Json j;
    j["center"] = Json::array({to_json(s.center.c0), to_json(s.center.c1)});
    j["series"] = to_json(s.y);
    j["place_id"] = s.place_id;
    j["repar"] = s.repar.trunc() >= 0 ? to_json(s.repar) : Json();
    return j;
}

Json to_json(const CriticalPoint& c)
{
    Json j;
    j["point"] = to_json(c.point);
    j["on_z_axis"] = c.on_z_axis;
    j["separant_zero"] = c.separant_zero;
    j["non_solution_place"] = c.non_solution_place;
    return j;
}

Json to_json(const Classification& c)
{
    Json j;
    auto list = [](const std::vector<Point>& pts) {
        Json a = Json::array();
        for (const auto& p : pts)
            a.push_back(to_json(p));
        return a;
    };
    auto it = c.buckets.find(0);
    j["A0"] = list(it == c.buckets.end() ? std::vector<Point>{} : it->second);
    j["A1"] = {{"complement_of", list(c.a1_complement_of)}, {"extra", list(c.a1_extra)}};
    for (const auto& [k, pts] : c.buckets)
        if (k >= 2)
            j["A" + std::to_string(k)] = list(pts);
    Json cs = Json::array();
    for (const auto& v : c.constants)
        cs.push_back(to_json(v));
    j["constants"] = cs;
    return j;
}

} // namespace placeode
