#include "placeode/parser.hpp"

#include "placeode/errors.hpp"
#include "placeode/tower.hpp"

#include <cctype>

namespace placeode {

namespace {

enum class Mode { ode, value, x_poly };

// Recursive descent over one expression; offsets are relative to the full input.
class Parser {
public:
    Parser(std::string_view text, Mode mode, std::size_t base = 0) : s_(text), mode_(mode), base_(base) {}

    BiPoly parse_all()
    {
        BiPoly r = expr();
        skip();
        if (pos_ < s_.size())
            fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        return r;
    }

private:
    std::string_view s_;
    Mode mode_;
    std::size_t base_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, base_ + pos_); }
    [[noreturn]] void fail_at(const std::string& msg, std::size_t at) const { throw ParseError(msg, base_ + at); }

    void skip()
    {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
    }

    bool accept(char c)
    {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c)
    {
        if (!accept(c))
            fail(pos_ < s_.size() ? "expected '" + std::string(1, c) + "'"
                                  : "expected '" + std::string(1, c) + "' before end of input");
    }

    BiPoly expr()
    {
        BiPoly r = term();
        for (;;) {
            if (accept('+'))
                r = r + term();
            else if (accept('-'))
                r = r - term();
            else
                return r;
        }
    }

    BiPoly term()
    {
        BiPoly r = unary();
        for (;;) {
            if (accept('*')) {
                r = r * unary();
            } else {
                skip();
                std::size_t at = pos_;
                if (!accept('/'))
                    return r;
                BiPoly d = unary();
                if (d.total_degree() > 0)
                    fail_at("division by a non-constant expression", at);
                if (d.is_zero())
                    fail_at("division by zero", at);
                r = d.coeff(0, 0).inverse() * r;
            }
        }
    }

    BiPoly unary()
    {
        if (accept('-'))
            return -unary();
        if (accept('+'))
            return unary();
        return power();
    }

    BiPoly power()
    {
        BiPoly b = atom();
        if (accept('^')) {
            skip();
            std::size_t at = pos_;
            bool neg = accept('-');
            skip();
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
                ++pos_;
            if (start == pos_)
                fail("expected an integer exponent");
            if (pos_ - start > 6)
                fail_at("exponent too large", start);
            int k = std::stoi(std::string(s_.substr(start, pos_ - start)));
            if (neg) {
                if (b.total_degree() > 0 || b.is_zero())
                    fail_at("negative exponent of a non-invertible expression", at);
                return BiPoly::constant(b.coeff(0, 0).inverse().pow(k));
            }
            return b.pow(k);
        }
        return b;
    }

    std::string identifier()
    {
        std::size_t start = pos_;
        while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
            ++pos_;
        return std::string(s_.substr(start, pos_ - start));
    }

    // argument text up to the matching ')' or a top-level ','
    std::pair<std::size_t, std::size_t> argument_span()
    {
        std::size_t start = pos_;
        int depth = 0;
        while (pos_ < s_.size()) {
            char c = s_[pos_];
            if (c == '(')
                ++depth;
            else if (c == ')') {
                if (depth == 0)
                    break;
                --depth;
            } else if (c == ',' && depth == 0)
                break;
            ++pos_;
        }
        if (pos_ >= s_.size())
            fail("unterminated argument list");
        return {start, pos_};
    }

    BiPoly atom()
    {
        skip();
        if (pos_ >= s_.size())
            fail("expected an operand");
        char c = s_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
                ++pos_;
            return BiPoly::constant(AlgebraicNumber(Rational(Integer(std::string(s_.substr(start, pos_ - start))))));
        }
        if (c == '(') {
            ++pos_;
            BiPoly r = expr();
            expect(')');
            return r;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            std::string id = identifier();
            if (mode_ == Mode::ode && id == "y") {
                if (pos_ < s_.size() && s_[pos_] == '\'') {
                    ++pos_;
                    return BiPoly::z();
                }
                return BiPoly::y();
            }
            if (mode_ == Mode::ode && id == "z")
                return BiPoly::z();
            if (mode_ == Mode::x_poly && id == "x")
                return BiPoly::y();
            if (mode_ == Mode::value && (id == "sqrt" || id == "root"))
                return BiPoly::constant(function(id, start));
            fail_at("unknown identifier '" + id + "'", start);
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    AlgebraicNumber function(const std::string& id, std::size_t start)
    {
        expect('(');
        if (id == "sqrt") {
            auto [a, b] = argument_span();
            BiPoly v = Parser(s_.substr(a, b - a), Mode::value, base_ + a).parse_all();
            expect(')');
            AlgebraicNumber q = v.coeff(0, 0);
            if (!q.is_rational())
                fail_at("sqrt expects a rational argument", a);
            return sqrt_of(q.to_rational());
        }
        auto [a, b] = argument_span();
        BiPoly p = Parser(s_.substr(a, b - a), Mode::x_poly, base_ + a).parse_all();
        expect(',');
        skip();
        std::size_t istart = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
        if (istart == pos_)
            fail("expected a root index");
        if (pos_ - istart > 6)
            fail_at("root index out of range", istart);
        int k = std::stoi(std::string(s_.substr(istart, pos_ - istart)));
        expect(')');
        if (p.total_degree() < 1 || !p.is_rational())
            fail_at("root expects a non-constant rational polynomial in x", a);
        std::vector<Rational> cs(static_cast<std::size_t>(p.deg_y() + 1), Rational(0));
        for (const auto& [key, v] : p.terms())
            cs[key.first] = v.to_rational();
        QPoly q(std::move(cs));
        std::size_t distinct = squarefree_part(q).degree();
        if (k < 1 || static_cast<std::size_t>(k) > distinct)
            fail_at("root index out of range", istart);
        (void)start;
        return indexed_root(q, k);
    }
};

} // namespace

BiPoly parse_polynomial(std::string_view text) { return Parser(text, Mode::ode).parse_all(); }

AlgebraicNumber parse_value(std::string_view text)
{
    return Parser(text, Mode::value).parse_all().coeff(0, 0);
}

InitialTuple parse_initial_tuple(std::string_view text)
{
    int depth = 0;
    std::size_t comma = std::string_view::npos;
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] == '(')
            ++depth;
        else if (text[i] == ')')
            --depth;
        else if (text[i] == ',' && depth == 0) {
            if (comma != std::string_view::npos)
                throw ParseError("expected exactly two values", i);
            comma = i;
        }
    }
    if (comma == std::string_view::npos)
        throw ParseError("expected two comma separated values", text.size());
    InitialTuple c;
    c.c0 = Parser(text.substr(0, comma), Mode::value).parse_all().coeff(0, 0);
    c.c1 = Parser(text.substr(comma + 1), Mode::value, comma + 1).parse_all().coeff(0, 0);
    return c;
}

} // namespace placeode
