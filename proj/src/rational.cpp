#include "placeode/rational.hpp"

#include "placeode/errors.hpp"

namespace placeode {

std::string to_string(const Rational& q)
{
    if (q.get_den() == 1)
        return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_string(const Integer& z) { return z.get_str(); }

Rational parse_rational(std::string_view text)
{
    std::string s(text);
    if (s.empty())
        throw ParseError("empty rational", 0);
    std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    auto slash = s.find('/');
    auto digits_ok = [&](std::size_t from, std::size_t to) {
        if (from >= to)
            return false;
        for (std::size_t i = from; i < to; ++i)
            if (s[i] < '0' || s[i] > '9')
                return false;
        return true;
    };
    if (slash == std::string::npos) {
        if (!digits_ok(start, s.size()))
            throw ParseError("malformed rational '" + s + "'", 0);
    } else if (!digits_ok(start, slash) || !digits_ok(slash + 1, s.size())) {
        throw ParseError("malformed rational '" + s + "'", 0);
    }
    if (s[0] == '+')
        s.erase(0, 1);
    Rational q;
    if (slash == std::string::npos) {
        q = Rational(Integer(s));
    } else {
        Integer den(s.substr(s.find('/') + 1));
        if (den == 0)
            throw ParseError("zero denominator in '" + s + "'", slash + 1);
        q = Rational(Integer(s.substr(0, s.find('/'))), den);
    }
    q.canonicalize();
    return q;
}

Integer lcm(const Integer& a, const Integer& b)
{
    Integer r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

Integer gcd(const Integer& a, const Integer& b)
{
    Integer r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

void square_split(const Integer& n, Integer& square, Integer& core)
{
    square = 1;
    core = n;
    if (n == 0)
        return;
    Integer rest = abs(n);
    int sign = sgn(n);
    Integer c = 1;
    for (unsigned long p = 2; p < 20000 && Integer(p) * p <= rest; p += (p == 2 ? 1 : 2)) {
        while (mpz_divisible_ui_p(rest.get_mpz_t(), p * p)) {
            rest /= p * p;
            square *= p;
        }
        if (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
            rest /= p;
            c *= p;
        }
    }
    if (mpz_perfect_square_p(rest.get_mpz_t())) {
        Integer r;
        mpz_sqrt(r.get_mpz_t(), rest.get_mpz_t());
        square *= r;
        rest = 1;
    }
    core = sign * c * rest;
}

} // namespace placeode
