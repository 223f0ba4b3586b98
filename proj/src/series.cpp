#include "placeode/series.hpp"

#include "placeode/errors.hpp"

#include <algorithm>
#include <limits>

namespace placeode {

TruncatedSeries::TruncatedSeries(std::vector<AlgebraicNumber> coeffs, int trunc) : c_(std::move(coeffs)), N_(trunc)
{
    if (N_ < -1)
        N_ = -1;
    c_.resize(static_cast<std::size_t>(N_ + 1));
}

TruncatedSeries TruncatedSeries::constant(const AlgebraicNumber& a, int trunc) { return TruncatedSeries({a}, trunc); }

TruncatedSeries TruncatedSeries::variable(int trunc) { return monomial(AlgebraicNumber(1), 1, trunc); }

TruncatedSeries TruncatedSeries::monomial(const AlgebraicNumber& a, int k, int trunc)
{
    std::vector<AlgebraicNumber> c(static_cast<std::size_t>(std::max(k, 0)) + 1);
    c[k] = a;
    return TruncatedSeries(std::move(c), trunc);
}

const AlgebraicNumber& TruncatedSeries::operator[](int i) const
{
    if (i < 0 || i > N_)
        throw InsufficientPrecision("coefficient " + std::to_string(i) + " is beyond the certified order " +
                                    std::to_string(N_));
    return c_[i];
}

std::optional<int> TruncatedSeries::order() const
{
    for (int i = 0; i <= N_; ++i)
        if (!c_[i].is_zero())
            return i;
    return std::nullopt;
}

int TruncatedSeries::order_lower_bound() const
{
    auto o = order();
    return o ? *o : N_ + 1;
}

int TruncatedSeries::last_nonzero() const
{
    for (int i = N_; i >= 0; --i)
        if (!c_[i].is_zero())
            return i;
    return -1;
}

TruncatedSeries TruncatedSeries::truncated(int n) const
{
    if (n > N_)
        throw InsufficientPrecision("cannot extend a series beyond its certified order");
    return TruncatedSeries(c_, n);
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b)
{
    const int n = std::min(a.N_, b.N_);
    std::vector<AlgebraicNumber> c(static_cast<std::size_t>(n + 1));
    for (int i = 0; i <= n; ++i)
        c[i] = a.c_[i] + b.c_[i];
    return TruncatedSeries(std::move(c), n);
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b)
{
    const int n = std::min(a.N_, b.N_);
    std::vector<AlgebraicNumber> c(static_cast<std::size_t>(n + 1));
    for (int i = 0; i <= n; ++i)
        c[i] = a.c_[i] - b.c_[i];
    return TruncatedSeries(std::move(c), n);
}

TruncatedSeries TruncatedSeries::operator-() const
{
    TruncatedSeries r = *this;
    for (auto& a : r.c_)
        a = -a;
    return r;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b)
{
    const int va = a.order_lower_bound(), vb = b.order_lower_bound();
    const int n = std::min(a.N_ + vb, b.N_ + va);
    std::vector<AlgebraicNumber> c(static_cast<std::size_t>(std::max(n + 1, 0)));
    for (int i = va; i <= std::min(a.N_, n); ++i) {
        if (a.c_[i].is_zero())
            continue;
        for (int j = vb; j <= std::min(b.N_, n - i); ++j)
            if (!b.c_[j].is_zero())
                c[i + j] += a.c_[i] * b.c_[j];
    }
    return TruncatedSeries(std::move(c), n);
}

TruncatedSeries TruncatedSeries::scaled(const AlgebraicNumber& s) const
{
    TruncatedSeries r = *this;
    for (auto& a : r.c_)
        a = a * s;
    return r;
}

TruncatedSeries TruncatedSeries::rescaled(const AlgebraicNumber& lambda) const
{
    TruncatedSeries r = *this;
    AlgebraicNumber p(1);
    for (auto& a : r.c_) {
        a = a * p;
        p = p * lambda;
    }
    return r;
}

TruncatedSeries TruncatedSeries::derivative() const
{
    std::vector<AlgebraicNumber> c;
    for (int i = 1; i <= N_; ++i)
        c.push_back(AlgebraicNumber(static_cast<long>(i)) * c_[i]);
    return TruncatedSeries(std::move(c), N_ - 1);
}

TruncatedSeries TruncatedSeries::invert() const
{
    if (N_ < 0 || c_[0].is_zero())
        throw NotAUnit();
    std::vector<AlgebraicNumber> r(static_cast<std::size_t>(N_ + 1));
    AlgebraicNumber inv0 = c_[0].inverse();
    r[0] = inv0;
    for (int k = 1; k <= N_; ++k) {
        AlgebraicNumber s;
        for (int i = 1; i <= k; ++i)
            if (!c_[i].is_zero())
                s += c_[i] * r[k - i];
        r[k] = -s * inv0;
    }
    return TruncatedSeries(std::move(r), N_);
}

TruncatedSeries TruncatedSeries::pow(int k) const
{
    if (k <= 0)
        return constant(AlgebraicNumber(1), std::max(N_, 0));
    TruncatedSeries r = *this, b = *this;
    --k;
    while (k > 0) {
        if (k & 1)
            r = r * b;
        k >>= 1;
        if (k)
            b = b * b;
    }
    return r;
}

TruncatedSeries TruncatedSeries::compose(const TruncatedSeries& inner) const
{
    const int v = inner.order_lower_bound();
    if (inner.N_ >= 0 && !inner.c_[0].is_zero())
        throw InnerNotPositiveOrder();
    if (inner.N_ < 0 && N_ > 0)
        throw InnerNotPositiveOrder();
    // outer tail O(s^{N+1}) is O(t^{v(N+1)}); terms with k >= 1 are known to inner.N + (k-1)v
    long R = static_cast<long>(v) * (N_ + 1) - 1;
    int kmin = -1;
    for (int k = 1; k <= N_; ++k)
        if (!c_[k].is_zero()) {
            kmin = k;
            break;
        }
    if (kmin > 0)
        R = std::min<long>(R, inner.N_ + static_cast<long>(kmin - 1) * v);
    const int n = static_cast<int>(std::min<long>(R, std::numeric_limits<int>::max() / 4));
    if (N_ < 0)
        return TruncatedSeries({}, -1);
    // Horner: (((a_N) s + a_{N-1}) s + ...) with every intermediate cut at n
    std::vector<AlgebraicNumber> acc(static_cast<std::size_t>(n + 1));
    const int top = N_;
    std::vector<AlgebraicNumber> s(static_cast<std::size_t>(n + 1));
    for (int i = 0; i <= std::min(n, inner.N_); ++i)
        s[i] = inner.c_[i];
    for (int k = top; k >= 0; --k) {
        std::vector<AlgebraicNumber> next(static_cast<std::size_t>(n + 1));
        for (int i = 0; i <= n; ++i) {
            if (acc[i].is_zero())
                continue;
            for (int j = std::max(v, 1); i + j <= n; ++j)
                if (!s[j].is_zero())
                    next[i + j] += acc[i] * s[j];
        }
        next[0] += c_[k];
        acc = std::move(next);
    }
    return TruncatedSeries(std::move(acc), n);
}

bool TruncatedSeries::agrees_with(const TruncatedSeries& o) const
{
    const int n = std::min(N_, o.N_);
    for (int i = 0; i <= n; ++i)
        if (c_[i] != o.c_[i])
            return false;
    return true;
}

FieldPtr TruncatedSeries::field() const { return common_field(c_); }

std::string render_sum(const std::vector<AlgebraicNumber>& coeffs, const std::string& var)
{
    std::vector<std::string> parts;
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        const AlgebraicNumber& c = coeffs[k];
        if (c.is_zero())
            continue;
        std::string p = k == 0 ? "" : (k == 1 ? var : var + "^" + std::to_string(k));
        std::vector<std::string> ts = c.terms();
        if (k == 0)
            parts.push_back(ts.size() == 1 ? ts[0] : c.str());
        else if (ts.size() == 1)
            parts.push_back(ts[0] == "1" ? p : ts[0] == "-1" ? "-" + p : ts[0] + "*" + p);
        else
            parts.push_back("(" + c.str() + ")*" + p);
    }
    if (parts.empty())
        return "";
    std::string s = parts[0];
    for (std::size_t i = 1; i < parts.size(); ++i) {
        // a multi-term constant can lead with '-', only single terms carry their sign
        if (parts[i][0] == '-')
            s += " - " + parts[i].substr(1);
        else
            s += " + " + parts[i];
    }
    return s;
}

std::string TruncatedSeries::str(const std::string& var) const
{
    std::string body = render_sum(c_, var);
    std::string tail = "O(" + var + (N_ + 1 == 1 ? "" : "^" + std::to_string(N_ + 1)) + ")";
    if (N_ + 1 == 0)
        tail = "O(1)";
    if (body.empty())
        return tail;
    return body + " + " + tail;
}

} // namespace placeode
