#include "placeode/algebraic.hpp"
#include "placeode/tower.hpp"

#include "placeode/errors.hpp"

#include <algorithm>

namespace placeode {

namespace {

void trim(std::vector<Rational>& v)
{
    while (!v.empty() && sgn(v.back()) == 0)
        v.pop_back();
}

// Gauss-Jordan inverse of a square rational matrix.
std::vector<std::vector<Rational>> invert_matrix(std::vector<std::vector<Rational>> a)
{
    const std::size_t n = a.size();
    std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i)
        inv[i][i] = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && sgn(a[piv][col]) == 0)
            ++piv;
        if (piv == n)
            throw Error("singular basis matrix");
        std::swap(a[piv], a[col]);
        std::swap(inv[piv], inv[col]);
        Rational p = 1 / a[col][col];
        for (std::size_t j = 0; j < n; ++j) {
            a[col][j] *= p;
            inv[col][j] *= p;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || sgn(a[r][col]) == 0)
                continue;
            Rational f = a[r][col];
            for (std::size_t j = 0; j < n; ++j) {
                if (sgn(a[col][j]) != 0)
                    a[r][j] -= f * a[col][j];
                if (sgn(inv[col][j]) != 0)
                    inv[r][j] -= f * inv[col][j];
            }
        }
    }
    return inv;
}

// Horner evaluation of a flat polynomial at a point given by its flat coordinates in L.
std::vector<Rational> eval_in(const Field& L, const std::vector<Rational>& poly, const std::vector<Rational>& point)
{
    std::vector<Rational> acc;
    for (std::size_t i = poly.size(); i-- > 0;) {
        acc = L.multiply(acc, point);
        if (acc.empty())
            acc.resize(1, Rational(0));
        acc[0] += poly[i];
        trim(acc);
    }
    return acc;
}

struct Registry {
    std::mutex mu;
    std::map<std::pair<const Field*, const Field*>, std::vector<Rational>> embeddings;
    std::map<std::pair<const Field*, const Field*>, FieldPtr> merges;
    std::vector<FieldPtr> keep_alive;
};

Registry& registry()
{
    static Registry r;
    return r;
}

bool disjoint(const Ball& a, const Ball& b)
{
    Real d = cabs_down(csub(a.mid, b.mid));
    Real r(64);
    mpfr_add(r.get(), a.rad.get(), b.rad.get(), MPFR_RNDU);
    return r < d;
}

} // namespace

// ---- Field

Field::Field(Spec s)
    : parent_(std::move(s.parent)), label_(std::move(s.label)), minpoly_(std::move(s.minpoly)),
      shift_(std::move(s.shift)), M_(std::move(s.M)), parent_eta_(std::move(s.parent_eta)),
      alpha_(std::move(s.alpha)), root_(std::move(s.root)), root_index_(s.root_index), bare_(s.bare)
{
    depth_ = parent_ ? parent_->depth_ + 1 : 0;
}

const FieldPtr& Field::rationals()
{
    static const FieldPtr q = [] {
        Spec s;
        s.label = "Q";
        s.M = QPoly::x();
        s.root = IsolatedRoot{Complex(64), Real(64), Real(64)};
        mpfr_set_inf(s.root.isolation.get(), 1);
        return std::make_shared<const Field>(std::move(s));
    }();
    return q;
}

FieldPtr Field::bare(const QPoly& M)
{
    Spec s;
    s.label = "eta";
    s.M = M.monic();
    s.bare = true;
    return std::make_shared<const Field>(std::move(s));
}

AlgebraicNumber Field::generator() const
{
    if (depth_ == 0)
        return AlgebraicNumber();
    return AlgebraicNumber(shared_from_this(), alpha_);
}

AlgebraicNumber Field::primitive_element() const
{
    if (depth_ == 0 && !bare_)
        return AlgebraicNumber();
    return AlgebraicNumber(shared_from_this(), {Rational(0), Rational(1)});
}

bool Field::is_ancestor_of(const Field& other) const
{
    if (depth_ == 0 && !bare_)
        return true;
    for (const Field* f = &other; f; f = f->parent_.get())
        if (f == this)
            return true;
    return false;
}

std::vector<const Field*> Field::chain() const
{
    std::vector<const Field*> out;
    for (const Field* f = this; f && f->depth_ > 0; f = f->parent_.get())
        out.push_back(f);
    std::reverse(out.begin(), out.end());
    return out;
}

IsolatedRoot Field::eta_enclosure(long bits) const
{
    if (bare_)
        throw Error("field without a chosen root has no enclosure");
    Real target = Real::pow2(-bits);
    if (depth_ == 0 || !(target < root_.radius))
        return root_;
    {
        std::lock_guard<std::mutex> lk(mu_);
        auto it = refined_.lower_bound(bits);
        if (it != refined_.end())
            return it->second;
    }
    IsolatedRoot r = refine_root(M_.coeffs(), root_, bits);
    std::lock_guard<std::mutex> lk(mu_);
    refined_.emplace(bits, r);
    return r;
}

std::vector<Rational> Field::reduce(std::vector<Rational> v) const
{
    trim(v);
    const int D = degree();
    if (D <= 0)
        return v;
    const auto& m = M_.coeffs();
    for (int k = static_cast<int>(v.size()) - 1; k >= D; --k) {
        if (sgn(v[k]) == 0)
            continue;
        Rational c = v[k];
        for (int j = 0; j < D; ++j)
            if (sgn(m[j]) != 0)
                v[k - D + j] -= c * m[j];
        v[k] = 0;
    }
    if (static_cast<int>(v.size()) > D)
        v.resize(D);
    trim(v);
    return v;
}

std::vector<Rational> Field::multiply(const std::vector<Rational>& a, const std::vector<Rational>& b) const
{
    if (a.empty() || b.empty())
        return {};
    std::vector<Rational> r(a.size() + b.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (sgn(a[i]) == 0)
            continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            if (sgn(b[j]) != 0)
                r[i + j] += a[i] * b[j];
    }
    return reduce(std::move(r));
}

std::vector<Rational> Field::invert(const std::vector<Rational>& a) const
{
    if (a.empty())
        throw DivisionByZero();
    if (a.size() == 1)
        return {1 / a[0]};
    auto [g, s, t] = ext_gcd(QPoly(a), M_);
    if (g.degree() != 0)
        throw Error("element is not invertible modulo the minimal polynomial");
    return reduce(s.coeffs());
}

std::vector<Rational> Field::to_nested(const std::vector<Rational>& flat) const
{
    const int D = degree();
    if (depth_ <= 1) {
        std::vector<Rational> out(flat);
        out.resize(D, Rational(0));
        if (depth_ == 1) {
            // basis alpha^i over Q with alpha = eta - shift*0 = eta
            return out;
        }
        return out;
    }
    {
        std::lock_guard<std::mutex> lk(mu_);
        if (nested_inv_.empty()) {
            const int dk = parent_->degree();
            const int r = D / dk;
            // column (i, j) is alpha^i * eta_K^j
            std::vector<std::vector<Rational>> cols;
            std::vector<Rational> ai{Rational(1)};
            for (int i = 0; i < r; ++i) {
                std::vector<Rational> ej = ai;
                for (int j = 0; j < dk; ++j) {
                    cols.push_back(ej);
                    ej = multiply(ej, parent_eta_);
                }
                ai = multiply(ai, alpha_);
            }
            std::vector<std::vector<Rational>> m(D, std::vector<Rational>(D, Rational(0)));
            for (int c = 0; c < D; ++c)
                for (std::size_t row = 0; row < cols[c].size(); ++row)
                    m[row][c] = cols[c][row];
            nested_inv_ = invert_matrix(std::move(m));
        }
    }
    std::vector<Rational> out(D, Rational(0));
    for (int i = 0; i < D; ++i)
        for (std::size_t j = 0; j < flat.size(); ++j)
            if (sgn(flat[j]) != 0 && sgn(nested_inv_[i][j]) != 0)
                out[i] += nested_inv_[i][j] * flat[j];
    return out;
}

std::vector<Rational> Field::from_nested(const std::vector<std::vector<Rational>>& blocks) const
{
    // sum_i (block_i evaluated at eta_K) * alpha^i
    std::vector<Rational> acc;
    for (std::size_t i = blocks.size(); i-- > 0;) {
        acc = multiply(acc, alpha_);
        std::vector<Rational> term = depth_ <= 1 ? blocks[i] : eval_in(*this, blocks[i], parent_eta_);
        if (acc.size() < term.size())
            acc.resize(term.size(), Rational(0));
        for (std::size_t j = 0; j < term.size(); ++j)
            acc[j] += term[j];
        acc = reduce(std::move(acc));
    }
    return acc;
}

// ---- embeddings

namespace {

// image of eta_K in L when K is an ancestor of L (K not Q)
std::vector<Rational> ancestor_image(const Field& K, const Field& L)
{
    if (&K == &L)
        return {Rational(0), Rational(1)};
    std::vector<const Field*> path;
    for (const Field* f = &L; f != &K; f = f->parent().get())
        path.push_back(f);
    std::reverse(path.begin(), path.end());
    std::vector<Rational> img{Rational(0), Rational(1)};
    for (const Field* f : path)
        img = eval_in(*f, img, f->parent_eta());
    return img;
}

} // namespace

bool embedding(const FieldPtr& K, const FieldPtr& L, std::vector<Rational>& image)
{
    if (K->depth() == 0 && !K->is_bare()) {
        image.clear();
        return true;
    }
    if (K.get() == L.get()) {
        image = {Rational(0), Rational(1)};
        return true;
    }
    if (K->is_ancestor_of(*L)) {
        image = ancestor_image(*K, *L);
        return true;
    }
    auto& reg = registry();
    std::vector<std::pair<std::pair<const Field*, const Field*>, std::vector<Rational>>> entries;
    {
        std::lock_guard<std::mutex> lk(reg.mu);
        auto it = reg.embeddings.find({K.get(), L.get()});
        if (it != reg.embeddings.end()) {
            image = it->second;
            return true;
        }
        for (const auto& e : reg.embeddings)
            if (K->is_ancestor_of(*e.first.first) && e.first.second->is_ancestor_of(*L))
                entries.emplace_back(e.first, e.second);
    }
    for (const auto& [key, img_xy] : entries) {
        const Field& X = *key.first;
        const Field& Y = *key.second;
        std::vector<Rational> kx = ancestor_image(*K, X);
        std::vector<Rational> ky = eval_in(Y, kx, img_xy);
        std::vector<Rational> yl = ancestor_image(Y, *L);
        image = eval_in(*L, ky, yl);
        std::lock_guard<std::mutex> lk(reg.mu);
        reg.embeddings.emplace(std::make_pair(K.get(), L.get()), image);
        reg.keep_alive.push_back(K);
        reg.keep_alive.push_back(L);
        return true;
    }
    return false;
}

void register_embedding(const FieldPtr& K, const FieldPtr& L, std::vector<Rational> image)
{
    auto& reg = registry();
    std::lock_guard<std::mutex> lk(reg.mu);
    reg.embeddings.emplace(std::make_pair(K.get(), L.get()), std::move(image));
    reg.keep_alive.push_back(K);
    reg.keep_alive.push_back(L);
}

FieldPtr common_field(const FieldPtr& a, const FieldPtr& b)
{
    if (a.get() == b.get())
        return a;
    if (a->depth() == 0 && !a->is_bare())
        return b;
    if (b->depth() == 0 && !b->is_bare())
        return a;
    std::vector<Rational> img;
    if (embedding(a, b, img))
        return b;
    if (embedding(b, a, img))
        return a;
    // deterministic choice of the base side: deeper/larger field first
    const bool swap = a->degree() < b->degree();
    const FieldPtr& x = swap ? b : a;
    const FieldPtr& y = swap ? a : b;
    auto& reg = registry();
    {
        std::lock_guard<std::mutex> lk(reg.mu);
        auto it = reg.merges.find({x.get(), y.get()});
        if (it != reg.merges.end()) {
            // a cached merge must still respect the current cap
            if (it->second->degree() > degree_cap())
                throw ExtensionLimitExceeded("extension of degree " + std::to_string(it->second->degree()) +
                                                 " exceeds the cap of " + std::to_string(degree_cap()),
                                             x);
            return it->second;
        }
    }
    FieldPtr m = detail::merge_fields(x, y);
    std::lock_guard<std::mutex> lk(reg.mu);
    reg.merges.emplace(std::make_pair(x.get(), y.get()), m);
    reg.keep_alive.push_back(x);
    reg.keep_alive.push_back(y);
    return m;
}

FieldPtr common_field(const std::vector<AlgebraicNumber>& values, FieldPtr start)
{
    for (const auto& v : values)
        start = common_field(start, v.field());
    return start;
}

// ---- AlgebraicNumber

AlgebraicNumber::AlgebraicNumber() : field_(Field::rationals()) {}

AlgebraicNumber::AlgebraicNumber(long v) : field_(Field::rationals())
{
    if (v != 0)
        c_.emplace_back(v);
}

AlgebraicNumber::AlgebraicNumber(const Rational& q) : field_(Field::rationals())
{
    if (sgn(q) != 0)
        c_.push_back(q);
}

AlgebraicNumber::AlgebraicNumber(FieldPtr field, std::vector<Rational> flat) : field_(std::move(field))
{
    c_ = field_->reduce(std::move(flat));
    if (c_.size() <= 1)
        field_ = Field::rationals();
}

bool AlgebraicNumber::is_rational() const { return c_.size() <= 1; }

Rational AlgebraicNumber::to_rational() const
{
    if (!is_rational())
        throw Error("value is not rational");
    return c_.empty() ? Rational(0) : c_[0];
}

int AlgebraicNumber::level() const { return field_->depth(); }

AlgebraicNumber AlgebraicNumber::lifted(const FieldPtr& target) const
{
    if (field_.get() == target.get() || is_rational())
        return *this;
    std::vector<Rational> img;
    if (!embedding(field_, target, img))
        throw Error("value does not embed into the requested field");
    AlgebraicNumber r;
    r.field_ = target;
    r.c_ = eval_in(*target, c_, img);
    if (r.c_.size() <= 1)
        r.field_ = Field::rationals();
    return r;
}

std::vector<AlgebraicNumber> AlgebraicNumber::nested() const
{
    if (field_->depth() == 0)
        return {*this};
    const Field& L = *field_;
    const FieldPtr& K = L.parent();
    std::vector<Rational> coords = L.to_nested(c_);
    const int dk = K->degree() <= 0 ? 1 : K->degree();
    const int r = L.relative_degree();
    std::vector<AlgebraicNumber> out;
    for (int i = 0; i < r; ++i) {
        std::vector<Rational> block(coords.begin() + i * dk, coords.begin() + (i + 1) * dk);
        out.emplace_back(K, std::move(block));
    }
    return out;
}

Ball AlgebraicNumber::enclosure(long bits) const
{
    const mpfr_prec_t prec = static_cast<mpfr_prec_t>(bits + 64);
    if (is_rational())
        return Ball::exact(to_rational(), prec);
    Real target = Real::pow2(-bits);
    for (long b = bits + 16;; b *= 2) {
        IsolatedRoot r = field_->eta_enclosure(b);
        Ball eta(cconvert(r.center, static_cast<mpfr_prec_t>(b + 64)), r.radius);
        Ball v = eval_ball(c_, eta);
        if (!(target < v.rad))
            return v;
        if (b > 1 << 20)
            throw Error("enclosure refinement did not converge");
    }
}

AlgebraicNumber AlgebraicNumber::inverse() const
{
    if (is_zero())
        throw DivisionByZero();
    return AlgebraicNumber(field_, field_->invert(c_));
}

AlgebraicNumber AlgebraicNumber::pow(long k) const
{
    if (k < 0)
        return inverse().pow(-k);
    AlgebraicNumber r(1), b = *this;
    while (k) {
        if (k & 1)
            r *= b;
        b *= b;
        k >>= 1;
    }
    return r;
}

namespace {

// brings both operands into one field; rationals are valid coordinates anywhere
FieldPtr unify(const AlgebraicNumber& a, const AlgebraicNumber& b, std::vector<Rational>& ca, std::vector<Rational>& cb)
{
    if (a.field().get() == b.field().get() || b.is_rational()) {
        ca = a.flat();
        cb = b.flat();
        return a.field();
    }
    if (a.is_rational()) {
        ca = a.flat();
        cb = b.flat();
        return b.field();
    }
    FieldPtr f = common_field(a.field(), b.field());
    ca = a.lifted(f).flat();
    cb = b.lifted(f).flat();
    return f;
}

} // namespace

AlgebraicNumber operator+(const AlgebraicNumber& a, const AlgebraicNumber& b)
{
    std::vector<Rational> x, y;
    FieldPtr f = unify(a, b, x, y);
    if (x.size() < y.size())
        x.resize(y.size(), Rational(0));
    for (std::size_t i = 0; i < y.size(); ++i)
        x[i] += y[i];
    return AlgebraicNumber(f, std::move(x));
}

AlgebraicNumber operator-(const AlgebraicNumber& a, const AlgebraicNumber& b)
{
    std::vector<Rational> x, y;
    FieldPtr f = unify(a, b, x, y);
    if (x.size() < y.size())
        x.resize(y.size(), Rational(0));
    for (std::size_t i = 0; i < y.size(); ++i)
        x[i] -= y[i];
    return AlgebraicNumber(f, std::move(x));
}

AlgebraicNumber operator*(const AlgebraicNumber& a, const AlgebraicNumber& b)
{
    std::vector<Rational> x, y;
    FieldPtr f = unify(a, b, x, y);
    return AlgebraicNumber(f, f->multiply(x, y));
}

AlgebraicNumber operator/(const AlgebraicNumber& a, const AlgebraicNumber& b)
{
    if (b.is_zero())
        throw DivisionByZero();
    std::vector<Rational> x, y;
    FieldPtr f = unify(a, b, x, y);
    return AlgebraicNumber(f, f->multiply(x, f->invert(y)));
}

AlgebraicNumber AlgebraicNumber::operator-() const
{
    AlgebraicNumber r = *this;
    for (auto& c : r.c_)
        c = -c;
    return r;
}

bool operator==(const AlgebraicNumber& a, const AlgebraicNumber& b)
{
    if (a.field_.get() == b.field_.get())
        return a.c_ == b.c_;
    if (a.is_rational() || b.is_rational())
        return false; // reduced non-rational coordinates never describe a rational
    if (!a.field_->is_bare() && !b.field_->is_bare() && disjoint(a.enclosure(32), b.enclosure(32)))
        return false;
    std::vector<Rational> x, y;
    unify(a, b, x, y);
    return x == y;
}

// ---- ordering

int compare_balls(const std::function<Ball(long)>& fa, const std::function<Ball(long)>& fb)
{
    auto cmp_part = [](const Real& am, const Real& bm, const Real& ar, const Real& br) {
        Real ahi(128), alo(128), bhi(128), blo(128);
        mpfr_add(ahi.get(), am.get(), ar.get(), MPFR_RNDU);
        mpfr_sub(alo.get(), am.get(), ar.get(), MPFR_RNDD);
        mpfr_add(bhi.get(), bm.get(), br.get(), MPFR_RNDU);
        mpfr_sub(blo.get(), bm.get(), br.get(), MPFR_RNDD);
        if (ahi < blo)
            return -1;
        if (bhi < alo)
            return 1;
        return 0;
    };
    for (long bits : {64L, 256L, 1024L}) {
        Ball a = fa(bits), b = fb(bits);
        if (int c = cmp_part(a.mid.re, b.mid.re, a.rad, b.rad))
            return c;
    }
    for (long bits : {1024L, 4096L, 16384L}) {
        Ball a = fa(bits), b = fb(bits);
        if (int c = cmp_part(a.mid.im, b.mid.im, a.rad, b.rad))
            return c;
        if (int c = cmp_part(a.mid.re, b.mid.re, a.rad, b.rad))
            return c;
    }
    throw Error("numeric order could not separate two values");
}

int numeric_compare_distinct(const AlgebraicNumber& a, const AlgebraicNumber& b)
{
    return compare_balls([&](long bits) { return a.enclosure(bits); }, [&](long bits) { return b.enclosure(bits); });
}

int numeric_compare(const AlgebraicNumber& a, const AlgebraicNumber& b)
{
    if (a == b)
        return 0;
    if (a.is_rational() && b.is_rational())
        return a.to_rational() < b.to_rational() ? -1 : 1;
    return numeric_compare_distinct(a, b);
}

// ---- rendering

std::vector<std::string> AlgebraicNumber::terms() const
{
    if (is_zero())
        return {"0"};
    if (is_rational())
        return {to_string(to_rational())};
    const std::string& g = field_->label();
    std::vector<AlgebraicNumber> cs = nested();
    std::vector<std::string> out;
    for (std::size_t i = 0; i < cs.size(); ++i) {
        const AlgebraicNumber& c = cs[i];
        if (c.is_zero())
            continue;
        std::string p = i == 0 ? "" : (i == 1 ? g : g + "^" + std::to_string(i));
        if (i == 0) {
            for (auto& t : c.terms())
                out.push_back(t);
            continue;
        }
        if (c.is_rational()) {
            Rational q = c.to_rational();
            if (q == 1)
                out.push_back(p);
            else if (q == -1)
                out.push_back("-" + p);
            else
                out.push_back(to_string(q) + "*" + p);
            continue;
        }
        std::vector<std::string> sub = c.terms();
        if (sub.size() == 1)
            out.push_back(sub[0] + "*" + p);
        else
            out.push_back("(" + c.str() + ")*" + p);
    }
    return out;
}

std::string AlgebraicNumber::str() const
{
    std::vector<std::string> ts = terms();
    std::string s = ts[0];
    for (std::size_t i = 1; i < ts.size(); ++i) {
        if (ts[i][0] == '-')
            s += " - " + ts[i].substr(1);
        else
            s += " + " + ts[i];
    }
    return s;
}

std::string poly_str(const std::vector<AlgebraicNumber>& coeffs, const std::string& var)
{
    std::vector<std::string> parts;
    for (std::size_t i = coeffs.size(); i-- > 0;) {
        const AlgebraicNumber& c = coeffs[i];
        if (c.is_zero())
            continue;
        std::string p = i == 0 ? "" : (i == 1 ? var : var + "^" + std::to_string(i));
        std::vector<std::string> ts = c.terms();
        if (i == 0) {
            if (ts.size() == 1)
                parts.push_back(ts[0]);
            else
                parts.push_back("(" + c.str() + ")");
        } else if (ts.size() == 1) {
            if (ts[0] == "1")
                parts.push_back(p);
            else if (ts[0] == "-1")
                parts.push_back("-" + p);
            else
                parts.push_back(ts[0] + "*" + p);
        } else {
            parts.push_back("(" + c.str() + ")*" + p);
        }
    }
    if (parts.empty())
        return "0";
    std::string s = parts[0];
    for (std::size_t i = 1; i < parts.size(); ++i) {
        if (parts[i][0] == '-')
            s += " - " + parts[i].substr(1);
        else
            s += " + " + parts[i];
    }
    return s;
}

std::vector<std::string> describe_tower(const FieldPtr& f)
{
    std::vector<std::string> out;
    for (const Field* level : f->chain()) {
        if (level->label().rfind("sqrt(", 0) == 0)
            continue;
        Ball b = level->generator().enclosure(60);
        // parts below the enclosure radius print as zero
        const Real tiny = Real::pow2(-50);
        const bool has_re = !(cabs_up(Complex(b.mid.re, Real(64))) < tiny);
        const bool has_im = !(cabs_up(Complex(b.mid.im, Real(64))) < tiny);
        std::string line = level->label() + ": root of " + poly_str(level->minpoly(), "x") + " near ";
        if (has_re || !has_im)
            line += has_re ? b.mid.re.str(12) : "0";
        if (has_im) {
            std::string im = b.mid.im.str(12);
            if (has_re)
                line += im[0] == '-' ? " - " + im.substr(1) : " + " + im;
            else
                line += im;
            line += "*i";
        }
        out.push_back(std::move(line));
    }
    return out;
}

} // namespace placeode
