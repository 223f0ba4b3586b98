#include "placeode/bipoly.hpp"

#include "placeode/errors.hpp"
#include "placeode/factor.hpp"

#include <algorithm>
#include <set>

namespace placeode {

BiPoly::BiPoly(std::map<Key, AlgebraicNumber> terms)
{
    for (auto& [k, v] : terms)
        if (!v.is_zero())
            t_.emplace(k, std::move(v));
}

BiPoly BiPoly::constant(const AlgebraicNumber& a) { return monomial(a, 0, 0); }

BiPoly BiPoly::monomial(const AlgebraicNumber& a, int i, int j)
{
    BiPoly p;
    if (!a.is_zero())
        p.t_.emplace(Key{i, j}, a);
    return p;
}

AlgebraicNumber BiPoly::coeff(int i, int j) const
{
    auto it = t_.find({i, j});
    return it == t_.end() ? AlgebraicNumber() : it->second;
}

int BiPoly::deg_y() const
{
    int d = -1;
    for (const auto& [k, v] : t_)
        d = std::max(d, k.first);
    return d;
}

int BiPoly::deg_z() const
{
    int d = -1;
    for (const auto& [k, v] : t_)
        d = std::max(d, k.second);
    return d;
}

int BiPoly::total_degree() const
{
    int d = -1;
    for (const auto& [k, v] : t_)
        d = std::max(d, k.first + k.second);
    return d;
}

int BiPoly::lowest_degree() const
{
    int d = -1;
    for (const auto& [k, v] : t_)
        if (d < 0 || k.first + k.second < d)
            d = k.first + k.second;
    return d;
}

BiPoly BiPoly::operator-() const
{
    BiPoly r = *this;
    for (auto& [k, v] : r.t_)
        v = -v;
    return r;
}

BiPoly operator+(const BiPoly& a, const BiPoly& b)
{
    BiPoly r = a;
    for (const auto& [k, v] : b.t_) {
        auto it = r.t_.find(k);
        if (it == r.t_.end()) {
            r.t_.emplace(k, v);
        } else {
            it->second += v;
            if (it->second.is_zero())
                r.t_.erase(it);
        }
    }
    return r;
}

BiPoly operator-(const BiPoly& a, const BiPoly& b) { return a + (-b); }

BiPoly operator*(const BiPoly& a, const BiPoly& b)
{
    std::map<BiPoly::Key, AlgebraicNumber> acc;
    for (const auto& [ka, va] : a.t_)
        for (const auto& [kb, vb] : b.t_)
            acc[{ka.first + kb.first, ka.second + kb.second}] += va * vb;
    return BiPoly(std::move(acc));
}

BiPoly operator*(const AlgebraicNumber& s, const BiPoly& p)
{
    std::map<BiPoly::Key, AlgebraicNumber> acc;
    for (const auto& [k, v] : p.t_)
        acc[k] = s * v;
    return BiPoly(std::move(acc));
}

BiPoly BiPoly::pow(int k) const
{
    BiPoly r = constant(AlgebraicNumber(1)), b = *this;
    while (k > 0) {
        if (k & 1)
            r = r * b;
        k >>= 1;
        if (k)
            b = b * b;
    }
    return r;
}

AlgebraicNumber BiPoly::eval(const AlgebraicNumber& y, const AlgebraicNumber& z) const
{
    const int dz = deg_z();
    AlgebraicNumber acc;
    for (int j = dz; j >= 0; --j)
        acc = acc * z + coeff_z(j).eval(y);
    return acc;
}

BiPoly BiPoly::derivative_z() const
{
    std::map<Key, AlgebraicNumber> acc;
    for (const auto& [k, v] : t_)
        if (k.second > 0)
            acc[{k.first, k.second - 1}] = AlgebraicNumber(static_cast<long>(k.second)) * v;
    return BiPoly(std::move(acc));
}

BiPoly BiPoly::derivative_y() const
{
    std::map<Key, AlgebraicNumber> acc;
    for (const auto& [k, v] : t_)
        if (k.first > 0)
            acc[{k.first - 1, k.second}] = AlgebraicNumber(static_cast<long>(k.first)) * v;
    return BiPoly(std::move(acc));
}

namespace {

std::vector<AlgebraicNumber> powers(const AlgebraicNumber& c, int n)
{
    std::vector<AlgebraicNumber> p(static_cast<std::size_t>(n + 1));
    p[0] = AlgebraicNumber(1);
    for (int i = 1; i <= n; ++i)
        p[i] = p[i - 1] * c;
    return p;
}

std::vector<std::vector<Integer>> binomials(int n)
{
    std::vector<std::vector<Integer>> b(static_cast<std::size_t>(n + 1));
    for (int i = 0; i <= n; ++i) {
        b[i].assign(static_cast<std::size_t>(i + 1), Integer(1));
        for (int k = 1; k < i; ++k)
            b[i][k] = b[i - 1][k - 1] + b[i - 1][k];
    }
    return b;
}

} // namespace

BiPoly BiPoly::translate(const AlgebraicNumber& c0, const AlgebraicNumber& c1) const
{
    const int dy = std::max(deg_y(), 0), dz = std::max(deg_z(), 0);
    auto p0 = powers(c0, dy), p1 = powers(c1, dz);
    auto bin = binomials(std::max(dy, dz));
    std::map<Key, AlgebraicNumber> acc;
    for (const auto& [k, v] : t_) {
        const int i = k.first, j = k.second;
        for (int a = 0; a <= i; ++a) {
            if (p0[i - a].is_zero())
                continue;
            AlgebraicNumber ya = v * AlgebraicNumber(bin[i][a]) * p0[i - a];
            for (int b = 0; b <= j; ++b) {
                if (p1[j - b].is_zero())
                    continue;
                acc[{a, b}] += ya * AlgebraicNumber(bin[j][b]) * p1[j - b];
            }
        }
    }
    return BiPoly(std::move(acc));
}

UPoly BiPoly::coeff_z(int j) const
{
    std::vector<AlgebraicNumber> c;
    for (const auto& [k, v] : t_) {
        if (k.second != j)
            continue;
        if (static_cast<int>(c.size()) <= k.first)
            c.resize(static_cast<std::size_t>(k.first) + 1);
        c[k.first] = v;
    }
    return UPoly(std::move(c));
}

UPoly BiPoly::slice_y(const AlgebraicNumber& v) const
{
    const int dz = deg_z();
    std::vector<AlgebraicNumber> c(static_cast<std::size_t>(std::max(dz + 1, 0)));
    for (int j = 0; j <= dz; ++j)
        c[j] = coeff_z(j).eval(v);
    return UPoly(std::move(c));
}

UPoly BiPoly::slice_z(const AlgebraicNumber& v) const
{
    const int dy = deg_y();
    std::vector<AlgebraicNumber> c(static_cast<std::size_t>(std::max(dy + 1, 0)));
    auto pv = powers(v, std::max(deg_z(), 0));
    for (const auto& [k, a] : t_)
        c[k.first] += a * pv[k.second];
    return UPoly(std::move(c));
}

TruncatedSeries BiPoly::eval_series(const TruncatedSeries& A, const TruncatedSeries& B) const
{
    const int big = std::max(A.trunc(), B.trunc());
    auto poly_at = [&](const UPoly& p) {
        TruncatedSeries acc = TruncatedSeries::constant(AlgebraicNumber(), big);
        for (std::size_t i = p.size(); i-- > 0;)
            acc = acc * A + TruncatedSeries::constant(p[i], big);
        return acc;
    };
    const int dz = deg_z();
    TruncatedSeries acc = TruncatedSeries::constant(AlgebraicNumber(), big);
    for (int j = dz; j >= 0; --j)
        acc = acc * B + poly_at(coeff_z(j));
    return acc;
}

FieldPtr BiPoly::field() const
{
    FieldPtr f = Field::rationals();
    for (const auto& [k, v] : t_)
        f = common_field(f, v.field());
    return f;
}

bool BiPoly::is_rational() const
{
    return std::all_of(t_.begin(), t_.end(), [](const auto& kv) { return kv.second.is_rational(); });
}

BiPoly BiPoly::monic() const
{
    if (t_.empty())
        return *this;
    // leading term: highest z power, then highest y power
    const std::pair<const Key, AlgebraicNumber>* lead = nullptr;
    for (const auto& kv : t_)
        if (!lead || kv.first.second > lead->first.second ||
            (kv.first.second == lead->first.second && kv.first.first > lead->first.first))
            lead = &kv;
    return lead->second.inverse() * *this;
}

std::string BiPoly::str() const
{
    std::vector<std::pair<Key, AlgebraicNumber>> items(t_.begin(), t_.end());
    std::sort(items.begin(), items.end(), [](const auto& a, const auto& b) {
        if (a.first.second != b.first.second)
            return a.first.second > b.first.second;
        return a.first.first > b.first.first;
    });
    std::vector<std::string> parts;
    for (const auto& [k, v] : items) {
        std::string mon;
        if (k.first > 0)
            mon = k.first == 1 ? "y" : "y^" + std::to_string(k.first);
        if (k.second > 0) {
            if (!mon.empty())
                mon += "*";
            mon += k.second == 1 ? "y'" : "y'^" + std::to_string(k.second);
        }
        std::vector<std::string> ts = v.terms();
        if (mon.empty())
            parts.push_back(ts.size() == 1 ? ts[0] : "(" + v.str() + ")");
        else if (ts.size() == 1)
            parts.push_back(ts[0] == "1" ? mon : ts[0] == "-1" ? "-" + mon : ts[0] + "*" + mon);
        else
            parts.push_back("(" + v.str() + ")*" + mon);
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

// ---- points

bool point_less(const Point& a, const Point& b)
{
    int c = numeric_compare(a.y, b.y);
    if (c != 0)
        return c < 0;
    return numeric_compare(a.z, b.z) < 0;
}

bool same_point(const Point& a, const Point& b) { return a.y == b.y && a.z == b.z; }

BiPoly separant(const BiPoly& F) { return F.derivative_z(); }
UPoly univariate_slice_z(const BiPoly& F, const AlgebraicNumber& v) { return F.slice_z(v); }
UPoly univariate_slice_y(const BiPoly& F, const AlgebraicNumber& v) { return F.slice_y(v); }

std::optional<BiPoly> exact_divide(const BiPoly& f, const BiPoly& g)
{
    if (g.is_zero())
        throw DivisionByZero();
    auto lead = [](const BiPoly& p) {
        const std::pair<const BiPoly::Key, AlgebraicNumber>* best = nullptr;
        for (const auto& kv : p.terms())
            if (!best || kv.first.second > best->first.second ||
                (kv.first.second == best->first.second && kv.first.first > best->first.first))
                best = &kv;
        return *best;
    };
    auto lg = lead(g);
    BiPoly r = f, q;
    while (!r.is_zero()) {
        auto lr = lead(r);
        const int di = lr.first.first - lg.first.first, dj = lr.first.second - lg.first.second;
        if (di < 0 || dj < 0)
            return std::nullopt;
        BiPoly m = BiPoly::monomial(lr.second / lg.second, di, dj);
        q = q + m;
        r = r - m * g;
    }
    return q;
}

UPoly resultant_z(const BiPoly& F, const BiPoly& G)
{
    const int n = F.deg_z(), m = G.deg_z();
    if (F.is_zero() || G.is_zero())
        return UPoly();
    if (m == 0) {
        UPoly g = G.coeff_z(0), r = UPoly::constant(AlgebraicNumber(1));
        for (int i = 0; i < n; ++i)
            r = r * g;
        return r;
    }
    if (n == 0) {
        UPoly f = F.coeff_z(0), r = UPoly::constant(AlgebraicNumber(1));
        for (int i = 0; i < m; ++i)
            r = r * f;
        return r;
    }
    const int bound = m * std::max(F.deg_y(), 0) + n * std::max(G.deg_y(), 0);
    UPoly lf = F.coeff_z(n), lg = G.coeff_z(m);
    std::vector<AlgebraicNumber> xs, ys;
    for (long k = 0; static_cast<int>(xs.size()) <= bound; ++k) {
        AlgebraicNumber y0(k % 2 == 0 ? k / 2 : -(k + 1) / 2);
        if (lf.eval(y0).is_zero() || lg.eval(y0).is_zero())
            continue;
        xs.push_back(y0);
        ys.push_back(resultant(F.slice_y(y0), G.slice_y(y0)));
    }
    return interpolate(xs, ys);
}

std::vector<Point> solve_system(const BiPoly& F, const BiPoly& G)
{
    if (F.is_zero() || G.is_zero())
        throw CommonComponent();
    std::vector<Point> out;
    if (G.total_degree() == 0)
        return out;
    if (F.total_degree() == 0)
        return out;
    auto points_over = [&](const AlgebraicNumber& y0, int mult, const UPoly& h) {
        if (h.is_zero())
            throw CommonComponent();
        for (const auto& [z0, mz] : all_roots(h, y0.field()))
            out.push_back(Point{y0, z0, mult});
    };
    if (G.deg_z() == 0 || F.deg_z() == 0) {
        const BiPoly& P = G.deg_z() == 0 ? G : F;
        const BiPoly& Q = G.deg_z() == 0 ? F : G;
        UPoly g = P.coeff_z(0);
        if (Q.deg_z() == 0) {
            if (gcd(g, Q.coeff_z(0)).degree() > 0)
                throw CommonComponent();
            return out;
        }
        for (const auto& [y0, m] : all_roots(g))
            points_over(y0, m, Q.slice_y(y0));
    } else {
        UPoly R = resultant_z(F, G);
        if (R.is_zero())
            throw CommonComponent();
        for (const auto& [y0, m] : all_roots(R)) {
            UPoly f = F.slice_y(y0), g = G.slice_y(y0);
            if (f.is_zero() && g.is_zero())
                throw CommonComponent();
            points_over(y0, m, f.is_zero() ? g : g.is_zero() ? f : gcd(f, g));
        }
    }
    std::sort(out.begin(), out.end(), point_less);
    return out;
}

int multiplicity_at(const BiPoly& F, const AlgebraicNumber& c0, const AlgebraicNumber& c1)
{
    if (!F.eval(c0, c1).is_zero())
        throw PointNotOnCurve();
    return F.translate(c0, c1).lowest_degree();
}

TruncatedSeries regular_branch(const BiPoly& Ft, int n)
{
    BiPoly Fw = Ft.derivative_z();
    TruncatedSeries W({}, 0);
    int p = 0;
    while (p < n) {
        const int p2 = std::min(2 * p + 1, n);
        TruncatedSeries A = TruncatedSeries::variable(p2);
        TruncatedSeries Wp(W.coeffs(), p2);
        TruncatedSeries E = Ft.eval_series(A, Wp);
        TruncatedSeries D = Fw.eval_series(A, Wp);
        W = (Wp - E * D.invert()).truncated(p2);
        p = p2;
    }
    return W;
}

// ---- irreducibility

namespace {

// First kernel vector of the matrix given by columns (rows = equations), or empty.
template <class K>
std::vector<K> first_kernel_vector(std::vector<std::vector<K>> rows, std::size_t ncols)
{
    std::vector<int> pivot_col;
    std::size_t r = 0;
    for (std::size_t c = 0; c < ncols && r < rows.size(); ++c) {
        std::size_t p = r;
        while (p < rows.size() && is_zero(rows[p][c]))
            ++p;
        if (p == rows.size())
            continue;
        std::swap(rows[p], rows[r]);
        K inv = K(1) / rows[r][c];
        for (auto& x : rows[r])
            x = x * inv;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || is_zero(rows[i][c]))
                continue;
            K f = rows[i][c];
            for (std::size_t j = c; j < ncols; ++j)
                if (!is_zero(rows[r][j]))
                    rows[i][j] = rows[i][j] - f * rows[r][j];
        }
        pivot_col.push_back(static_cast<int>(c));
        ++r;
    }
    std::vector<bool> is_pivot(ncols, false);
    for (int c : pivot_col)
        is_pivot[c] = true;
    std::size_t free_col = ncols;
    for (std::size_t c = 0; c < ncols; ++c)
        if (!is_pivot[c]) {
            free_col = c;
            break;
        }
    if (free_col == ncols)
        return {};
    std::vector<K> v(ncols, K(0));
    v[free_col] = K(1);
    for (std::size_t i = 0; i < pivot_col.size(); ++i)
        v[pivot_col[i]] = -rows[i][free_col];
    return v;
}

std::set<int> subset_sums(const std::vector<int>& degs)
{
    std::set<int> s{0};
    for (int d : degs) {
        std::set<int> t = s;
        for (int x : s)
            t.insert(x + d);
        s = std::move(t);
    }
    return s;
}

BiPoly from_kernel(const std::vector<AlgebraicNumber>& v, int dy, int k)
{
    std::map<BiPoly::Key, AlgebraicNumber> t;
    for (int i = 0; i <= dy; ++i)
        for (int j = 0; j <= k; ++j)
            t[{i, j}] = v[static_cast<std::size_t>(i * (k + 1) + j)];
    return BiPoly(std::move(t)).monic();
}

// columns of G(y0 + t, z(t)) for the monomials y^i z^j, i <= dy, j <= k, up to t^(L-1)
std::vector<std::vector<AlgebraicNumber>> monomial_columns(const AlgebraicNumber& y0, const TruncatedSeries& Z, int dy,
                                                           int k, int L)
{
    TruncatedSeries Y({y0, AlgebraicNumber(1)}, L - 1);
    TruncatedSeries Zs(Z.coeffs(), L - 1);
    std::vector<TruncatedSeries> yp{TruncatedSeries::constant(AlgebraicNumber(1), L - 1)};
    for (int i = 1; i <= dy; ++i)
        yp.push_back((yp.back() * Y).truncated(L - 1));
    std::vector<TruncatedSeries> zp{TruncatedSeries::constant(AlgebraicNumber(1), L - 1)};
    for (int j = 1; j <= k; ++j)
        zp.push_back(zp.back() * Zs);
    std::vector<std::vector<AlgebraicNumber>> cols;
    for (int i = 0; i <= dy; ++i)
        for (int j = 0; j <= k; ++j) {
            TruncatedSeries s = yp[i] * zp[j];
            std::vector<AlgebraicNumber> c(static_cast<std::size_t>(L));
            for (int r = 0; r < L; ++r)
                c[r] = s[r];
            cols.push_back(std::move(c));
        }
    return cols;
}

std::optional<BiPoly> kernel_factor_rational(const std::vector<std::vector<AlgebraicNumber>>& cols, const FieldPtr& K1,
                                             int dy, int k)
{
    const int D = std::max(K1->degree(), 1);
    const std::size_t L = cols[0].size();
    std::vector<std::vector<Rational>> rows(L * static_cast<std::size_t>(D),
                                            std::vector<Rational>(cols.size(), Rational(0)));
    for (std::size_t c = 0; c < cols.size(); ++c)
        for (std::size_t r = 0; r < L; ++r) {
            std::vector<Rational> fl = cols[c][r].lifted(K1).flat();
            for (std::size_t d = 0; d < fl.size(); ++d)
                rows[r * D + d][c] = fl[d];
        }
    auto v = first_kernel_vector(std::move(rows), cols.size());
    if (v.empty())
        return std::nullopt;
    std::vector<AlgebraicNumber> a;
    for (auto& q : v)
        a.emplace_back(q);
    return from_kernel(a, dy, k);
}

std::optional<BiPoly> kernel_factor_algebraic(const std::vector<std::vector<AlgebraicNumber>>& cols, int dy, int k)
{
    const std::size_t L = cols[0].size();
    std::vector<std::vector<AlgebraicNumber>> rows(L, std::vector<AlgebraicNumber>(cols.size()));
    for (std::size_t c = 0; c < cols.size(); ++c)
        for (std::size_t r = 0; r < L; ++r)
            rows[r][c] = cols[c][r];
    auto v = first_kernel_vector(std::move(rows), cols.size());
    if (v.empty())
        return std::nullopt;
    return from_kernel(v, dy, k);
}

BiPoly upoly_in_y(const UPoly& g)
{
    std::map<BiPoly::Key, AlgebraicNumber> t;
    for (std::size_t i = 0; i < g.size(); ++i)
        t[{static_cast<int>(i), 0}] = g[i];
    return BiPoly(std::move(t)).monic();
}

} // namespace

std::optional<BiPoly> find_factor(const BiPoly& F)
{
    const int n = F.deg_z(), m = std::max(F.deg_y(), 0);
    if (n <= 0)
        return std::nullopt;
    // content in y
    UPoly content;
    for (int j = 0; j <= n; ++j)
        content = gcd(content, F.coeff_z(j));
    if (content.degree() > 0)
        return upoly_in_y(content);

    const FieldPtr K0 = F.field();
    const bool rational = F.is_rational();
    // base values with F(y0, z) squarefree of full degree; keep the one with fewest factors
    struct Base {
        AlgebraicNumber y0;
        std::vector<std::pair<UPoly, int>> factors;
    };
    std::optional<Base> best;
    std::set<int> possible;
    for (int k = 1; k < n; ++k)
        possible.insert(k);
    int good = 0;
    for (long c = 1; c < 200 && good < 6; ++c) {
        AlgebraicNumber y0(c % 2 ? (c + 1) / 2 : -c / 2);
        UPoly f = F.slice_y(y0);
        if (f.degree() != n || gcd(f, f.derivative()).degree() > 0)
            continue;
        ++good;
        auto fs = factor_over(f, K0);
        std::vector<int> degs;
        for (const auto& [g, mult] : fs)
            degs.push_back(g.degree());
        std::set<int> sums = subset_sums(degs), keep;
        for (int k : possible)
            if (sums.count(k))
                keep.insert(k);
        possible = std::move(keep);
        if (!best || fs.size() < best->factors.size())
            best = Base{y0, fs};
        if (fs.size() == 1)
            break;
    }
    if (!best)
        throw NotIrreducible("the polynomial has a repeated factor", "");

    if (!possible.empty() && best->factors.size() > 1) {
        // factor over the coefficient field via a branch through a root of the smallest factor
        const UPoly& f1 = best->factors.front().first;
        Adjoined z0 = adjoin_root(K0, f1);
        BiPoly Ft = F.translate(best->y0, z0.root);
        const int Lmax = m * (n - 1) + m * n + 1;
        TruncatedSeries Z = regular_branch(Ft, Lmax);
        for (int k : possible) {
            if (k < f1.degree())
                continue;
            for (int dy = 0; dy <= m; ++dy) {
                const int L = m * k + dy * n + 1;
                TruncatedSeries Zc(Z.coeffs(), L - 1);
                std::vector<AlgebraicNumber> zs = Zc.coeffs();
                zs[0] += z0.root;
                auto cols = monomial_columns(best->y0, TruncatedSeries(zs, L - 1), dy, k, L);
                auto G = rational ? kernel_factor_rational(cols, z0.field, dy, k)
                                  : kernel_factor_algebraic(cols, dy, k);
                if (G && G->deg_z() > 0 && exact_divide(F, *G))
                    return G;
            }
        }
    }
    if (best->factors.size() > 1 && rational)
        return std::nullopt; // irreducible over Q only if the search above failed; fall through below
    // absolute irreducibility: factors over an extension are conjugate, so they share bidegree
    const UPoly& f = best->factors.front().first;
    Adjoined z0 = adjoin_root(K0, f);
    BiPoly Ft = F.translate(best->y0, z0.root);
    std::vector<std::pair<int, int>> shapes;
    for (int k = 1; k < n; ++k)
        if (n % k == 0 && (m * k) % n == 0)
            shapes.emplace_back(k, m * k / n);
    if (shapes.empty())
        return std::nullopt;
    int Lmax = 0;
    for (auto [k, dy] : shapes)
        Lmax = std::max(Lmax, m * k + dy * n + 1);
    TruncatedSeries Z = regular_branch(Ft, Lmax);
    for (auto [k, dy] : shapes) {
        const int L = m * k + dy * n + 1;
        std::vector<AlgebraicNumber> zs = TruncatedSeries(Z.coeffs(), L - 1).coeffs();
        zs[0] += z0.root;
        auto cols = monomial_columns(best->y0, TruncatedSeries(zs, L - 1), dy, k, L);
        auto G = kernel_factor_algebraic(cols, dy, k);
        if (G && G->deg_z() > 0 && exact_divide(F, *G))
            return G;
    }
    return std::nullopt;
}

void validate_input(const BiPoly& F)
{
    if (F.is_zero())
        throw InvalidInput("the zero polynomial does not define an equation");
    if (F.deg_z() <= 0)
        throw NoDerivative();
    if (F.deg_z() == 1 && F.deg_y() == 0)
        throw TrivialLinear();
    if (auto G = find_factor(F))
        throw NotIrreducible("the polynomial is reducible; factor " + G->str(), G->str());
}

} // namespace placeode
