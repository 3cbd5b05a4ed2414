#include "reccalc/tpoly.hpp"

#include <stdexcept>

#include "reccalc/errors.hpp"

namespace reccalc {

namespace {

const XRatFunc kZero{};

// ---- subresultant PRS over Q[x][t] ------------------------------------
// Working representation: dense coefficient vector over Q[x], ascending in t.
using ZxPoly = std::vector<XPoly>;

int zx_degree(const ZxPoly& p) { return static_cast<int>(p.size()) - 1; }

void zx_trim(ZxPoly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

ZxPoly zx_scale(const ZxPoly& p, const XPoly& s) {
    ZxPoly r(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) r[i] = p[i] * s;
    return r;
}

ZxPoly zx_exact_div_scalar(const ZxPoly& p, const XPoly& s) {
    ZxPoly r(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) r[i] = XPoly::exact_div(p[i], s);
    return r;
}

// Pseudo-remainder lc(b)^(deg a - deg b + 1) * a mod b; deg a >= deg b >= 0.
ZxPoly zx_prem(ZxPoly a, const ZxPoly& b) {
    const XPoly& lb = b.back();
    int e = zx_degree(a) - zx_degree(b) + 1;
    while (!a.empty() && zx_degree(a) >= zx_degree(b)) {
        const std::size_t k = static_cast<std::size_t>(zx_degree(a) - zx_degree(b));
        const XPoly la = a.back();
        ZxPoly next(a.size() - 1);
        for (std::size_t i = 0; i + 1 < a.size(); ++i) {
            next[i] = a[i] * lb;
            if (i >= k) next[i] -= b[i - k] * la;
        }
        a = std::move(next);
        zx_trim(a);
        --e;
    }
    if (e > 0) {
        XPoly f = lb.pow(static_cast<unsigned>(e));
        for (XPoly& c : a) c = c * f;
    }
    return a;
}

// Divide out content so coefficients are integer polynomials, collectively
// primitive, with a positive leading rational in the leading coefficient.
ZxPoly zx_primitive(ZxPoly p) {
    zx_trim(p);
    if (p.empty()) return p;
    XPoly poly_content{};
    for (const XPoly& c : p) {
        if (c.is_zero()) continue;
        poly_content = poly_content.is_zero() ? c.monic() : XPoly::gcd(poly_content, c);
        if (poly_content.degree() == 0) break;
    }
    if (poly_content.degree() > 0)
        for (XPoly& c : p) c = XPoly::exact_div(c, poly_content);
    mpz_class den_lcm = 1;
    for (const XPoly& c : p)
        for (const Rational& r : c.coeffs())
            den_lcm = lcm(den_lcm, r.denominator());
    mpz_class num_gcd = 0;
    for (const XPoly& c : p)
        for (const Rational& r : c.coeffs()) {
            if (r.is_zero()) continue;
            num_gcd = gcd(num_gcd, r.numerator() * (den_lcm / r.denominator()));
        }
    Rational scale{den_lcm, num_gcd};
    if (p.back().leading().sign() < 0) scale = -scale;
    if (!scale.is_one())
        for (XPoly& c : p) c = c * scale;
    return p;
}

ZxPoly zx_from_tpoly(const TPoly& p) {
    XPoly den_lcm{Rational{1}};
    for (const XRatFunc& c : p.coeffs())
        den_lcm = XPoly::lcm(den_lcm, c.den());
    ZxPoly r(p.coeffs().size());
    for (std::size_t i = 0; i < r.size(); ++i) {
        const XRatFunc& c = p.coeff(i);
        r[i] = c.num() * XPoly::exact_div(den_lcm, c.den());
    }
    return zx_primitive(std::move(r));
}

TPoly zx_to_tpoly(const ZxPoly& p) {
    std::vector<XRatFunc> c(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) c[i] = XRatFunc(p[i]);
    return TPoly(std::move(c));
}

// Subresultant PRS on primitive inputs with deg a >= deg b >= 1; returns an
// associate of gcd(a, b) over the fraction field Q(x).
ZxPoly zx_subresultant_prs(ZxPoly a, ZxPoly b) {
    XPoly g{Rational{1}}, h{Rational{1}};
    while (true) {
        const int delta = zx_degree(a) - zx_degree(b);
        ZxPoly r = zx_prem(a, b);
        if (r.empty()) return b;
        if (zx_degree(r) == 0) return ZxPoly{XPoly(Rational{1})};
        a = std::move(b);
        b = zx_exact_div_scalar(r, g * h.pow(static_cast<unsigned>(delta)));
        g = a.back();
        if (delta == 1)
            h = g;
        else if (delta > 1)
            h = XPoly::exact_div(g.pow(static_cast<unsigned>(delta)),
                                 h.pow(static_cast<unsigned>(delta - 1)));
    }
}

} // namespace

TPoly::TPoly(XRatFunc c) {
    if (!c.is_zero()) c_.push_back(std::move(c));
}

TPoly::TPoly(std::vector<XRatFunc> coeffs) : c_(std::move(coeffs)) { trim(); }

TPoly TPoly::t() { return monomial(XRatFunc(Rational{1}), 1); }

TPoly TPoly::monomial(XRatFunc coeff, std::size_t power) {
    TPoly p;
    if (coeff.is_zero()) return p;
    p.c_.assign(power + 1, XRatFunc{});
    p.c_[power] = std::move(coeff);
    return p;
}

const XRatFunc& TPoly::coeff(std::size_t i) const {
    return i < c_.size() ? c_[i] : kZero;
}

const XRatFunc& TPoly::leading() const {
    if (is_zero()) throw std::invalid_argument("TPoly: leading coefficient of zero");
    return c_.back();
}

bool TPoly::has_polynomial_coeffs() const {
    for (const XRatFunc& c : c_)
        if (!c.is_polynomial()) return false;
    return true;
}

std::size_t TPoly::valuation() const {
    if (is_zero()) throw std::invalid_argument("TPoly: valuation of zero");
    std::size_t i = 0;
    while (c_[i].is_zero()) ++i;
    return i;
}

void TPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

TPoly TPoly::x_derivative() const {
    std::vector<XRatFunc> d(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) d[i] = c_[i].derivative();
    return TPoly(std::move(d));
}

TPoly TPoly::monic() const {
    if (is_zero()) return *this;
    if (is_monic()) return *this;
    return *this * leading().inverse();
}

TPoly TPoly::pow(unsigned e) const {
    TPoly r = one();
    TPoly base = *this;
    while (e > 0) {
        if (e & 1u) r = r * base;
        base = base * base;
        e >>= 1u;
    }
    return r;
}

TPoly TPoly::shifted(std::size_t s) const {
    if (is_zero() || s == 0) return *this;
    TPoly r;
    r.c_.assign(c_.size() + s, XRatFunc{});
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i + s] = c_[i];
    return r;
}

TPoly TPoly::unshifted(std::size_t s) const {
    if (s == 0) return *this;
    if (is_zero()) return *this;
    if (valuation() < s)
        throw ExactDivisionError("TPoly: unshift would truncate nonzero terms");
    TPoly r;
    r.c_.assign(c_.begin() + static_cast<std::ptrdiff_t>(s), c_.end());
    return r;
}

TPoly& TPoly::operator+=(const TPoly& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

TPoly& TPoly::operator-=(const TPoly& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

TPoly TPoly::operator-() const {
    TPoly r = *this;
    for (XRatFunc& c : r.c_) c = -c;
    return r;
}

TPoly operator*(const TPoly& a, const TPoly& b) {
    if (a.is_zero() || b.is_zero()) return TPoly{};
    std::vector<XRatFunc> r(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) {
            if (b.c_[j].is_zero()) continue;
            r[i + j] += a.c_[i] * b.c_[j];
        }
    }
    return TPoly(std::move(r));
}

TPoly operator*(const TPoly& a, const XRatFunc& s) {
    if (s.is_zero()) return TPoly{};
    TPoly r = a;
    for (XRatFunc& c : r.c_) c *= s;
    return r;
}

std::pair<TPoly, TPoly> TPoly::divrem(const TPoly& a, const TPoly& b) {
    if (b.is_zero()) throw std::invalid_argument("TPoly: division by zero polynomial");
    TPoly q, r = a;
    if (a.degree() >= b.degree())
        q.c_.assign(static_cast<std::size_t>(a.degree() - b.degree()) + 1, XRatFunc{});
    const XRatFunc lb_inv = b.leading().inverse();
    while (!r.is_zero() && r.degree() >= b.degree()) {
        const std::size_t k = static_cast<std::size_t>(r.degree() - b.degree());
        XRatFunc c = r.leading() * lb_inv;
        q.c_[k] = c;
        r -= TPoly::monomial(std::move(c), k) * b;
    }
    q.trim();
    return {std::move(q), std::move(r)};
}

TPoly TPoly::exact_div(const TPoly& a, const TPoly& b) {
    auto [q, r] = divrem(a, b);
    if (!r.is_zero())
        throw ExactDivisionError("TPoly: nonzero remainder in exact division");
    return q;
}

bool TPoly::divides(const TPoly& d, const TPoly& p) {
    if (d.is_zero()) return p.is_zero();
    return divrem(p, d).second.is_zero();
}

TPoly TPoly::gcd(const TPoly& a, const TPoly& b) {
    if (a.is_zero() && b.is_zero())
        throw std::invalid_argument("TPoly: gcd of two zero polynomials");
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    if (a.degree() == 0 || b.degree() == 0) return one();
    ZxPoly pa = zx_from_tpoly(a);
    ZxPoly pb = zx_from_tpoly(b);
    if (zx_degree(pa) < zx_degree(pb)) std::swap(pa, pb);
    ZxPoly g = zx_subresultant_prs(std::move(pa), std::move(pb));
    if (zx_degree(g) == 0) return one();
    return zx_to_tpoly(zx_primitive(std::move(g))).monic();
}

TPoly TPoly::lcm(const TPoly& a, const TPoly& b) {
    if (a.is_zero() || b.is_zero())
        throw std::invalid_argument("TPoly: lcm requires nonzero inputs");
    return (exact_div(a, gcd(a, b)) * b).monic();
}

std::string TPoly::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    bool first = true;
    for (std::size_t idx = c_.size(); idx-- > 0;) {
        const XRatFunc& c = c_[idx];
        if (c.is_zero()) continue;
        const bool neg = c.sign() < 0;
        if (first) {
            if (neg) out += "-";
            first = false;
        } else {
            out += neg ? " - " : " + ";
        }
        const XRatFunc mag = neg ? -c : c;
        if (idx == 0) {
            out += format_coefficient(mag);
        } else {
            if (!mag.is_one()) out += format_coefficient(mag) + "*";
            out += "t";
            if (idx > 1) out += "^" + std::to_string(idx);
        }
    }
    return out;
}

// ---- resultant ---------------------------------------------------------

namespace {

// Multiply every coefficient of every entry by the lcm of all denominators,
// so matrix entries live in Q[x][t]. Returns the scale factor applied.
XPoly clear_denominators(std::vector<TPoly>& entries) {
    XPoly den_lcm{Rational{1}};
    for (const TPoly& e : entries)
        for (const XRatFunc& c : e.coeffs())
            den_lcm = XPoly::lcm(den_lcm, c.den());
    if (!den_lcm.is_one()) {
        const XRatFunc s{den_lcm};
        for (TPoly& e : entries) e = e * s;
    }
    return den_lcm;
}

} // namespace

TPoly resultant_z(const ZPoly& f, const ZPoly& g) {
    if (f.coeffs.empty() || g.coeffs.empty())
        throw std::invalid_argument("resultant_z: zero polynomial argument");
    if (f.coeffs.back().is_zero() || g.coeffs.back().is_zero())
        throw std::invalid_argument(
            "resultant_z: declared and actual z-degree disagree (leading coefficient is zero)");
    const std::size_t m = f.coeffs.size() - 1;
    const std::size_t n = g.coeffs.size() - 1;
    if (m == 0 && n == 0) return TPoly::one();
    if (m == 0) return f.coeffs[0].pow(static_cast<unsigned>(n));
    if (n == 0) return g.coeffs[0].pow(static_cast<unsigned>(m));

    std::vector<TPoly> fc = f.coeffs;
    std::vector<TPoly> gc = g.coeffs;
    const XPoly df = clear_denominators(fc);
    const XPoly dg = clear_denominators(gc);

    // Sylvester matrix, descending coefficients: n rows of f, m rows of g.
    const std::size_t size = m + n;
    std::vector<std::vector<TPoly>> mat(size, std::vector<TPoly>(size));
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t j = 0; j <= m; ++j) mat[r][r + j] = fc[m - j];
    for (std::size_t r = 0; r < m; ++r)
        for (std::size_t j = 0; j <= n; ++j) mat[n + r][r + j] = gc[n - j];

    // Bareiss fraction-free elimination; every division is exact in Q[x][t].
    bool negate = false;
    TPoly prev = TPoly::one();
    for (std::size_t k = 0; k + 1 < size; ++k) {
        if (mat[k][k].is_zero()) {
            std::size_t pivot = k + 1;
            while (pivot < size && mat[pivot][k].is_zero()) ++pivot;
            if (pivot == size) return TPoly{}; // singular: resultant vanishes
            std::swap(mat[k], mat[pivot]);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < size; ++i) {
            for (std::size_t j = k + 1; j < size; ++j)
                mat[i][j] = TPoly::exact_div(mat[i][j] * mat[k][k] - mat[i][k] * mat[k][j],
                                             prev);
            mat[i][k] = TPoly{};
        }
        prev = mat[k][k];
    }
    TPoly det = mat[size - 1][size - 1];
    if (negate) det = -det;

    // Undo the row scaling: det was multiplied by df^n * dg^m.
    const XRatFunc correction{XPoly(Rational{1}),
                              df.pow(static_cast<unsigned>(n)) * dg.pow(static_cast<unsigned>(m))};
    return det * correction;
}

} // namespace reccalc
