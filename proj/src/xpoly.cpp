#include "reccalc/xpoly.hpp"

#include <stdexcept>

#include "reccalc/errors.hpp"

namespace reccalc {

namespace {

const Rational kZero{};

// Scale p so every coefficient is an integer, they are collectively coprime,
// and the leading coefficient is positive. p must be nonzero.
XPoly integer_primitive(const XPoly& p) {
    mpz_class den_lcm = 1;
    for (const Rational& c : p.coeffs())
        den_lcm = lcm(den_lcm, c.denominator());
    mpz_class num_gcd = 0;
    for (const Rational& c : p.coeffs()) {
        if (c.is_zero()) continue;
        num_gcd = gcd(num_gcd, c.numerator() * (den_lcm / c.denominator()));
    }
    Rational scale{den_lcm, num_gcd}; // num_gcd > 0 since p != 0
    if (p.leading().sign() < 0) scale = -scale;
    return p * scale;
}

// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a mod b, computed without
// leaving the coefficient ring. Requires deg a >= deg b >= 0.
XPoly prem(XPoly a, const XPoly& b) {
    const Rational& lb = b.leading();
    int e = a.degree() - b.degree() + 1;
    while (!a.is_zero() && a.degree() >= b.degree()) {
        XPoly t = XPoly::monomial(a.leading(),
                                  static_cast<std::size_t>(a.degree() - b.degree()));
        a = a * lb - t * b;
        --e;
    }
    if (e > 0) a = a * lb.pow(static_cast<unsigned long>(e));
    return a;
}

// Subresultant PRS on integer-primitive inputs with deg a >= deg b >= 1.
// Returns the last nonzero remainder (an associate of the gcd over Q).
XPoly subresultant_prs(XPoly a, XPoly b) {
    Rational g{1}, h{1};
    while (true) {
        const int delta = a.degree() - b.degree();
        XPoly r = prem(a, b);
        if (r.is_zero()) return b;
        if (r.degree() == 0) return XPoly(Rational{1});
        a = b;
        b = r / (g * h.pow(static_cast<unsigned long>(delta)));
        g = a.leading();
        if (delta == 1)
            h = g;
        else if (delta > 1)
            h = g.pow(static_cast<unsigned long>(delta)) / h.pow(static_cast<unsigned long>(delta - 1));
    }
}

} // namespace

XPoly::XPoly(Rational c) {
    if (!c.is_zero()) c_.push_back(std::move(c));
}

XPoly::XPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

XPoly XPoly::x() { return monomial(Rational{1}, 1); }

XPoly XPoly::monomial(Rational coeff, std::size_t power) {
    XPoly p;
    if (coeff.is_zero()) return p;
    p.c_.assign(power + 1, Rational{});
    p.c_[power] = std::move(coeff);
    return p;
}

bool XPoly::is_one() const { return c_.size() == 1 && c_[0].is_one(); }

const Rational& XPoly::coeff(std::size_t i) const {
    return i < c_.size() ? c_[i] : kZero;
}

const Rational& XPoly::leading() const {
    if (is_zero()) throw std::invalid_argument("XPoly: leading coefficient of zero");
    return c_.back();
}

std::size_t XPoly::term_count() const {
    std::size_t n = 0;
    for (const Rational& c : c_)
        if (!c.is_zero()) ++n;
    return n;
}

void XPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

XPoly XPoly::derivative() const {
    if (c_.size() <= 1) return XPoly{};
    std::vector<Rational> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i)
        d[i - 1] = c_[i] * Rational(static_cast<long>(i));
    return XPoly(std::move(d));
}

XPoly XPoly::monic() const {
    if (is_zero()) return *this;
    return *this / leading();
}

XPoly XPoly::pow(unsigned e) const {
    XPoly r{Rational{1}};
    XPoly base = *this;
    while (e > 0) {
        if (e & 1u) r = r * base;
        base = base * base;
        e >>= 1u;
    }
    return r;
}

XPoly& XPoly::operator+=(const XPoly& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

XPoly& XPoly::operator-=(const XPoly& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

XPoly XPoly::operator-() const {
    XPoly r = *this;
    for (Rational& c : r.c_) c = -c;
    return r;
}

XPoly operator*(const XPoly& a, const XPoly& b) {
    if (a.is_zero() || b.is_zero()) return XPoly{};
    std::vector<Rational> r(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            r[i + j] += a.c_[i] * b.c_[j];
    }
    return XPoly(std::move(r));
}

XPoly operator*(const XPoly& a, const Rational& s) {
    if (s.is_zero()) return XPoly{};
    XPoly r = a;
    for (Rational& c : r.c_) c *= s;
    return r;
}

XPoly operator/(const XPoly& a, const Rational& s) {
    if (s.is_zero()) throw std::invalid_argument("XPoly: division by zero scalar");
    XPoly r = a;
    for (Rational& c : r.c_) c /= s;
    return r;
}

std::pair<XPoly, XPoly> XPoly::divrem(const XPoly& a, const XPoly& b) {
    if (b.is_zero()) throw std::invalid_argument("XPoly: division by zero polynomial");
    XPoly q, r = a;
    if (a.degree() >= b.degree())
        q.c_.assign(static_cast<std::size_t>(a.degree() - b.degree()) + 1, Rational{});
    const Rational& lb = b.leading();
    while (!r.is_zero() && r.degree() >= b.degree()) {
        const std::size_t k = static_cast<std::size_t>(r.degree() - b.degree());
        Rational c = r.leading() / lb;
        q.c_[k] = c;
        r -= XPoly::monomial(std::move(c), k) * b;
    }
    q.trim();
    return {std::move(q), std::move(r)};
}

XPoly XPoly::exact_div(const XPoly& a, const XPoly& b) {
    auto [q, r] = divrem(a, b);
    if (!r.is_zero())
        throw ExactDivisionError("XPoly: nonzero remainder in exact division");
    return q;
}

bool XPoly::divides(const XPoly& d, const XPoly& p) {
    if (d.is_zero()) return p.is_zero();
    return divrem(p, d).second.is_zero();
}

XPoly XPoly::gcd(const XPoly& a, const XPoly& b) {
    if (a.is_zero() && b.is_zero())
        throw std::invalid_argument("XPoly: gcd of two zero polynomials");
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    if (a.degree() == 0 || b.degree() == 0) return XPoly(Rational{1});
    XPoly pa = integer_primitive(a);
    XPoly pb = integer_primitive(b);
    if (pa.degree() < pb.degree()) std::swap(pa, pb);
    XPoly g = subresultant_prs(std::move(pa), std::move(pb));
    return integer_primitive(g).monic();
}

XPoly XPoly::lcm(const XPoly& a, const XPoly& b) {
    if (a.is_zero() || b.is_zero()) return XPoly{};
    return (exact_div(a, gcd(a, b)) * b).monic();
}

std::string XPoly::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    bool first = true;
    for (std::size_t idx = c_.size(); idx-- > 0;) {
        const Rational& c = c_[idx];
        if (c.is_zero()) continue;
        const bool neg = c.sign() < 0;
        if (first) {
            if (neg) out += "-";
            first = false;
        } else {
            out += neg ? " - " : " + ";
        }
        const Rational mag = c.abs();
        if (idx == 0) {
            out += mag.to_string();
        } else {
            if (!mag.is_one()) out += mag.to_string() + "*";
            out += "x";
            if (idx > 1) out += "^" + std::to_string(idx);
        }
    }
    return out;
}

} // namespace reccalc
