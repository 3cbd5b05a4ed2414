#include "reccalc/xratfunc.hpp"

#include <stdexcept>

namespace reccalc {

namespace {

// A denominator needs no parentheses only when it is a bare atom that binds
// tighter than '/': an integer constant, x, or x^k.
bool denominator_needs_parens(const XPoly& den) {
    if (den.is_constant()) return !den.coeff(0).is_integer();
    if (den.term_count() != 1) return true;
    return !den.leading().is_one();
}

} // namespace

XRatFunc::XRatFunc(XPoly num, XPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::invalid_argument("XRatFunc: zero denominator");
    if (num_.is_zero()) {
        den_ = XPoly(Rational{1});
        return;
    }
    XPoly g = XPoly::gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = XPoly::exact_div(num_, g);
        den_ = XPoly::exact_div(den_, g);
    }
    normalize_monic();
}

XRatFunc::XRatFunc(XPoly num, XPoly den, coprime_tag)
    : num_(std::move(num)), den_(std::move(den)) {
    if (num_.is_zero()) {
        den_ = XPoly(Rational{1});
        return;
    }
    normalize_monic();
}

void XRatFunc::normalize_monic() {
    const Rational lead = den_.leading();
    if (!lead.is_one()) {
        den_ = den_ / lead;
        num_ = num_ / lead;
    }
}

XRatFunc XRatFunc::inverse() const {
    if (is_zero()) throw std::invalid_argument("XRatFunc: inverse of zero");
    return XRatFunc(den_, num_, coprime_tag{});
}

XRatFunc XRatFunc::derivative() const {
    if (num_.is_zero() || is_constant()) return XRatFunc{};
    if (is_polynomial()) return XRatFunc(num_.derivative());
    // (n/d)' = (n'e - n*(d'/g)) / (d*e) with g = gcd(d, d'), e = d/g;
    // the g factor of the textbook d^2 denominator cancels up front.
    const XPoly dp = den_.derivative();
    const XPoly g = XPoly::gcd(den_, dp);
    const XPoly e = g.degree() > 0 ? XPoly::exact_div(den_, g) : den_;
    const XPoly reduced_dp = g.degree() > 0 ? XPoly::exact_div(dp, g) : dp;
    return XRatFunc(num_.derivative() * e - num_ * reduced_dp, den_ * e);
}

XRatFunc XRatFunc::operator-() const {
    XRatFunc r = *this;
    r.num_ = -r.num_;
    return r;
}

XRatFunc operator+(const XRatFunc& a, const XRatFunc& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    XPoly g = XPoly::gcd(a.den_, b.den_);
    if (g.degree() == 0) {
        // Coprime denominators: the result is already in lowest terms.
        return XRatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_,
                        XRatFunc::coprime_tag{});
    }
    XPoly da = XPoly::exact_div(a.den_, g);
    XPoly db = XPoly::exact_div(b.den_, g);
    XPoly t = a.num_ * db + b.num_ * da;
    if (t.is_zero()) return XRatFunc{};
    XPoly h = XPoly::gcd(t, g);
    if (h.degree() > 0) {
        t = XPoly::exact_div(t, h);
        g = XPoly::exact_div(g, h);
    }
    return XRatFunc(std::move(t), da * db * g, XRatFunc::coprime_tag{});
}

XRatFunc operator-(const XRatFunc& a, const XRatFunc& b) { return a + (-b); }

XRatFunc operator*(const XRatFunc& a, const XRatFunc& b) {
    if (a.is_zero() || b.is_zero()) return XRatFunc{};
    XPoly an = a.num_, bd = b.den_;
    XPoly g1 = XPoly::gcd(an, bd);
    if (g1.degree() > 0) {
        an = XPoly::exact_div(an, g1);
        bd = XPoly::exact_div(bd, g1);
    }
    XPoly bn = b.num_, ad = a.den_;
    XPoly g2 = XPoly::gcd(bn, ad);
    if (g2.degree() > 0) {
        bn = XPoly::exact_div(bn, g2);
        ad = XPoly::exact_div(ad, g2);
    }
    return XRatFunc(an * bn, ad * bd, XRatFunc::coprime_tag{});
}

XRatFunc operator/(const XRatFunc& a, const XRatFunc& b) {
    if (b.is_zero()) throw std::invalid_argument("XRatFunc: division by zero");
    return a * b.inverse();
}

std::string XRatFunc::to_string() const {
    if (is_polynomial()) return num_.to_string();
    std::string n = num_.term_count() > 1 ? "(" + num_.to_string() + ")" : num_.to_string();
    std::string d = denominator_needs_parens(den_) ? "(" + den_.to_string() + ")"
                                                   : den_.to_string();
    return n + "/" + d;
}

std::string format_coefficient(const XRatFunc& c) {
    if (c.is_polynomial() && c.num().term_count() > 1)
        return "(" + c.num().to_string() + ")";
    return c.to_string();
}

} // namespace reccalc
