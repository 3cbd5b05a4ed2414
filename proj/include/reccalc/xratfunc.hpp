#pragma once

#include <ostream>
#include <string>
#include <utility>

#include "reccalc/xpoly.hpp"

namespace reccalc {

/// Rational function in x over Q, the coefficient field Q(x).
/// Canonical form: gcd(num, den) = 1, den monic, zero stored as 0/1.
/// Two equal values always have identical representations.
class XRatFunc {
public:
    XRatFunc() : num_{}, den_{Rational{1}} {}
    XRatFunc(Rational c) : num_{std::move(c)}, den_{Rational{1}} {}
    XRatFunc(XPoly num) : num_{std::move(num)}, den_{Rational{1}} {}
    /// den must be nonzero; the value is reduced to canonical form.
    XRatFunc(XPoly num, XPoly den);

    static XRatFunc x() { return XRatFunc(XPoly::x()); }

    const XPoly& num() const { return num_; }
    const XPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_polynomial() const { return den_.is_one(); }
    bool is_constant() const { return num_.is_constant() && den_.is_one(); }
    /// Sign of the leading numerator coefficient (den is monic, hence positive).
    int sign() const { return num_.is_zero() ? 0 : num_.leading().sign(); }

    XRatFunc inverse() const;
    XRatFunc derivative() const;

    XRatFunc operator-() const;
    friend XRatFunc operator+(const XRatFunc& a, const XRatFunc& b);
    friend XRatFunc operator-(const XRatFunc& a, const XRatFunc& b);
    friend XRatFunc operator*(const XRatFunc& a, const XRatFunc& b);
    friend XRatFunc operator/(const XRatFunc& a, const XRatFunc& b);
    XRatFunc& operator+=(const XRatFunc& o) { return *this = *this + o; }
    XRatFunc& operator-=(const XRatFunc& o) { return *this = *this - o; }
    XRatFunc& operator*=(const XRatFunc& o) { return *this = *this * o; }
    XRatFunc& operator/=(const XRatFunc& o) { return *this = *this / o; }

    friend bool operator==(const XRatFunc& a, const XRatFunc& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const XRatFunc& a, const XRatFunc& b) { return !(a == b); }

    /// "num", or "num/den" with parentheses where re-parsing needs them,
    /// e.g. "(x^2 - 1)/x^2" and "x/(x^2 - 1)".
    std::string to_string() const;
    friend std::ostream& operator<<(std::ostream& os, const XRatFunc& f) {
        return os << f.to_string();
    }

private:
    struct coprime_tag {};
    // num/den already coprime; only the monic normalization is applied.
    XRatFunc(XPoly num, XPoly den, coprime_tag);
    void normalize_monic();

    XPoly num_;
    XPoly den_;
};

/// Rendering of a coefficient in product position ("c*t^2", "c*f[n-1]"):
/// composite polynomials get parentheses so the text re-parses to the same
/// value under left-associative * and /.
std::string format_coefficient(const XRatFunc& c);

} // namespace reccalc
