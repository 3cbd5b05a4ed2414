#pragma once

#include <cstddef>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "reccalc/rational.hpp"

namespace reccalc {

/// Dense univariate polynomial in x over Rational, coefficients stored in
/// ascending powers. The zero polynomial is the empty list; otherwise the
/// last coefficient is nonzero, so degree = size - 1.
class XPoly {
public:
    XPoly() = default;
    explicit XPoly(Rational c);
    explicit XPoly(std::vector<Rational> coeffs);

    static XPoly x();
    static XPoly monomial(Rational coeff, std::size_t power);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const;
    bool is_constant() const { return c_.size() <= 1; }
    /// Coefficient of x^i (zero beyond the stored range).
    const Rational& coeff(std::size_t i) const;
    const Rational& leading() const;
    const std::vector<Rational>& coeffs() const { return c_; }
    std::size_t term_count() const;

    XPoly derivative() const;
    XPoly monic() const;
    XPoly pow(unsigned e) const;

    XPoly& operator+=(const XPoly& o);
    XPoly& operator-=(const XPoly& o);
    XPoly operator-() const;
    friend XPoly operator+(XPoly a, const XPoly& b) { a += b; return a; }
    friend XPoly operator-(XPoly a, const XPoly& b) { a -= b; return a; }
    friend XPoly operator*(const XPoly& a, const XPoly& b);
    friend XPoly operator*(const XPoly& a, const Rational& s);
    friend XPoly operator*(const Rational& s, const XPoly& a) { return a * s; }
    friend XPoly operator/(const XPoly& a, const Rational& s);

    friend bool operator==(const XPoly& a, const XPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const XPoly& a, const XPoly& b) { return !(a == b); }

    /// Quotient and remainder over the field Q; b must be nonzero.
    static std::pair<XPoly, XPoly> divrem(const XPoly& a, const XPoly& b);
    /// Quotient of an exact division; throws ExactDivisionError on nonzero remainder.
    static XPoly exact_div(const XPoly& a, const XPoly& b);
    static bool divides(const XPoly& d, const XPoly& p);

    /// Monic gcd in Q[x], computed by a subresultant remainder sequence on
    /// integer-primitive inputs. gcd(p, 0) = monic p; both zero is an error.
    static XPoly gcd(const XPoly& a, const XPoly& b);
    /// Monic lcm = a*b / gcd(a,b); zero inputs give zero.
    static XPoly lcm(const XPoly& a, const XPoly& b);

    /// "4*x^2 - 1" style, descending powers; "0" for the zero polynomial.
    std::string to_string() const;
    friend std::ostream& operator<<(std::ostream& os, const XPoly& p) {
        return os << p.to_string();
    }

private:
    void trim();

    std::vector<Rational> c_;
};

} // namespace reccalc
