#pragma once

#include <cstddef>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "reccalc/xratfunc.hpp"

namespace reccalc {

/// Dense polynomial in the recurrence variable t over the field Q(x),
/// ascending powers. Houses characteristic polynomials and the certificate
/// polynomials of the derivative rule.
class TPoly {
public:
    TPoly() = default;
    explicit TPoly(XRatFunc c);
    explicit TPoly(std::vector<XRatFunc> coeffs);

    static TPoly t();
    static TPoly one() { return TPoly(XRatFunc(Rational{1})); }
    static TPoly monomial(XRatFunc coeff, std::size_t power);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }
    const XRatFunc& coeff(std::size_t i) const;
    const XRatFunc& leading() const;
    const std::vector<XRatFunc>& coeffs() const { return c_; }
    bool is_monic() const { return !is_zero() && leading().is_one(); }
    /// True when every coefficient lies in Q[x] (all denominators are 1).
    bool has_polynomial_coeffs() const;
    /// Index of the lowest nonzero coefficient; requires a nonzero polynomial.
    std::size_t valuation() const;

    /// Coefficient-wise d/dx; the degree in t may drop.
    TPoly x_derivative() const;
    TPoly monic() const;
    TPoly pow(unsigned e) const;
    /// Multiplication by t^s.
    TPoly shifted(std::size_t s) const;
    /// Division by t^s; all coefficients below s must vanish.
    TPoly unshifted(std::size_t s) const;

    TPoly& operator+=(const TPoly& o);
    TPoly& operator-=(const TPoly& o);
    TPoly operator-() const;
    friend TPoly operator+(TPoly a, const TPoly& b) { a += b; return a; }
    friend TPoly operator-(TPoly a, const TPoly& b) { a -= b; return a; }
    friend TPoly operator*(const TPoly& a, const TPoly& b);
    friend TPoly operator*(const TPoly& a, const XRatFunc& s);
    friend TPoly operator*(const XRatFunc& s, const TPoly& a) { return a * s; }

    friend bool operator==(const TPoly& a, const TPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const TPoly& a, const TPoly& b) { return !(a == b); }

    static std::pair<TPoly, TPoly> divrem(const TPoly& a, const TPoly& b);
    /// Quotient with zero remainder; nonzero remainder raises
    /// ExactDivisionError (an internal-invariant failure when fed gcd output).
    static TPoly exact_div(const TPoly& a, const TPoly& b);
    static bool divides(const TPoly& d, const TPoly& p);

    /// Monic gcd in Q(x)[t]. Computed by a subresultant remainder sequence
    /// over Q[x][t] after clearing denominators, so intermediate coefficients
    /// stay polynomial instead of blowing up as reduced fractions.
    static TPoly gcd(const TPoly& a, const TPoly& b);
    /// Monic lcm = a*b / gcd(a,b); both inputs must be nonzero.
    static TPoly lcm(const TPoly& a, const TPoly& b);

    /// Descending powers of t, composite coefficients parenthesized:
    /// "t^4 - 4*x*t^3 + (4*x^2 + 2)*t^2 - 4*x*t + 1".
    std::string to_string() const;
    friend std::ostream& operator<<(std::ostream& os, const TPoly& p) {
        return os << p.to_string();
    }

private:
    void trim();

    std::vector<XRatFunc> c_;
};

/// Polynomial in z with coefficients in Q(x)[t], ascending powers of z.
/// The coefficient list declares the z-degree: resultant_z rejects inputs
/// whose leading entry vanishes (declared and actual degree disagree).
struct ZPoly {
    std::vector<TPoly> coeffs;
};

/// Determinant of the Sylvester matrix of f and g in z, entries from
/// Q(x)[t], evaluated by Bareiss fraction-free elimination after clearing
/// denominators (the correction factor is tracked and divided back out).
TPoly resultant_z(const ZPoly& f, const ZPoly& g);

} // namespace reccalc
