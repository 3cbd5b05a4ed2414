#pragma once

#include <optional>
#include <vector>

#include "reccalc/tpoly.hpp"

namespace reccalc {

/// Homogeneous linear recurrence f[n] = a1*f[n-1] + ... + ak*f[n-k] with
/// rational-function coefficients and optional initial values f[0..k-1].
class LinearRecurrence {
public:
    /// coeffs = [a1..ak]; ak must be nonzero (otherwise the stated order is
    /// wrong). Initial values, when present, must have length exactly k.
    explicit LinearRecurrence(std::vector<XRatFunc> coeffs,
                              std::optional<std::vector<XRatFunc>> initial_values = std::nullopt);

    int order() const { return static_cast<int>(coeffs_.size()); }
    const std::vector<XRatFunc>& coeffs() const { return coeffs_; }
    bool has_initial_values() const { return initial_values_.has_value(); }
    const std::vector<XRatFunc>& initial_values() const;

    LinearRecurrence without_initial_values() const { return LinearRecurrence(coeffs_); }
    LinearRecurrence with_initial_values(std::vector<XRatFunc> init) const {
        return LinearRecurrence(coeffs_, std::move(init));
    }

    friend bool operator==(const LinearRecurrence& a, const LinearRecurrence& b) {
        return a.coeffs_ == b.coeffs_ && a.initial_values_ == b.initial_values_;
    }
    friend bool operator!=(const LinearRecurrence& a, const LinearRecurrence& b) {
        return !(a == b);
    }

private:
    std::vector<XRatFunc> coeffs_;
    std::optional<std::vector<XRatFunc>> initial_values_;
};

/// Monic characteristic polynomial t^k - a1*t^(k-1) - ... - ak, degree >= 1.
class CharPoly {
public:
    explicit CharPoly(TPoly p);

    const TPoly& poly() const { return p_; }
    int degree() const { return p_.degree(); }

    friend bool operator==(const CharPoly& a, const CharPoly& b) { return a.p_ == b.p_; }
    friend bool operator!=(const CharPoly& a, const CharPoly& b) { return !(a == b); }

private:
    TPoly p_;
};

/// Witness for the derivative rule: q = gcd(p, p'), beta = -p'/q,
/// gamma = p/q, so beta*p + gamma*p' = 0 and gamma*p is the derived
/// characteristic polynomial.
struct Certificate {
    TPoly beta;
    TPoly gamma;
    TPoly q;
};

/// Result of the derivative rule: the derived characteristic polynomial
/// p^2/gcd(p,p'), its recurrence form (no initial values: the rule
/// determines the relation, not the derived initial segment), the
/// certificate, and the first index from which the relation is guaranteed.
struct DerivedRecurrence {
    CharPoly charpoly;
    LinearRecurrence recurrence;
    Certificate certificate;
    int valid_from;

    int order() const { return recurrence.order(); }
};

/// Characteristic polynomial of a recurrence: t^k - a1*t^(k-1) - ... - ak.
CharPoly char_poly_of(const LinearRecurrence& rec);

/// Inverse of char_poly_of. The constant term of cp must be nonzero,
/// otherwise the coefficient of the deepest lag would vanish and the stated
/// order would be wrong.
LinearRecurrence recurrence_of(const CharPoly& cp);

/// Derivative rule: the derivatives of any sequence satisfying cp satisfy
/// the recurrence with characteristic polynomial p^2/gcd(p,p'), valid from
/// n = 2k. Depends only on the coefficients, never on initial values.
/// When p' = 0 (coefficients constant in x) the derivatives satisfy the
/// original recurrence, so the result is p itself with q = p.
DerivedRecurrence derivative_rule(const CharPoly& cp);

/// Applies derivative_rule m times, re-deriving the gcd at each step.
/// For m = 2 the output degree is at most 3k, since p always divides both
/// p^2 and (p^2)' = 2pp'. valid_from accumulates across steps: each step's
/// window starts one input-order later than the previous window, since the
/// derivation consumes that many instances of the previous relation.
DerivedRecurrence iterated_derivative_rule(const CharPoly& cp, int times);

/// Sum rule: elementwise sums of sequences with characteristic polynomials
/// a and b satisfy the recurrence with characteristic polynomial a*b, or
/// lcm(a, b) when sharpen is set.
CharPoly sum_rule(const CharPoly& a, const CharPoly& b, bool sharpen);

/// Product rule: elementwise (Hadamard) products satisfy a recurrence of
/// order exactly deg(a)*deg(b). Zero roots of either argument are stripped
/// as explicit powers of t first (each contributes t^(deg of the other
/// side) to the result); the nonzero-root parts combine through
/// Res_z(a0(z), z^l0 * b0(t/z)), normalized monic. The returned order is
/// the resultant bound; the minimal relation may be shorter for special
/// initial values.
CharPoly product_rule(const CharPoly& a, const CharPoly& b);

} // namespace reccalc
