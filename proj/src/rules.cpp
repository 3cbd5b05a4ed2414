#include "reccalc/rules.hpp"

#include <stdexcept>

#include "reccalc/errors.hpp"

namespace reccalc {

LinearRecurrence::LinearRecurrence(std::vector<XRatFunc> coeffs,
                                   std::optional<std::vector<XRatFunc>> initial_values)
    : coeffs_(std::move(coeffs)), initial_values_(std::move(initial_values)) {
    if (coeffs_.empty())
        throw std::invalid_argument("LinearRecurrence: order must be at least 1");
    if (coeffs_.back().is_zero())
        throw std::invalid_argument(
            "LinearRecurrence: coefficient of the deepest lag is zero; stated order is wrong");
    if (initial_values_ && initial_values_->size() != coeffs_.size())
        throw std::invalid_argument("LinearRecurrence: initial values must have length k");
}

const std::vector<XRatFunc>& LinearRecurrence::initial_values() const {
    if (!initial_values_)
        throw std::invalid_argument("LinearRecurrence: no initial values present");
    return *initial_values_;
}

CharPoly::CharPoly(TPoly p) : p_(std::move(p)) {
    if (p_.degree() < 1)
        throw std::invalid_argument("CharPoly: degree must be at least 1");
    if (!p_.is_monic())
        throw std::invalid_argument("CharPoly: polynomial must be monic");
}

CharPoly char_poly_of(const LinearRecurrence& rec) {
    const std::size_t k = static_cast<std::size_t>(rec.order());
    std::vector<XRatFunc> c(k + 1);
    c[k] = XRatFunc(Rational{1});
    for (std::size_t l = 1; l <= k; ++l) c[k - l] = -rec.coeffs()[l - 1];
    return CharPoly(TPoly(std::move(c)));
}

LinearRecurrence recurrence_of(const CharPoly& cp) {
    const std::size_t k = static_cast<std::size_t>(cp.degree());
    if (cp.poly().coeff(0).is_zero())
        throw std::invalid_argument(
            "recurrence_of: zero constant term; the deepest-lag coefficient would vanish");
    std::vector<XRatFunc> coeffs(k);
    for (std::size_t l = 1; l <= k; ++l) coeffs[l - 1] = -cp.poly().coeff(k - l);
    return LinearRecurrence(std::move(coeffs));
}

DerivedRecurrence derivative_rule(const CharPoly& cp) {
    const TPoly& p = cp.poly();
    const int k = cp.degree();
    const TPoly pprime = p.x_derivative();

    TPoly q, beta, gamma, derived;
    if (pprime.is_zero()) {
        // Constant coefficients: differentiating the recurrence termwise
        // shows the derivatives satisfy the original relation.
        q = p;
        beta = TPoly{};
        gamma = TPoly::one();
        derived = p;
    } else {
        q = TPoly::gcd(p, pprime);
        beta = -TPoly::exact_div(pprime, q);
        gamma = TPoly::exact_div(p, q);
        derived = gamma * p;
    }
    CharPoly charpoly{derived};
    LinearRecurrence rec = recurrence_of(charpoly);
    return DerivedRecurrence{std::move(charpoly), std::move(rec),
                             Certificate{std::move(beta), std::move(gamma), std::move(q)},
                             2 * k};
}

DerivedRecurrence iterated_derivative_rule(const CharPoly& cp, int times) {
    if (times < 1)
        throw std::invalid_argument("iterated_derivative_rule: times must be >= 1");
    DerivedRecurrence result = derivative_rule(cp);
    // Guarantees compose: step i+1 uses the step-i relation at k_i earlier
    // indices, so its window starts k_i after the step-i window. For a plain
    // recurrence (valid from k) this reduces to the single-rule 2k.
    int valid = result.valid_from;
    for (int i = 1; i < times; ++i) {
        const int input_order = result.charpoly.degree();
        result = derivative_rule(result.charpoly);
        valid += input_order;
        result.valid_from = valid;
    }
    return result;
}

CharPoly sum_rule(const CharPoly& a, const CharPoly& b, bool sharpen) {
    if (sharpen) return CharPoly(TPoly::lcm(a.poly(), b.poly()));
    return CharPoly(a.poly() * b.poly());
}

CharPoly product_rule(const CharPoly& a, const CharPoly& b) {
    const std::size_t k = static_cast<std::size_t>(a.degree());
    const std::size_t l = static_cast<std::size_t>(b.degree());

    // Strip zero roots: a = t^ma * a0 with a0(0) != 0, likewise b. Each zero
    // root paired with any root of the other side contributes a zero root of
    // the product, i.e. a plain power of t in the result.
    const std::size_t ma = a.poly().valuation();
    const std::size_t mb = b.poly().valuation();
    const TPoly a0 = a.poly().unshifted(ma);
    const TPoly b0 = b.poly().unshifted(mb);
    const std::size_t k0 = static_cast<std::size_t>(a0.degree());
    const std::size_t l0 = static_cast<std::size_t>(b0.degree());
    const std::size_t zero_power = k * l - k0 * l0;

    if (k0 == 0 || l0 == 0)
        return CharPoly(TPoly::one().shifted(zero_power));

    // f(z) = a0(z); g(z) = z^l0 * b0(t/z), whose z^i coefficient is
    // b0[l0-i] * t^(l0-i). Res_z(f, g) has the pairwise root products of a0
    // and b0 as its roots in t.
    ZPoly f, g;
    f.coeffs.reserve(k0 + 1);
    for (std::size_t i = 0; i <= k0; ++i) f.coeffs.push_back(TPoly(a0.coeff(i)));
    g.coeffs.reserve(l0 + 1);
    for (std::size_t i = 0; i <= l0; ++i)
        g.coeffs.push_back(TPoly::monomial(b0.coeff(l0 - i), l0 - i));

    TPoly res = resultant_z(f, g).monic();
    if (res.degree() != static_cast<int>(k0 * l0))
        throw ExactDivisionError("product_rule: resultant degree dropped below k*l");
    return CharPoly(res.shifted(zero_power));
}

} // namespace reccalc
