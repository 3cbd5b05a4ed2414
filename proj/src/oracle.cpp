#include "reccalc/oracle.hpp"

#include <stdexcept>

#include "reccalc/errors.hpp"

namespace reccalc {

namespace {

XRatFunc residual_at(const LinearRecurrence& candidate, const std::vector<XRatFunc>& terms,
                     std::size_t n) {
    XRatFunc r = terms[n];
    const auto& coeffs = candidate.coeffs();
    for (std::size_t l = 1; l <= coeffs.size(); ++l) {
        if (coeffs[l - 1].is_zero()) continue;
        r -= coeffs[l - 1] * terms[n - l];
    }
    return r;
}

// Zero test for the residual over the lcm of the summand denominators: the
// numerator of f[n] - sum a_l*f[n-l] on that common denominator vanishes
// exactly when the residual does. Denominators stay small compared to the
// numerators of unrolled terms, so the gcds here are cheap, and the fat
// numerators are never fed to a gcd or normalized.
bool residual_is_zero(const LinearRecurrence& candidate, const std::vector<XRatFunc>& terms,
                      std::size_t n) {
    std::vector<XPoly> nums, dens;
    nums.push_back(terms[n].num());
    dens.push_back(terms[n].den());
    const auto& coeffs = candidate.coeffs();
    for (std::size_t l = 1; l <= coeffs.size(); ++l) {
        const XRatFunc& c = coeffs[l - 1];
        if (c.is_zero()) continue;
        nums.push_back(-(c.num() * terms[n - l].num()));
        dens.push_back(c.den() * terms[n - l].den());
    }
    XPoly common{Rational{1}};
    for (const XPoly& d : dens)
        if (!d.is_one()) common = XPoly::lcm(common, d);
    XPoly total;
    for (std::size_t i = 0; i < nums.size(); ++i)
        total += nums[i] * XPoly::exact_div(common, dens[i]);
    return total.is_zero();
}

XRatFunc nth_derivative(XRatFunc value, int times) {
    for (int j = 0; j < times; ++j) value = value.derivative();
    return value;
}

} // namespace

TermList generate_terms(const LinearRecurrence& rec, std::size_t count, std::size_t limit) {
    if (!rec.has_initial_values())
        throw std::invalid_argument("generate_terms: recurrence has no initial values");
    const std::size_t k = static_cast<std::size_t>(rec.order());
    if (count < k)
        throw std::invalid_argument("generate_terms: count must be at least the order");
    if (count > limit)
        throw std::invalid_argument("generate_terms: count " + std::to_string(count) +
                                    " exceeds the term limit " + std::to_string(limit) +
                                    " (raise it explicitly to override)");
    TermList tl{rec.initial_values(), rec, 0};
    tl.terms.reserve(count);
    for (std::size_t n = k; n < count; ++n) {
        XRatFunc next;
        for (std::size_t l = 1; l <= k; ++l) {
            if (rec.coeffs()[l - 1].is_zero()) continue;
            next += rec.coeffs()[l - 1] * tl.terms[n - l];
        }
        tl.terms.push_back(std::move(next));
    }
    return tl;
}

TermList differentiate_terms_serial(const TermList& tl, int times) {
    if (times < 1)
        throw std::invalid_argument("differentiate_terms: times must be >= 1");
    TermList out{std::vector<XRatFunc>(tl.terms.size()), tl.source,
                 tl.derivative_order + times};
    for (std::size_t i = 0; i < tl.terms.size(); ++i)
        out.terms[i] = nth_derivative(tl.terms[i], times);
    return out;
}

TermList differentiate_terms(const TermList& tl, int times) {
    if (times < 1)
        throw std::invalid_argument("differentiate_terms: times must be >= 1");
    TermList out{std::vector<XRatFunc>(tl.terms.size()), tl.source,
                 tl.derivative_order + times};
#ifdef _OPENMP
    const std::ptrdiff_t count = static_cast<std::ptrdiff_t>(tl.terms.size());
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t i = 0; i < count; ++i)
        out.terms[static_cast<std::size_t>(i)] =
            nth_derivative(tl.terms[static_cast<std::size_t>(i)], times);
#else
    for (std::size_t i = 0; i < tl.terms.size(); ++i)
        out.terms[i] = nth_derivative(tl.terms[i], times);
#endif
    return out;
}

namespace {

void check_verify_range(const LinearRecurrence& candidate, const TermList& tl, int start,
                        int end) {
    if (start < candidate.order())
        throw std::invalid_argument(
            "verify_recurrence: start must be at least the candidate order");
    if (end < start) throw std::invalid_argument("verify_recurrence: end precedes start");
    if (static_cast<std::size_t>(end) >= tl.terms.size())
        throw std::invalid_argument("verify_recurrence: end is beyond the term list");
}

} // namespace

VerificationReport verify_recurrence_serial(const LinearRecurrence& candidate,
                                            const TermList& tl, int start, int end) {
    check_verify_range(candidate, tl, start, end);
    VerificationReport report{true, start, end, std::nullopt, std::nullopt};
    for (int n = start; n <= end; ++n) {
        if (!residual_is_zero(candidate, tl.terms, static_cast<std::size_t>(n))) {
            report.passed = false;
            report.first_failure = n;
            report.residual_at_failure =
                residual_at(candidate, tl.terms, static_cast<std::size_t>(n));
            break;
        }
    }
    return report;
}

VerificationReport verify_recurrence(const LinearRecurrence& candidate, const TermList& tl,
                                     int start, int end) {
    check_verify_range(candidate, tl, start, end);
    VerificationReport report{true, start, end, std::nullopt, std::nullopt};
#ifdef _OPENMP
    const std::ptrdiff_t count = end - start + 1;
    std::vector<char> failed(static_cast<std::size_t>(count), 0);
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t i = 0; i < count; ++i) {
        if (!residual_is_zero(candidate, tl.terms, static_cast<std::size_t>(start + i)))
            failed[static_cast<std::size_t>(i)] = 1;
    }
    for (std::ptrdiff_t i = 0; i < count; ++i) {
        if (failed[static_cast<std::size_t>(i)]) {
            report.passed = false;
            report.first_failure = start + static_cast<int>(i);
            report.residual_at_failure =
                residual_at(candidate, tl.terms, static_cast<std::size_t>(start + i));
            break;
        }
    }
    return report;
#else
    return verify_recurrence_serial(candidate, tl, start, end);
#endif
}

namespace {

XRatFunc rf(long c) { return XRatFunc(Rational{c}); }
XRatFunc rf_x() { return XRatFunc::x(); }

LinearRecurrence make_catalog_entry(const std::string& name) {
    const XRatFunc x = rf_x();
    if (name == "chebyshev-t")
        return LinearRecurrence({rf(2) * x, rf(-1)}, {{rf(1), x}});
    if (name == "chebyshev-u")
        return LinearRecurrence({rf(2) * x, rf(-1)}, {{rf(1), rf(2) * x}});
    if (name == "fibonacci-poly")
        return LinearRecurrence({x, rf(1)}, {{rf(1), x}});
    if (name == "pell-poly")
        return LinearRecurrence({rf(2) * x, rf(1)}, {{rf(1), rf(2) * x}});
    if (name == "power-x")
        return LinearRecurrence({x}, {{rf(1)}});
    if (name == "paper-ex3") {
        // f[n] = (x+1) f[n-1] - x f[n-2]; the derived relation does not
        // depend on initial values, so [1, x] is an arbitrary default.
        return LinearRecurrence({x + rf(1), -x}, {{rf(1), x}});
    }
    std::string known;
    for (const std::string& n : catalog_names()) {
        if (!known.empty()) known += ", ";
        known += n;
    }
    throw NotFoundError("unknown catalog entry \"" + name + "\" (valid names: " + known + ")");
}

} // namespace

const std::vector<std::string>& catalog_names() {
    static const std::vector<std::string> names = {
        "chebyshev-t", "chebyshev-u", "fibonacci-poly", "pell-poly", "power-x", "paper-ex3",
    };
    return names;
}

LinearRecurrence catalog(const std::string& name) { return make_catalog_entry(name); }

} // namespace reccalc
