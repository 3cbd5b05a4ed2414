#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "reccalc/rules.hpp"

namespace reccalc {

/// Exact symbolic terms f[0], f[1], ... of a recurrence, together with the
/// recurrence they were unrolled from and how many times they have been
/// differentiated since.
struct TermList {
    std::vector<XRatFunc> terms;
    LinearRecurrence source;
    int derivative_order = 0;

    std::size_t size() const { return terms.size(); }
};

/// Outcome of checking a candidate recurrence against a term list on an
/// inclusive index range. passed holds exactly when first_failure is absent.
struct VerificationReport {
    bool passed = true;
    int start = 0;
    int end = 0;
    std::optional<int> first_failure;
    std::optional<XRatFunc> residual_at_failure;
};

/// Exact term degrees grow linearly and reduced rational-function terms can
/// grow quadratically in representation size, so unrolls longer than this
/// require an explicit override.
inline constexpr std::size_t kDefaultTermLimit = 64;

/// Unrolls rec into its first count terms. Requires initial values and
/// count >= order; refuses count > limit.
TermList generate_terms(const LinearRecurrence& rec, std::size_t count,
                        std::size_t limit = kDefaultTermLimit);

/// Elementwise times-th derivative with respect to x.
/// The parallel front-end fans out over terms when OpenMP is enabled; the
/// serial variant is the reference implementation the tests compare against.
TermList differentiate_terms(const TermList& tl, int times = 1);
TermList differentiate_terms_serial(const TermList& tl, int times = 1);

/// Checks that candidate annihilates tl on every n in [start, end]: the
/// residual f[n] - sum of a_l * f[n-l] must be identically zero as an exact
/// rational function. Requires start >= order(candidate) and end < size(tl).
/// Indices are independent, so the front-end fans out over them when OpenMP
/// is enabled; the serial variant is the reference implementation.
VerificationReport verify_recurrence(const LinearRecurrence& candidate, const TermList& tl,
                                     int start, int end);
VerificationReport verify_recurrence_serial(const LinearRecurrence& candidate,
                                            const TermList& tl, int start, int end);

/// Named recurrence families with initial values, usable as @name in the CLI.
const std::vector<std::string>& catalog_names();
LinearRecurrence catalog(const std::string& name);

} // namespace reccalc
