#pragma once

#include <string>

#include "reccalc/rules.hpp"

namespace reccalc {

/// Parses a recurrence spec:
///
///   f[n] = 2*x*f[n-1] - f[n-2]; f[0] = 1; f[1] = x
///
/// Statements are separated by ';' or newlines. Coefficients and initial
/// values are rational-function expressions in x built from integer
/// literals, + - * / ^ and parentheses. Lags must be >= 1; the largest lag
/// defines the order and omitted lags mean zero coefficients. Throws
/// ParseError with a 1-based line/column on any syntax or semantic error
/// (duplicate initial-value indices, initial values beyond the order,
/// vanishing deepest-lag coefficient, division by zero, ...).
LinearRecurrence parse_spec(const std::string& text);

/// Canonical one-line DSL form of the relation only: "f[n] = ...".
std::string print_relation(const LinearRecurrence& rec);

/// Canonical one-line DSL form including initial values when present.
/// Feeding the result back to parse_spec reconstructs an equal recurrence.
std::string print_recurrence(const LinearRecurrence& rec);

} // namespace reccalc
