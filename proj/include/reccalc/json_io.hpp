#pragma once

#include <json.hpp>

#include "reccalc/oracle.hpp"
#include "reccalc/rules.hpp"

namespace reccalc {

/// JSON schema (stable, round-trippable):
///  - rationals are decimal strings "p" or "p/q" (never JSON numbers, to
///    avoid integer-width limits),
///  - a coefficient in Q(x) is {"num": [..], "den": [..]} with ascending
///    x-power arrays of rational strings,
///  - a TPoly is {"var": "t", "coeffs": [c0..cdeg]} ascending in t,
///  - a recurrence is {"order": k, "coeffs": [a1..ak], "initial_values": [..]?}.
using json = nlohmann::ordered_json;

json xratfunc_to_json(const XRatFunc& f);
XRatFunc xratfunc_from_json(const json& j);

json tpoly_to_json(const TPoly& p);
TPoly tpoly_from_json(const json& j);

json recurrence_to_json(const LinearRecurrence& rec);
LinearRecurrence recurrence_from_json(const json& j);

json report_to_json(const VerificationReport& report);

} // namespace reccalc
