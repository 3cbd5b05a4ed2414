#include "reccalc/json_io.hpp"

#include <stdexcept>

namespace reccalc {

namespace {

json xpoly_to_json(const XPoly& p) {
    json arr = json::array();
    for (const Rational& c : p.coeffs()) arr.push_back(c.to_string());
    return arr;
}

XPoly xpoly_from_json(const json& j) {
    if (!j.is_array()) throw std::invalid_argument("json: expected coefficient array");
    std::vector<Rational> c;
    c.reserve(j.size());
    for (const auto& e : j) {
        if (!e.is_string()) throw std::invalid_argument("json: coefficients must be strings");
        c.push_back(Rational::from_string(e.get<std::string>()));
    }
    return XPoly(std::move(c));
}

} // namespace

json xratfunc_to_json(const XRatFunc& f) {
    return json{{"num", xpoly_to_json(f.num())}, {"den", xpoly_to_json(f.den())}};
}

XRatFunc xratfunc_from_json(const json& j) {
    if (!j.is_object() || !j.contains("num") || !j.contains("den"))
        throw std::invalid_argument("json: expected {\"num\": [...], \"den\": [...]}");
    return XRatFunc(xpoly_from_json(j.at("num")), xpoly_from_json(j.at("den")));
}

json tpoly_to_json(const TPoly& p) {
    json coeffs = json::array();
    for (const XRatFunc& c : p.coeffs()) coeffs.push_back(xratfunc_to_json(c));
    return json{{"var", "t"}, {"coeffs", coeffs}};
}

TPoly tpoly_from_json(const json& j) {
    if (!j.is_object() || j.value("var", "") != "t" || !j.contains("coeffs"))
        throw std::invalid_argument("json: expected {\"var\": \"t\", \"coeffs\": [...]}");
    std::vector<XRatFunc> c;
    for (const auto& e : j.at("coeffs")) c.push_back(xratfunc_from_json(e));
    return TPoly(std::move(c));
}

json recurrence_to_json(const LinearRecurrence& rec) {
    json coeffs = json::array();
    for (const XRatFunc& c : rec.coeffs()) coeffs.push_back(xratfunc_to_json(c));
    json out{{"order", rec.order()}, {"coeffs", coeffs}};
    if (rec.has_initial_values()) {
        json init = json::array();
        for (const XRatFunc& v : rec.initial_values()) init.push_back(xratfunc_to_json(v));
        out["initial_values"] = init;
    }
    return out;
}

LinearRecurrence recurrence_from_json(const json& j) {
    if (!j.is_object() || !j.contains("order") || !j.contains("coeffs"))
        throw std::invalid_argument("json: expected {\"order\": k, \"coeffs\": [...]}");
    std::vector<XRatFunc> coeffs;
    for (const auto& e : j.at("coeffs")) coeffs.push_back(xratfunc_from_json(e));
    if (j.at("order").get<int>() != static_cast<int>(coeffs.size()))
        throw std::invalid_argument("json: order does not match the coefficient count");
    std::optional<std::vector<XRatFunc>> init;
    if (j.contains("initial_values")) {
        std::vector<XRatFunc> values;
        for (const auto& e : j.at("initial_values")) values.push_back(xratfunc_from_json(e));
        init = std::move(values);
    }
    return LinearRecurrence(std::move(coeffs), std::move(init));
}

json report_to_json(const VerificationReport& report) {
    json out{{"passed", report.passed}, {"start", report.start}, {"end", report.end}};
    if (report.first_failure) out["first_failure"] = *report.first_failure;
    if (report.residual_at_failure)
        out["residual"] = xratfunc_to_json(*report.residual_at_failure);
    return out;
}

} // namespace reccalc
