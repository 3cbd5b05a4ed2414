#include "reccalc/cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "reccalc/dsl.hpp"
#include "reccalc/errors.hpp"
#include "reccalc/json_io.hpp"
#include "reccalc/oracle.hpp"
#include "reccalc/rules.hpp"

namespace reccalc {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitVerificationFailed = 2;
constexpr int kExitInternal = 3;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot read file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

LinearRecurrence parse_with_origin(const std::string& text, const std::string& origin) {
    try {
        return parse_spec(text);
    } catch (const ParseError& e) {
        throw std::invalid_argument(origin + ":" + std::to_string(e.line()) + ":" +
                                    std::to_string(e.column()) + ": error: " + e.message());
    }
}

/// Resolves a spec argument: catalog reference @name or a file path.
LinearRecurrence load_spec(const std::string& arg) {
    if (!arg.empty() && arg[0] == '@') return catalog(arg.substr(1));
    return parse_with_origin(read_file(arg), arg);
}

/// Resolves a candidate argument: @name, an existing file, or inline DSL text.
LinearRecurrence load_candidate(const std::string& arg) {
    if (!arg.empty() && arg[0] == '@') return catalog(arg.substr(1));
    std::error_code ec;
    if (std::filesystem::exists(arg, ec)) return parse_with_origin(read_file(arg), arg);
    return parse_with_origin(arg, "<candidate>");
}

std::string term_label(int derivative_order, std::size_t index) {
    std::string name = "f";
    if (derivative_order == 1)
        name += "'";
    else if (derivative_order == 2)
        name += "''";
    else if (derivative_order > 2)
        name += "^(" + std::to_string(derivative_order) + ")";
    return name + "[" + std::to_string(index) + "]";
}

TermList elementwise_terms(const TermList& a, const TermList& b,
                           const LinearRecurrence& descriptor, bool product) {
    TermList out{std::vector<XRatFunc>(std::min(a.size(), b.size())), descriptor, 0};
    for (std::size_t i = 0; i < out.terms.size(); ++i)
        out.terms[i] = product ? a.terms[i] * b.terms[i] : a.terms[i] + b.terms[i];
    return out;
}

/// Prints the oracle outcome; also probes the pre-guarantee window
/// [order, start) and reports it informatively, never as a failure.
int report_verification(const LinearRecurrence& candidate, const TermList& tl, int start,
                        int end, std::ostream& out, json* js) {
    if (start > static_cast<int>(candidate.order())) {
        VerificationReport early =
            verify_recurrence(candidate, tl, candidate.order(), start - 1);
        if (early.passed)
            out << "note: relation also holds for n = " << early.start << ".." << early.end
                << " (before the guaranteed range)\n";
        else
            out << "note: relation first fails at n = " << *early.first_failure
                << " (before the guaranteed range; this is allowed)\n";
    }
    VerificationReport report = verify_recurrence(candidate, tl, start, end);
    if (js) (*js)["verification"] = report_to_json(report);
    if (report.passed) {
        out << "verified: n = " << start << ".." << end << "\n";
        return kExitOk;
    }
    out << "verification FAILED at n = " << *report.first_failure
        << ": residual = " << report.residual_at_failure->to_string() << "\n";
    return kExitVerificationFailed;
}

struct DeriveStep {
    TPoly p;
    TPoly p_prime;
    DerivedRecurrence result;
};

// A --verify request: absent, an explicit end index, or kDefaultHorizon for a
// bare --verify (checked window defaults to [start, start + 12]).
constexpr int kDefaultHorizon = -1;
using VerifyRequest = std::optional<int>;

int resolve_verify_end(const VerifyRequest& request, int start) {
    return *request == kDefaultHorizon ? start + 12 : *request;
}

int cmd_derive(const std::string& spec, int times, const VerifyRequest& verify,
               std::size_t max_terms, bool as_json, std::ostream& out) {
    LinearRecurrence rec = load_spec(spec);
    CharPoly cp = char_poly_of(rec);

    std::vector<DeriveStep> steps;
    CharPoly current = cp;
    int valid_from = 0;
    for (int i = 0; i < times; ++i) {
        const int input_order = current.degree();
        DerivedRecurrence d = derivative_rule(current);
        valid_from = i == 0 ? d.valid_from : valid_from + input_order;
        steps.push_back(DeriveStep{current.poly(), current.poly().x_derivative(), d});
        current = steps.back().result.charpoly;
    }
    DerivedRecurrence final = steps.back().result;
    final.valid_from = valid_from; // windows compose across iterated steps

    json js;
    if (as_json) {
        js["input"] = recurrence_to_json(rec);
        js["p"] = tpoly_to_json(cp.poly());
        js["steps"] = json::array();
        for (const DeriveStep& s : steps)
            js["steps"].push_back(json{{"p_prime", tpoly_to_json(s.p_prime)},
                                       {"gcd", tpoly_to_json(s.result.certificate.q)},
                                       {"charpoly", tpoly_to_json(s.result.charpoly.poly())}});
        js["derived"] = json{
            {"charpoly", tpoly_to_json(final.charpoly.poly())},
            {"order", final.order()},
            {"recurrence", recurrence_to_json(final.recurrence)},
            {"certificate", json{{"beta", tpoly_to_json(final.certificate.beta)},
                                 {"gamma", tpoly_to_json(final.certificate.gamma)},
                                 {"q", tpoly_to_json(final.certificate.q)}}},
            {"valid_from", final.valid_from},
        };
    } else {
        out << "input: " << print_relation(rec) << "\n";
        out << "p: " << cp.poly() << "\n";
        if (times == 1) {
            out << "p': " << steps[0].p_prime << "\n";
            out << "gcd(p, p'): " << steps[0].result.certificate.q << "\n";
        } else {
            for (std::size_t i = 0; i < steps.size(); ++i)
                out << "step " << i + 1 << ": p' = " << steps[i].p_prime
                    << "; gcd(p, p') = " << steps[i].result.certificate.q
                    << "; charpoly = " << steps[i].result.charpoly.poly() << "\n";
        }
        out << "derived charpoly: " << final.charpoly.poly() << "\n";
        out << "derived order: " << final.order() << "\n";
        out << "derived recurrence: " << print_relation(final.recurrence) << "\n";
        out << "certificate beta: " << final.certificate.beta << "\n";
        out << "certificate gamma: " << final.certificate.gamma << "\n";
        out << "valid from: n >= " << final.valid_from << "\n";
    }

    int exit_code = kExitOk;
    if (verify) {
        const int verify_end = resolve_verify_end(verify, final.valid_from);
        if (verify_end < final.valid_from)
            throw std::invalid_argument("--verify end must be at least valid_from (" +
                                        std::to_string(final.valid_from) + ")");
        TermList terms =
            generate_terms(rec, static_cast<std::size_t>(verify_end) + 1, max_terms);
        TermList derived_terms = differentiate_terms(terms, times);
        if (as_json) {
            std::ostringstream sink;
            exit_code = report_verification(final.recurrence, derived_terms,
                                            final.valid_from, verify_end, sink, &js);
        } else {
            exit_code = report_verification(final.recurrence, derived_terms,
                                            final.valid_from, verify_end, out, nullptr);
        }
    }
    if (as_json) out << js.dump(2) << "\n";
    return exit_code;
}

int cmd_charpoly(const std::string& spec, bool as_json, std::ostream& out) {
    LinearRecurrence rec = load_spec(spec);
    CharPoly cp = char_poly_of(rec);
    if (as_json) {
        json js{{"recurrence", recurrence_to_json(rec)},
                {"charpoly", tpoly_to_json(cp.poly())}};
        out << js.dump(2) << "\n";
    } else {
        out << "order: " << rec.order() << "\n";
        out << "recurrence: " << print_recurrence(rec) << "\n";
        out << "charpoly: " << cp.poly() << "\n";
    }
    return kExitOk;
}

int cmd_sum(const std::string& spec_a, const std::string& spec_b, bool use_lcm,
            const VerifyRequest& verify, std::size_t max_terms, bool as_json,
            std::ostream& out) {
    LinearRecurrence ra = load_spec(spec_a);
    LinearRecurrence rb = load_spec(spec_b);
    CharPoly pa = char_poly_of(ra);
    CharPoly pb = char_poly_of(rb);
    CharPoly ps = sum_rule(pa, pb, use_lcm);
    LinearRecurrence rs = recurrence_of(ps);

    json js;
    if (as_json) {
        js["a"] = recurrence_to_json(ra);
        js["b"] = recurrence_to_json(rb);
        js["p_a"] = tpoly_to_json(pa.poly());
        js["p_b"] = tpoly_to_json(pb.poly());
        js["mode"] = use_lcm ? "lcm" : "product";
        js["sum_charpoly"] = tpoly_to_json(ps.poly());
        js["sum_order"] = rs.order();
        js["sum_recurrence"] = recurrence_to_json(rs);
    } else {
        out << "A: " << print_relation(ra) << "\n";
        out << "p_a: " << pa.poly() << "\n";
        out << "B: " << print_relation(rb) << "\n";
        out << "p_b: " << pb.poly() << "\n";
        out << "sum charpoly (" << (use_lcm ? "lcm" : "product") << "): " << ps.poly()
            << "\n";
        out << "sum order: " << rs.order() << "\n";
        out << "sum recurrence: " << print_relation(rs) << "\n";
    }

    int exit_code = kExitOk;
    if (verify) {
        const int verify_end = resolve_verify_end(verify, rs.order());
        if (verify_end < rs.order())
            throw std::invalid_argument("--verify end must be at least the sum order (" +
                                        std::to_string(rs.order()) + ")");
        const std::size_t count = static_cast<std::size_t>(verify_end) + 1;
        TermList ta = generate_terms(ra, count, max_terms);
        TermList tb = generate_terms(rb, count, max_terms);
        TermList sums = elementwise_terms(ta, tb, rs, /*product=*/false);
        std::ostringstream sink;
        exit_code = report_verification(rs, sums, rs.order(), verify_end,
                                        as_json ? sink : out, as_json ? &js : nullptr);
    }
    if (as_json) out << js.dump(2) << "\n";
    return exit_code;
}

int cmd_product(const std::string& spec_a, const std::string& spec_b,
                const VerifyRequest& verify, std::size_t max_terms, bool as_json,
                std::ostream& out) {
    LinearRecurrence ra = load_spec(spec_a);
    LinearRecurrence rb = load_spec(spec_b);
    CharPoly pa = char_poly_of(ra);
    CharPoly pb = char_poly_of(rb);
    CharPoly pp = product_rule(pa, pb);
    LinearRecurrence rp = recurrence_of(pp);

    json js;
    if (as_json) {
        js["a"] = recurrence_to_json(ra);
        js["b"] = recurrence_to_json(rb);
        js["p_a"] = tpoly_to_json(pa.poly());
        js["p_b"] = tpoly_to_json(pb.poly());
        js["product_charpoly"] = tpoly_to_json(pp.poly());
        js["product_order"] = rp.order();
        js["product_recurrence"] = recurrence_to_json(rp);
    } else {
        out << "A: " << print_relation(ra) << "\n";
        out << "p_a: " << pa.poly() << "\n";
        out << "B: " << print_relation(rb) << "\n";
        out << "p_b: " << pb.poly() << "\n";
        out << "product charpoly: " << pp.poly() << "\n";
        out << "product order: " << rp.order() << "\n";
        out << "product recurrence: " << print_relation(rp) << "\n";
    }

    int exit_code = kExitOk;
    if (verify) {
        const int verify_end = resolve_verify_end(verify, rp.order());
        if (verify_end < rp.order())
            throw std::invalid_argument("--verify end must be at least the product order (" +
                                        std::to_string(rp.order()) + ")");
        const std::size_t count = static_cast<std::size_t>(verify_end) + 1;
        TermList ta = generate_terms(ra, count, max_terms);
        TermList tb = generate_terms(rb, count, max_terms);
        TermList products = elementwise_terms(ta, tb, rp, /*product=*/true);
        std::ostringstream sink;
        exit_code = report_verification(rp, products, rp.order(), verify_end,
                                        as_json ? sink : out, as_json ? &js : nullptr);
    }
    if (as_json) out << js.dump(2) << "\n";
    return exit_code;
}

int cmd_terms(const std::string& spec, std::size_t count, int diff, std::size_t max_terms,
              bool as_json, std::ostream& out) {
    LinearRecurrence rec = load_spec(spec);
    TermList tl = generate_terms(rec, count, max_terms);
    if (diff > 0) tl = differentiate_terms(tl, diff);
    if (as_json) {
        json terms = json::array();
        for (const XRatFunc& v : tl.terms) terms.push_back(xratfunc_to_json(v));
        json js{{"recurrence", recurrence_to_json(rec)},
                {"derivative_order", tl.derivative_order},
                {"terms", terms}};
        out << js.dump(2) << "\n";
    } else {
        for (std::size_t i = 0; i < tl.terms.size(); ++i)
            out << term_label(tl.derivative_order, i) << " = " << tl.terms[i] << "\n";
    }
    return kExitOk;
}

int cmd_verify(const std::string& spec, const std::string& candidate_arg, int from, int to,
               int diff, std::size_t max_terms, bool as_json, std::ostream& out) {
    LinearRecurrence rec = load_spec(spec);
    LinearRecurrence candidate = load_candidate(candidate_arg);
    if (to < from) throw std::invalid_argument("--to must be at least --from");
    TermList tl = generate_terms(rec, static_cast<std::size_t>(to) + 1, max_terms);
    if (diff > 0) tl = differentiate_terms(tl, diff);
    VerificationReport report =
        verify_recurrence(candidate.without_initial_values(), tl, from, to);
    if (as_json) {
        json js{{"candidate", recurrence_to_json(candidate.without_initial_values())},
                {"report", report_to_json(report)}};
        out << js.dump(2) << "\n";
    } else {
        out << "candidate: " << print_relation(candidate) << "\n";
        if (report.passed)
            out << "verified: n = " << from << ".." << to << "\n";
        else
            out << "verification FAILED at n = " << *report.first_failure
                << ": residual = " << report.residual_at_failure->to_string() << "\n";
    }
    return report.passed ? kExitOk : kExitVerificationFailed;
}

int cmd_catalog(const std::string& name, bool as_json, std::ostream& out) {
    if (name.empty()) {
        if (as_json) {
            json js = json::array();
            for (const std::string& n : catalog_names()) js.push_back(n);
            out << js.dump(2) << "\n";
        } else {
            for (const std::string& n : catalog_names()) out << n << "\n";
        }
        return kExitOk;
    }
    LinearRecurrence rec = catalog(name);
    if (as_json) {
        json js{{"name", name}, {"recurrence", recurrence_to_json(rec)}};
        out << js.dump(2) << "\n";
    } else {
        out << name << ": " << print_recurrence(rec) << "\n";
    }
    return kExitOk;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact calculus of linear recurrence relations with function coefficients"};
    app.name("reccalc");
    app.require_subcommand(1);

    // Arguments shared across subcommands. A spec is a file path or @name
    // for a catalog entry; see `reccalc catalog`.
    std::string spec, spec_b, candidate, catalog_name;
    int times = 1, verify_end = 0, diff = 0, from = 0, to = 0;
    std::size_t count = 0, max_terms = kDefaultTermLimit;
    bool use_lcm = false;

    auto* charpoly_cmd =
        app.add_subcommand("charpoly", "print the characteristic polynomial of a recurrence");
    charpoly_cmd->add_option("spec", spec, "recurrence spec file or @name")->required();
    bool charpoly_json = false;
    charpoly_cmd->add_flag("--json", charpoly_json, "emit JSON");

    auto* derive_cmd = app.add_subcommand(
        "derive", "derive the recurrence satisfied by the sequence of derivatives");
    derive_cmd->add_option("spec", spec, "recurrence spec file or @name")->required();
    derive_cmd->add_option("--times", times, "apply the derivative rule m times")
        ->check(CLI::PositiveNumber);
    auto* derive_verify =
        derive_cmd
            ->add_option("--verify", verify_end,
                         "unroll terms and verify the derived relation up to index N "
                         "(bare --verify checks valid_from..valid_from+12)")
            ->expected(0, 1);
    derive_cmd->add_option("--max-terms", max_terms, "override the 64-term unroll guard");
    bool derive_json = false;
    derive_cmd->add_flag("--json", derive_json, "emit JSON");

    auto* sum_cmd =
        app.add_subcommand("sum", "recurrence satisfied by elementwise sums of two sequences");
    sum_cmd->add_option("specA", spec, "first recurrence spec file or @name")->required();
    sum_cmd->add_option("specB", spec_b, "second recurrence spec file or @name")->required();
    sum_cmd->add_flag("--lcm", use_lcm, "sharpen the product of characteristic polynomials to their lcm");
    auto* sum_verify = sum_cmd
                           ->add_option("--verify", verify_end,
                                        "verify against elementwise sums up to index N")
                           ->expected(0, 1);
    sum_cmd->add_option("--max-terms", max_terms, "override the 64-term unroll guard");
    bool sum_json = false;
    sum_cmd->add_flag("--json", sum_json, "emit JSON");

    auto* product_cmd = app.add_subcommand(
        "product", "recurrence satisfied by elementwise products of two sequences");
    product_cmd->add_option("specA", spec, "first recurrence spec file or @name")->required();
    product_cmd->add_option("specB", spec_b, "second recurrence spec file or @name")->required();
    auto* product_verify =
        product_cmd
            ->add_option("--verify", verify_end,
                         "verify against elementwise products up to index N")
            ->expected(0, 1);
    product_cmd->add_option("--max-terms", max_terms, "override the 64-term unroll guard");
    bool product_json = false;
    product_cmd->add_flag("--json", product_json, "emit JSON");

    auto* terms_cmd = app.add_subcommand("terms", "unroll a recurrence into exact terms");
    terms_cmd->add_option("spec", spec, "recurrence spec file or @name")->required();
    terms_cmd->add_option("--count", count, "number of terms to generate")->required();
    terms_cmd->add_option("--diff", diff, "differentiate the terms m times")
        ->check(CLI::NonNegativeNumber);
    terms_cmd->add_option("--max-terms", max_terms, "override the 64-term unroll guard");
    bool terms_json = false;
    terms_cmd->add_flag("--json", terms_json, "emit JSON");

    auto* verify_cmd = app.add_subcommand(
        "verify", "check that a candidate recurrence annihilates the terms of a sequence");
    verify_cmd->add_option("spec", spec, "recurrence spec file or @name")->required();
    verify_cmd
        ->add_option("--candidate", candidate,
                     "candidate recurrence: file, @name, or inline \"f[n] = ...\"")
        ->required();
    verify_cmd->add_option("--from", from, "first index to check")->required();
    verify_cmd->add_option("--to", to, "last index to check")->required();
    verify_cmd->add_option("--diff", diff, "differentiate the terms m times before checking")
        ->check(CLI::NonNegativeNumber);
    verify_cmd->add_option("--max-terms", max_terms, "override the 64-term unroll guard");
    bool verify_json = false;
    verify_cmd->add_flag("--json", verify_json, "emit JSON");

    auto* catalog_cmd =
        app.add_subcommand("catalog", "list built-in recurrence families or show one");
    catalog_cmd->add_option("name", catalog_name, "catalog entry name");
    bool catalog_json = false;
    catalog_cmd->add_flag("--json", catalog_json, "emit JSON");

    std::vector<const char*> argv;
    argv.push_back("reccalc");
    for (const std::string& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        app.exit(e, out, err);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitUsage;
    }

    auto verify_request = [&verify_end](const CLI::Option* opt) -> VerifyRequest {
        if (opt->count() == 0) return std::nullopt;
        if (opt->results().front().empty()) return kDefaultHorizon;
        return verify_end;
    };

    try {
        if (*charpoly_cmd) return cmd_charpoly(spec, charpoly_json, out);
        if (*derive_cmd)
            return cmd_derive(spec, times, verify_request(derive_verify), max_terms,
                              derive_json, out);
        if (*sum_cmd)
            return cmd_sum(spec, spec_b, use_lcm, verify_request(sum_verify), max_terms,
                           sum_json, out);
        if (*product_cmd)
            return cmd_product(spec, spec_b, verify_request(product_verify), max_terms,
                               product_json, out);
        if (*terms_cmd) return cmd_terms(spec, count, diff, max_terms, terms_json, out);
        if (*verify_cmd)
            return cmd_verify(spec, candidate, from, to, diff, max_terms, verify_json, out);
        if (*catalog_cmd) return cmd_catalog(catalog_name, catalog_json, out);
        err << "error: no subcommand selected\n";
        return kExitUsage;
    } catch (const ExactDivisionError& e) {
        err << "internal error: " << e.what() << "\n";
        return kExitInternal;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::logic_error& e) {
        err << "internal error: " << e.what() << "\n";
        return kExitInternal;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
}

} // namespace reccalc
