// Acceptance suite: every check is an exact symbolic equality (tolerance
// zero). Prints one PASS/FAIL line per criterion and exits nonzero if any
// criterion fails.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "../unit/gen.hpp"
#include "reccalc/cli.hpp"
#include "reccalc/dsl.hpp"
#include "reccalc/errors.hpp"
#include "reccalc/json_io.hpp"
#include "reccalc/oracle.hpp"

using namespace reccalc;

namespace {

XRatFunc rc(long v) { return XRatFunc(Rational{v}); }
XRatFunc rx() { return XRatFunc::x(); }

struct Check {
    bool ok = true;
    std::string detail;

    void require(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            detail = what;
        }
    }
};

struct CliRun {
    int exit_code;
    std::string out;
};

CliRun cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str()};
}

// --- criterion 1: Chebyshev derivative rule --------------------------------
void criterion1(Check& c) {
    const auto t0 = std::chrono::steady_clock::now();

    CliRun r = cli({"derive", "@chebyshev-t", "--verify", "16"});
    c.require(r.exit_code == 0, "derive @chebyshev-t exited nonzero");
    c.require(r.out.find("t^4 - 4*x*t^3 + (4*x^2 + 2)*t^2 - 4*x*t + 1") != std::string::npos,
              "p^2 text not reproduced");

    DerivedRecurrence d = derivative_rule(char_poly_of(catalog("chebyshev-t")));
    TPoly p2({rc(1), rc(-4) * rx(), rc(4) * rx() * rx() + rc(2), rc(-4) * rx(), rc(1)});
    c.require(d.charpoly.poly() == p2, "derived charpoly != p^2");
    const std::vector<XRatFunc> want = {rc(4) * rx(), -(rc(4) * rx() * rx() + rc(2)),
                                        rc(4) * rx(), rc(-1)};
    c.require(d.recurrence.coeffs() == want, "derived coefficients wrong");

    for (const char* name : {"chebyshev-t", "chebyshev-u"}) {
        TermList dt = differentiate_terms(generate_terms(catalog(name), 17), 1);
        VerificationReport rep = verify_recurrence(d.recurrence, dt, 4, 16);
        c.require(rep.passed, std::string("oracle failed on derivatives of ") + name);
    }

    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    c.require(secs < 1.0, "runtime bound 1 s exceeded");
}

// --- criterion 2: Example 3 (constant root) ---------------------------------
void criterion2(Check& c) {
    LinearRecurrence rec = parse_spec("f[n] = (x+1)*f[n-1] - x*f[n-2]");
    DerivedRecurrence d = derivative_rule(char_poly_of(rec));
    TPoly expected({-(rx() * rx()), rx() * rx() + rc(2) * rx(), -(rc(2) * rx() + rc(1)), rc(1)});
    c.require(d.order() == 3, "derived order != 3");
    c.require(d.charpoly.poly() == expected, "derived charpoly wrong");
    c.require(d.certificate.q == TPoly({rc(-1), rc(1)}), "gcd(p, p') != t - 1");

    CliRun r = cli({"derive", "@paper-ex3"});
    c.require(r.exit_code == 0, "derive @paper-ex3 exited nonzero");
    c.require(r.out.find("gcd(p, p'): t - 1") != std::string::npos,
              "gcd not surfaced in the report");
    c.require(r.out.find("derived order: 3") != std::string::npos, "order not reported as 3");
}

// --- criterion 3: Example 2 chain -------------------------------------------
void criterion3(Check& c) {
    TPoly tmx({-rx(), rc(1)});
    CharPoly p{tmx};
    DerivedRecurrence d1 = derivative_rule(p);
    c.require(d1.charpoly.poly() == tmx * tmx, "derivative_rule(t-x) != (t-x)^2");
    DerivedRecurrence d2 = iterated_derivative_rule(p, 2);
    c.require(d2.charpoly.poly() == tmx.pow(3), "iterated m=2 != (t-x)^3");

    TermList terms = generate_terms(catalog("power-x"), 20);
    TermList first = differentiate_terms(terms, 1);   // n x^(n-1)
    TermList second = differentiate_terms(terms, 2);  // n(n-1) x^(n-2)
    c.require(verify_recurrence(d1.recurrence, first, d1.valid_from, 18).passed,
              "first-derivative oracle failed");
    c.require(verify_recurrence(d2.recurrence, second, d2.valid_from, 18).passed,
              "second-derivative oracle failed");
}

// --- criterion 4: the T'/U' identities ---------------------------------------
void criterion4(Check& c) {
    TermList t = generate_terms(catalog("chebyshev-t"), 14);
    TermList u = generate_terms(catalog("chebyshev-u"), 14);
    TermList dt = differentiate_terms(t, 1);
    TermList du = differentiate_terms(u, 1);
    for (int n = 1; n <= 12; ++n)
        c.require(dt.terms[size_t(n)] - rc(n) * u.terms[size_t(n - 1)] == XRatFunc{},
                  "T'_n != n U_(n-1) at n = " + std::to_string(n));
    const XRatFunc denom = rx() * rx() - rc(1);
    for (int n = 1; n <= 10; ++n) {
        XRatFunc rhs =
            (rc(n + 1) * t.terms[size_t(n + 1)] - rx() * u.terms[size_t(n)]) / denom;
        c.require(du.terms[size_t(n)] == rhs, "U'_n identity failed at n = " + std::to_string(n));
    }
}

// --- criterion 5: certificate suite ------------------------------------------
void criterion5(Check& c) {
    const auto t0 = std::chrono::steady_clock::now();
    gen::Rng rng(501);
    for (int it = 0; it < 200; ++it) {
        CharPoly cp = rng.charpoly(rng.pick(1, 3));
        DerivedRecurrence d = derivative_rule(cp);
        const TPoly& p = cp.poly();
        c.require((d.certificate.beta * p + d.certificate.gamma * p.x_derivative()).is_zero(),
                  "beta*p + gamma*p' != 0");
        c.require(d.certificate.gamma * p == d.charpoly.poly(),
                  "gamma*p != derived charpoly");
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    c.require(secs < 30.0, "runtime bound 30 s exceeded");
}

// --- criterion 6: oracle equivalence suite -----------------------------------
void criterion6(Check& c) {
    gen::Rng rng(601);
    for (int it = 0; it < 100; ++it) {
        const int k = rng.pick(1, 3);
        LinearRecurrence rec = rng.recurrence(k);
        DerivedRecurrence d = derivative_rule(char_poly_of(rec));
        TermList dterms =
            differentiate_terms(generate_terms(rec, size_t(2 * k + 13)), 1);
        c.require(verify_recurrence(d.recurrence, dterms, 2 * k, 2 * k + 12).passed,
                  "derivative oracle failed at case " + std::to_string(it));
    }
    for (int it = 0; it < 50; ++it) {
        LinearRecurrence ra = rng.recurrence(rng.pick(1, 3));
        LinearRecurrence rb = rng.recurrence(rng.pick(1, 3));
        TermList ta = generate_terms(ra, 16);
        TermList tb = generate_terms(rb, 16);
        CharPoly pa = char_poly_of(ra), pb = char_poly_of(rb);
        for (bool sharpen : {false, true}) {
            LinearRecurrence rs = recurrence_of(sum_rule(pa, pb, sharpen));
            TermList sums{std::vector<XRatFunc>(16), rs, 0};
            for (size_t i = 0; i < 16; ++i) sums.terms[i] = ta.terms[i] + tb.terms[i];
            c.require(verify_recurrence(rs, sums, rs.order(), 15).passed,
                      std::string("sum oracle failed (") + (sharpen ? "lcm" : "product") +
                          ") at case " + std::to_string(it));
        }
        LinearRecurrence rp = recurrence_of(product_rule(pa, pb));
        TermList prods{std::vector<XRatFunc>(16), rp, 0};
        for (size_t i = 0; i < 16; ++i) prods.terms[i] = ta.terms[i] * tb.terms[i];
        c.require(verify_recurrence(rp, prods, rp.order(), 15).passed,
                  "product oracle failed at case " + std::to_string(it));
    }
}

// --- criterion 7: structural invariants ---------------------------------------
void criterion7(Check& c) {
    gen::Rng rng(701);
    for (int it = 0; it < 100; ++it) {
        const int k = rng.pick(1, 3);
        CharPoly cp = rng.charpoly(k);
        const TPoly& p = cp.poly();
        const TPoly dp = p.x_derivative();
        DerivedRecurrence d = derivative_rule(cp);
        const TPoly& q = d.certificate.q;
        c.require(TPoly::divides(q, p), "gcd does not divide p");
        if (!dp.is_zero()) {
            c.require(TPoly::divides(q, dp), "gcd does not divide p'");
            if (q.degree() > 0)
                c.require(TPoly::gcd(TPoly::exact_div(p, q), TPoly::exact_div(dp, q)) ==
                              TPoly::one(),
                          "cofactors are not coprime");
        }
        c.require(d.charpoly.degree() == 2 * k - q.degree(),
                  "derived order != 2k - deg gcd");
        c.require(iterated_derivative_rule(cp, 2).charpoly.degree() <= 3 * k,
                  "second derivative order exceeds 3k");
    }
    for (int it = 0; it < 40; ++it) {
        TPoly p = rng.monic_poly_coeff_tpoly(rng.pick(1, 3));
        TPoly dp = p.x_derivative();
        if (dp.is_zero()) continue;
        TPoly g = TPoly::gcd(p, dp);
        c.require(g.has_polynomial_coeffs(), "Gauss lemma: gcd left Q[x]");
        c.require(TPoly::exact_div(p * p, g).has_polynomial_coeffs(),
                  "Gauss lemma: p^2/gcd left Q[x]");
    }
}

// --- criterion 8: CLI and DSL surface -----------------------------------------
std::string read_golden(const std::string& name, Check& c) {
    std::ifstream in(std::filesystem::path(RECCALC_GOLDEN_DIR) / name, std::ios::binary);
    if (!in.good()) {
        c.require(false, "missing golden file " + name);
        return {};
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void criterion8(Check& c) {
    const std::vector<std::pair<std::string, std::vector<std::string>>> golden_cases = {
        {"charpoly_chebyshev_t.txt", {"charpoly", "@chebyshev-t"}},
        {"derive_chebyshev_t.txt", {"derive", "@chebyshev-t", "--verify", "16"}},
        {"derive_paper_ex3.txt", {"derive", "@paper-ex3"}},
        {"derive_power_x_times2.txt", {"derive", "@power-x", "--times", "2", "--verify", "10"}},
        {"sum_chebyshev_lcm.txt",
         {"sum", "@chebyshev-t", "@chebyshev-u", "--lcm", "--verify", "12"}},
        {"sum_power_fib.txt", {"sum", "@power-x", "@fibonacci-poly"}},
        {"product_power_x.txt", {"product", "@power-x", "@power-x", "--verify", "8"}},
        {"product_chebyshev_power.txt", {"product", "@chebyshev-t", "@power-x"}},
        {"terms_chebyshev_u.txt", {"terms", "@chebyshev-u", "--count", "5"}},
        {"terms_chebyshev_t_diff.txt",
         {"terms", "@chebyshev-t", "--count", "5", "--diff", "1"}},
        {"verify_chebyshev_derived.txt",
         {"verify", "@chebyshev-t", "--candidate",
          "f[n] = 4*x*f[n-1] - (4*x^2+2)*f[n-2] + 4*x*f[n-3] - f[n-4]", "--diff", "1",
          "--from", "4", "--to", "16"}},
        {"catalog_list.txt", {"catalog"}},
        {"catalog_pell.txt", {"catalog", "pell-poly"}},
        {"derive_chebyshev_t.json", {"derive", "@chebyshev-t", "--json"}},
    };
    for (const auto& [file, args] : golden_cases) {
        CliRun r = cli(args);
        c.require(r.exit_code == 0, "nonzero exit for golden case " + file);
        c.require(r.out == read_golden(file, c), "output drifted from golden " + file);
    }

    for (const std::string& name : catalog_names()) {
        LinearRecurrence rec = catalog(name);
        c.require(parse_spec(print_recurrence(rec)) == rec,
                  "parse-print round trip failed for " + name);
    }

    std::mt19937 eng(0xACCE97);
    std::uniform_int_distribution<int> len_dist(0, 64);
    std::uniform_int_distribution<int> byte_dist(0, 255);
    const std::string alphabet = "fxn[]()=+-*/^0123456789; \n";
    std::uniform_int_distribution<size_t> alpha_dist(0, alphabet.size() - 1);
    int outcomes[2] = {0, 0};
    for (int it = 0; it < 10000; ++it) {
        std::string input;
        const int len = len_dist(eng);
        if (it % 2 == 0) {
            for (int i = 0; i < len; ++i) input.push_back(char(byte_dist(eng)));
        } else {
            for (int i = 0; i < len; ++i) input.push_back(alphabet[alpha_dist(eng)]);
        }
        try {
            (void)parse_spec(input);
            ++outcomes[0]; // would exit 0
        } catch (const ParseError&) {
            ++outcomes[1]; // would exit 1
        } catch (...) {
            c.require(false, "parser escaped with a non-ParseError exception");
            return;
        }
    }
    c.require(outcomes[0] + outcomes[1] == 10000, "fuzz outcome accounting is off");
}

} // namespace

int main() {
    struct Criterion {
        int number;
        const char* description;
        std::function<void(Check&)> fn;
    };
    const std::vector<Criterion> criteria = {
        {1, "Chebyshev derivative rule, oracle-verified on T' and U' (n = 4..16, < 1 s)",
         criterion1},
        {2, "Example 3: order 3 with gcd(p, p') = t - 1 surfaced", criterion2},
        {3, "Example 2 chain: (t-x)^2 then (t-x)^3, oracle-verified", criterion3},
        {4, "Chebyshev identities: T'_n = n U_(n-1) (n <= 12), U'_n over x^2-1 (n <= 10)",
         criterion4},
        {5, "certificate suite: 200 random characteristic polynomials, exact, < 30 s",
         criterion5},
        {6, "oracle equivalence: 100 random derivative cases, sum/product up to index 15",
         criterion6},
        {7, "structural invariants: gcd/cofactors, order formulas, Gauss lemma", criterion7},
        {8, "CLI/DSL: golden files, round trip, 10^4-input parser fuzz", criterion8},
    };

    int failures = 0;
    for (const Criterion& cr : criteria) {
        Check check;
        const auto t0 = std::chrono::steady_clock::now();
        try {
            cr.fn(check);
        } catch (const std::exception& e) {
            check.require(false, std::string("exception: ") + e.what());
        }
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (check.ok) {
            std::printf("PASS criterion %d: %s [%.2fs]\n", cr.number, cr.description, secs);
        } else {
            std::printf("FAIL criterion %d: %s [%.2fs] -- %s\n", cr.number, cr.description,
                        secs, check.detail.c_str());
            ++failures;
        }
    }
    return failures == 0 ? 0 : 1;
}
