#include <doctest.h>

#include "gen.hpp"
#include "reccalc/rules.hpp"

using namespace reccalc;

namespace {

XRatFunc rx() { return XRatFunc::x(); }
XRatFunc rc(long v) { return XRatFunc(Rational{v}); }
TPoly tp(std::vector<XRatFunc> c) { return TPoly(std::move(c)); }
TPoly linear(const XRatFunc& root) { return tp({-root, rc(1)}); }

const TPoly chebyshev_p = tp({rc(1), rc(-2) * rx(), rc(1)});
const TPoly ex3_p = tp({rx(), -(rx() + rc(1)), rc(1)});
const TPoly ex3_derived =
    tp({-(rx() * rx()), rx() * rx() + rc(2) * rx(), -(rc(2) * rx() + rc(1)), rc(1)});

} // namespace

TEST_CASE("char_poly_of on the worked examples") {
    CHECK(char_poly_of(LinearRecurrence({rc(2) * rx(), rc(-1)})).poly() == chebyshev_p);
    CHECK(char_poly_of(LinearRecurrence({rx()})).poly() == linear(rx()));
    CHECK(char_poly_of(LinearRecurrence({rx() + rc(1), -rx()})).poly() == ex3_p);
}

TEST_CASE("recurrence_of on the worked examples") {
    CHECK(recurrence_of(CharPoly(chebyshev_p)) == LinearRecurrence({rc(2) * rx(), rc(-1)}));
    CHECK(recurrence_of(CharPoly(ex3_derived)) ==
          LinearRecurrence({rc(2) * rx() + rc(1), -(rx() * rx() + rc(2) * rx()), rx() * rx()}));
    CHECK(recurrence_of(CharPoly(linear(rx()))) == LinearRecurrence({rx()}));
    // zero constant term means the deepest-lag coefficient vanishes
    CHECK_THROWS_AS(recurrence_of(CharPoly(tp({rc(0), -rx(), rc(1)}))), std::invalid_argument);
}

TEST_CASE("round trip recurrence <-> charpoly") {
    gen::Rng rng(51);
    for (int it = 0; it < 60; ++it) {
        LinearRecurrence rec = rng.recurrence(rng.pick(1, 3), false);
        CHECK(recurrence_of(char_poly_of(rec)) == rec);
    }
}

TEST_CASE("CharPoly validates monicity and degree") {
    CHECK_THROWS_AS(CharPoly(TPoly(rc(1))), std::invalid_argument);
    CHECK_THROWS_AS(CharPoly(chebyshev_p * rc(2)), std::invalid_argument);
    CHECK_THROWS_AS(LinearRecurrence({rc(0)}), std::invalid_argument);
    CHECK_THROWS_AS(LinearRecurrence({rx(), rc(0)}), std::invalid_argument);
}

TEST_CASE("derivative rule: Chebyshev") {
    DerivedRecurrence d = derivative_rule(CharPoly(chebyshev_p));
    TPoly p2 = tp({rc(1), rc(-4) * rx(), rc(4) * rx() * rx() + rc(2), rc(-4) * rx(), rc(1)});
    CHECK(d.charpoly.poly() == p2);
    CHECK(d.order() == 4);
    CHECK(d.valid_from == 4);
    CHECK(d.certificate.q == TPoly::one());
    CHECK(d.certificate.beta == tp({rc(0), rc(2)}));
    CHECK(d.certificate.gamma == chebyshev_p);
    CHECK_FALSE(d.recurrence.has_initial_values());
    CHECK(d.recurrence ==
          LinearRecurrence({rc(4) * rx(), -(rc(4) * rx() * rx() + rc(2)), rc(4) * rx(), rc(-1)}));
}

TEST_CASE("derivative rule: power sequence and its square") {
    TPoly tmx = linear(rx());
    DerivedRecurrence d1 = derivative_rule(CharPoly(tmx));
    CHECK(d1.charpoly.poly() == tmx * tmx);
    CHECK(d1.valid_from == 2);

    DerivedRecurrence d2 = derivative_rule(CharPoly(tmx * tmx));
    CHECK(d2.charpoly.poly() == tmx.pow(3)); // gcd sharpening: order 3, not 4
    CHECK(d2.certificate.q == tmx);
    CHECK(d2.order() == 3);
}

TEST_CASE("derivative rule: constant-in-x root (Example 3)") {
    DerivedRecurrence d = derivative_rule(CharPoly(ex3_p));
    CHECK(d.charpoly.poly() == ex3_derived);
    CHECK(d.order() == 3);
    CHECK(d.certificate.q == linear(rc(1)));
    CHECK(d.certificate.gamma == linear(rx()));
    CHECK(d.certificate.beta == TPoly::one()); // -p'/q = (t-1)/(t-1)
}

TEST_CASE("derivative rule: constant coefficients (p' = 0)") {
    TPoly p = tp({rc(1), rc(-3), rc(1)});
    DerivedRecurrence d = derivative_rule(CharPoly(p));
    CHECK(d.charpoly.poly() == p);
    CHECK(d.certificate.q == p);
    CHECK(d.certificate.beta.is_zero());
    CHECK(d.certificate.gamma == TPoly::one());
    CHECK(d.valid_from == 4);
}

TEST_CASE("iterated derivative rule") {
    TPoly tmx = linear(rx());
    CHECK(iterated_derivative_rule(CharPoly(tmx), 1).charpoly.poly() == tmx * tmx);
    CHECK(iterated_derivative_rule(CharPoly(tmx), 2).charpoly.poly() == tmx.pow(3));
    CHECK(iterated_derivative_rule(CharPoly(tmx), 2).valid_from == 4); // 2 + order 2

    DerivedRecurrence d = iterated_derivative_rule(CharPoly(chebyshev_p), 2);
    CHECK(d.charpoly.degree() <= 6); // order at most 3k for second derivatives
    CHECK(TPoly::divides(chebyshev_p * chebyshev_p, d.charpoly.poly()));
    CHECK(d.valid_from == 8);

    // when the first step sharpens, the second window starts at 2k + k1
    DerivedRecurrence e3 = iterated_derivative_rule(CharPoly(ex3_p), 2);
    CHECK(e3.charpoly.degree() == 4);
    CHECK(e3.valid_from == 7);

    CHECK_THROWS_AS(iterated_derivative_rule(CharPoly(tmx), 0), std::invalid_argument);
}

TEST_CASE("repeated differentiation of the Chebyshev relation climbs powers of p") {
    // gcd(p^m, m p^(m-1) p') = p^(m-1) when gcd(p, p') = 1, so each step
    // adds one factor of p: the m-th derivatives satisfy p^(m+1).
    CharPoly cheb{chebyshev_p};
    TPoly expected = chebyshev_p;
    for (int m = 1; m <= 4; ++m) {
        expected = expected * chebyshev_p;
        CHECK(iterated_derivative_rule(cheb, m).charpoly.poly() == expected);
    }
}

TEST_CASE("iterated derivative rule verifies termwise from its composed window") {
    gen::Rng rng(55);
    for (int it = 0; it < 10; ++it) {
        const int k = rng.pick(1, 2);
        LinearRecurrence rec = rng.recurrence(k);
        DerivedRecurrence d = iterated_derivative_rule(char_poly_of(rec), 2);
        TermList terms = generate_terms(rec, static_cast<std::size_t>(d.valid_from + 9));
        TermList second = differentiate_terms(terms, 2);
        CHECK(verify_recurrence(d.recurrence, second, d.valid_from, d.valid_from + 8).passed);
    }
}

TEST_CASE("certificate identity and order bound on random characteristic polynomials") {
    gen::Rng rng(52);
    for (int it = 0; it < 100; ++it) {
        const int k = rng.pick(1, 3);
        CharPoly cp = rng.charpoly(k);
        DerivedRecurrence d = derivative_rule(cp);
        const TPoly& p = cp.poly();
        const TPoly pprime = p.x_derivative();
        CHECK((d.certificate.beta * p + d.certificate.gamma * pprime).is_zero());
        CHECK(d.certificate.gamma * p == d.charpoly.poly());
        CHECK(d.certificate.gamma.degree() == k - d.certificate.q.degree());
        CHECK(d.charpoly.degree() == 2 * k - d.certificate.q.degree());
        CHECK(d.charpoly.degree() <= 2 * k);
        CHECK(d.valid_from == 2 * k);
        const bool coprime = d.certificate.q.degree() == 0;
        CHECK((d.charpoly.degree() == 2 * k) == coprime);
        // second derivatives: order at most 3k
        CHECK(iterated_derivative_rule(cp, 2).charpoly.degree() <= 3 * k);
    }
}

TEST_CASE("sum rule") {
    CharPoly cheb{chebyshev_p};
    CHECK(sum_rule(cheb, cheb, true) == cheb);
    CHECK(sum_rule(CharPoly(linear(rx())), CharPoly(linear(rc(1))), false).poly() == ex3_p);
    TPoly tmx = linear(rx());
    CHECK(sum_rule(CharPoly(tmx), CharPoly(tmx * tmx), true).poly() == tmx * tmx);
}

TEST_CASE("sum rule: product equals lcm times gcd") {
    gen::Rng rng(53);
    for (int it = 0; it < 60; ++it) {
        CharPoly a = rng.charpoly(rng.pick(1, 3));
        CharPoly b = rng.charpoly(rng.pick(1, 3));
        TPoly lhs = sum_rule(a, b, false).poly();
        TPoly rhs = sum_rule(a, b, true).poly() * TPoly::gcd(a.poly(), b.poly());
        CHECK(lhs == rhs.monic());
    }
}

TEST_CASE("product rule on fixed cases") {
    TPoly tmx = linear(rx());
    CHECK(product_rule(CharPoly(tmx), CharPoly(tmx)).poly() == linear(rx() * rx()));
    CHECK(product_rule(CharPoly(tmx), CharPoly(linear(rc(1)))).poly() == tmx);

    // ((t-1)^2, chebyshev) -> chebyshev^2: the relation satisfied by
    // n * U_{n-1}, which is the derivative sequence of T_n
    TPoly tm1 = linear(rc(1));
    CharPoly left{tm1 * tm1};
    CHECK(product_rule(left, CharPoly(chebyshev_p)).poly() == chebyshev_p * chebyshev_p);
    CHECK(product_rule(left, CharPoly(chebyshev_p)) ==
          derivative_rule(CharPoly(chebyshev_p)).charpoly);
}

TEST_CASE("product rule strips zero roots explicitly") {
    // a = t*(t-x) has a zero root; pairing it with the root of b = t-2
    // contributes one zero root to the product: t*(t-2x).
    CharPoly a{tp({rc(0), -rx(), rc(1)})};
    CharPoly b{linear(rc(2))};
    TPoly expected = tp({rc(0), rc(-2) * rx(), rc(1)});
    CHECK(product_rule(a, b).poly() == expected);
    CHECK(product_rule(b, a).poly() == expected);

    // termwise check without recurrence plumbing: a_n = x^(n-1) with an
    // arbitrary transient a_0, b_n = 2^n, c_n = a_n*b_n
    std::vector<XRatFunc> av{rc(5)};
    for (int n = 1; n <= 8; ++n) av.push_back(XRatFunc(XPoly::monomial(Rational{1},
                                                     static_cast<std::size_t>(n - 1))));
    std::vector<XRatFunc> cv;
    for (int n = 0; n <= 8; ++n) cv.push_back(av[static_cast<std::size_t>(n)] * rc(1 << n));
    for (int n = 2; n <= 8; ++n) {
        XRatFunc residual = cv[static_cast<std::size_t>(n)] -
                            rc(2) * rx() * cv[static_cast<std::size_t>(n - 1)];
        CHECK(residual.is_zero());
    }

    // pure powers of t on one side: every product root is zero
    CharPoly t2{tp({rc(0), rc(0), rc(1)})};
    CHECK(product_rule(t2, CharPoly(chebyshev_p)).poly() == TPoly::one().shifted(4));
}

TEST_CASE("product rule degree is exactly k times l") {
    gen::Rng rng(54);
    for (int it = 0; it < 40; ++it) {
        CharPoly a = rng.charpoly(rng.pick(1, 3));
        CharPoly b = rng.charpoly(rng.pick(1, 3));
        CHECK(product_rule(a, b).degree() == a.degree() * b.degree());
    }
}
