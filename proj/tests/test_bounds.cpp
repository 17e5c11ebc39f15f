/*
   Copyright 2026 The telequad authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "telequad/bounds.hpp"
#include "telequad/expr.hpp"
#include "telequad/quadrature.hpp"
#include "telequad/reference.hpp"

using namespace telequad;

namespace {

const double kE = std::exp(1.0);
const double kPi = std::acos(-1.0);

RationalPoly pn(int n) { return scheme_polynomial(static_cast<unsigned>(n), Rational(0)); }

// Analytic ||f^(n)||_s on [0,1] for the test corpus, for even n.
// exp:    f^(n) = exp
// sin:    |f^(n)| = |sin|
// x*e^x:  f^(n) = (x+n) e^x
double corpus_fn_norm(const std::string& tag, int n, const Exponent& s) {
    REQUIRE(n % 2 == 0);
    if (tag == "exp(x)") {
        if (s.is_inf()) return kE;
        if (s.value() == 1.0) return kE - 1.0;
        return std::sqrt((kE * kE - 1.0) / 2.0);
    }
    if (tag == "sin(x)") {
        if (s.is_inf()) return std::sin(1.0);
        if (s.value() == 1.0) return 1.0 - std::cos(1.0);
        return std::sqrt(0.5 - std::sin(2.0) / 4.0);
    }
    REQUIRE(tag == "x*exp(x)");
    double m = n;
    if (s.is_inf()) return (1.0 + m) * kE;
    if (s.value() == 1.0) return m * kE - m + 1.0;
    auto prim = [m](double x) {
        return std::exp(2.0 * x) * ((x + m) * (x + m) / 2.0 - (x + m) / 2.0 + 0.25);
    };
    return std::sqrt(prim(1.0) - prim(0.0));
}

// Alexiewicz norm of f^(n) on [0,1]: max - min of the monotone f^(n-1).
double corpus_alexiewicz(const std::string& tag, int n) {
    REQUIRE(n % 2 == 0);
    if (tag == "exp(x)") return kE - 1.0;
    if (tag == "sin(x)") return 1.0 - std::cos(1.0);
    REQUIRE(tag == "x*exp(x)");
    return n * kE - n + 1.0;
}

}  // namespace

TEST_CASE("holder pairs validate conjugacy") {
    CHECK(HolderPair::conjugate(Exponent::finite(1)).s.is_inf());
    CHECK(HolderPair::conjugate(Exponent::infinity()).s.value() == 1.0);
    CHECK(HolderPair::conjugate(Exponent::finite(2)).s.value() == doctest::Approx(2.0));
    CHECK(HolderPair::conjugate(Exponent::finite(3)).s.value() == doctest::Approx(1.5));
    CHECK_NOTHROW(HolderPair(Exponent::finite(3), Exponent::finite(1.5)));
    CHECK_THROWS(HolderPair(Exponent::finite(2), Exponent::finite(3)));
    CHECK_THROWS(Exponent::finite(0.5));
    CHECK(Exponent::parse("inf").is_inf());
    CHECK(Exponent::parse("2.5").value() == 2.5);
    CHECK_THROWS(Exponent::parse("two"));
}

TEST_CASE("numeric norms: hand values") {
    CHECK(norm_numeric(pn(1), Exponent::finite(1)).value == doctest::Approx(0.25).epsilon(1e-12));
    CHECK(norm_numeric(pn(1), Exponent::finite(2)).value ==
          doctest::Approx(1.0 / std::sqrt(12.0)).epsilon(1e-12));
    NormResult inf2 = norm_numeric(pn(2), Exponent::infinity());
    CHECK(inf2.value == doctest::Approx(1.0 / 12.0).epsilon(1e-12));
    CHECK(inf2.method == NormMethod::CriticalPoint);
    CHECK(norm_numeric(RationalPoly(), Exponent::finite(3)).value == 0.0);
}

TEST_CASE("exact norms: covered closed forms") {
    auto q2r1 = norm_exact(make_scheme(2, Variant::Qn), Exponent::finite(1));
    REQUIRE(q2r1.has_value());
    CHECK(q2r1->exact->value == Rational(1, 12));
    CHECK(q2r1->exact->formula == "prop-4.2a");

    auto p1r1 = norm_exact(make_scheme(1, Variant::Pn), Exponent::finite(1));
    REQUIRE(p1r1.has_value());
    CHECK(p1r1->exact->value == Rational(1, 4));
    CHECK(p1r1->exact->formula == "prop-4.2b");

    auto p1r2 = norm_exact(make_scheme(1, Variant::Pn), Exponent::finite(2));
    REQUIRE(p1r2.has_value());
    CHECK(p1r2->exact->squared == Rational(1, 12));

    auto p2r2 = norm_exact(make_scheme(2, Variant::Pn), Exponent::finite(2));
    REQUIRE(p2r2.has_value());
    CHECK(p2r2->exact->squared == Rational(1, 720));
    CHECK(p2r2->value == doctest::Approx(std::sqrt(1.0 / 720.0)).epsilon(1e-15));

    auto p2inf = norm_exact(make_scheme(2, Variant::Pn), Exponent::infinity());
    REQUIRE(p2inf.has_value());
    CHECK(p2inf->exact->value == Rational(1, 12));

    CHECK_FALSE(norm_exact(make_scheme(4, Variant::Pn), Exponent::finite(17)).has_value());
    CHECK_FALSE(norm_exact(make_scheme(1, Variant::Qn), Exponent::finite(1)).has_value());
    CHECK_FALSE(norm_exact(make_scheme(2, Rational(1, 7)), Exponent::finite(2)).has_value());
    CHECK_FALSE(norm_exact(make_scheme(3, Variant::Pn), Exponent::infinity()).has_value());
}

TEST_CASE("exact and numeric norms agree on every covered case, n <= 10") {
    for (int n = 1; n <= 10; ++n) {
        for (Variant v : {Variant::Pn, Variant::Qn}) {
            SchemeSpec spec = make_scheme(n, v);
            for (const Exponent& r : {Exponent::finite(1), Exponent::finite(2), Exponent::infinity()}) {
                auto exact = norm_exact(spec, r);
                if (!exact) continue;
                double numeric = norm_numeric(spec.poly, r).value;
                CHECK(std::abs(numeric - exact->value) <= 1e-10);
                if (exact->exact->value)
                    CHECK(std::abs(exact->value - exact->exact->value->to_double()) <= 1e-12 * exact->value);
                if (exact->exact->squared)
                    CHECK(std::abs(exact->value * exact->value - exact->exact->squared->to_double()) <=
                          1e-12 * exact->exact->squared->to_double());
            }
        }
    }
}

TEST_CASE("pythagorean norm identity for constant shifts") {
    for (int n = 1; n <= 8; ++n) {
        double base = norm_numeric(pn(n), Exponent::finite(2)).value;
        for (double c : {0.25, -0.25, 1.0, -1.0, 3.0, -3.0}) {
            Rational rc(static_cast<long>(c * 4), 4);
            double shifted = norm_numeric(pn(n).plus_constant(rc), Exponent::finite(2)).value;
            CHECK(std::abs(shifted * shifted - (base * base + c * c)) <= 1e-10);
        }
    }
}

TEST_CASE("odd-degree norms are minimized at c = 0") {
    for (int n = 1; n <= 9; n += 2) {
        for (const Exponent& r :
             {Exponent::finite(1), Exponent::finite(1.5), Exponent::finite(2), Exponent::finite(3),
              Exponent::infinity()}) {
            double base = norm_numeric(pn(n), r).value;
            for (const Rational& c :
                 {Rational(1, 8), Rational(-1, 8), Rational(1, 2), Rational(-1, 2), Rational(2), Rational(-2)}) {
                double shifted = norm_numeric(pn(n).plus_constant(c), r).value;
                CHECK(shifted >= base - 1e-12);
            }
        }
    }
}

TEST_CASE("panel error bound examples") {
    SchemeSpec q2 = make_scheme(2, Variant::Qn);
    CHECK(panel_error_bound(q2, HolderPair::conjugate(Exponent::finite(1)), kE, 0.0, 1.0) ==
          doctest::Approx(kE / 12.0).epsilon(1e-12));
    CHECK(panel_error_bound(q2, HolderPair::conjugate(Exponent::finite(2)), 0.0, 0.0, 1.0) == 0.0);
    CHECK(panel_error_bound(make_scheme(1, Variant::Pn), HolderPair::conjugate(Exponent::finite(2)), 1.0, 0.0,
                            1.0) == doctest::Approx(1.0 / std::sqrt(12.0)).epsilon(1e-12));
    CHECK_THROWS_AS(panel_error_bound(q2, HolderPair::conjugate(Exponent::finite(1)), 1.0, 1.0, 1.0),
                    DegenerateInterval);
}

TEST_CASE("composite error bound examples") {
    SchemeSpec q2 = make_scheme(2, Variant::Qn);
    HolderPair r1 = HolderPair::conjugate(Exponent::finite(1));
    // (b-a)^3 M / (12 N^2), the textbook composite-trapezoid bound.
    double m = 3.0;
    CHECK(composite_error_bound(q2, r1, m, Interval(0.0, 2.0, 5)) ==
          doctest::Approx(8.0 * m / (12.0 * 25.0)).epsilon(1e-12));

    SchemeSpec p4 = make_scheme(4, Variant::Pn);
    HolderPair r2 = HolderPair::conjugate(Exponent::finite(2));
    CHECK(composite_error_bound(p4, r2, 1.7, Interval(0.0, 1.0, 1)) ==
          doctest::Approx(panel_error_bound(p4, r2, 1.7, 0.0, 1.0)).epsilon(1e-15));

    double err = error_actual(q2, make_integrand(parse_expr("exp(x)"), 2, 0.0, 1.0), Interval(0.0, 1.0, 10),
                              1e-13);
    double bound = composite_error_bound(q2, r1, kE, Interval(0.0, 1.0, 10));
    CHECK(bound == doctest::Approx(kE / 1200.0).epsilon(1e-12));
    CHECK(std::abs(err) <= bound);
}

TEST_CASE("bound validity across the corpus grid") {
    const char* tags[] = {"exp(x)", "sin(x)", "x*exp(x)"};
    for (const char* tag : tags) {
        for (int n : {2, 4, 6}) {
            Integrand f = make_integrand(parse_expr(tag), n, 0.0, 1.0);
            for (Variant v : {Variant::Pn, Variant::Qn}) {
                SchemeSpec spec = make_scheme(n, v);
                for (int N : {1, 2, 4, 8, 16, 32, 64}) {
                    Interval iv(0.0, 1.0, N);
                    double err = std::abs(error_actual(spec, f, iv, 1e-13));
                    for (const Exponent& r : {Exponent::finite(1), Exponent::finite(2), Exponent::infinity()}) {
                        HolderPair hp = HolderPair::conjugate(r);
                        double fn = corpus_fn_norm(tag, n, hp.s);
                        CHECK(err <= composite_error_bound(spec, hp, fn, iv) + 1e-14);
                    }
                }
            }
        }
    }
}

TEST_CASE("total variation examples") {
    VariationResult v1 = total_variation(pn(1));
    CHECK(v1.value == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(v1.breakpoints.size() == 2);

    VariationResult v2 = total_variation(pn(2));
    CHECK(v2.value == doctest::Approx(0.25).epsilon(1e-12));
    REQUIRE(v2.breakpoints.size() == 3);
    CHECK(v2.breakpoints[1] == doctest::Approx(0.5).epsilon(1e-12));

    VariationResult vq2 = total_variation(make_scheme(2, Variant::Qn).poly);
    CHECK(vq2.value == doctest::Approx(0.25).epsilon(1e-12));

    CHECK(v2.value >= std::abs(pn(2).eval(1.0) - pn(2).eval(0.0)));
}

TEST_CASE("alexiewicz norm examples") {
    // f = x: the order-1 primitive is f itself.
    CHECK(alexiewicz_norm(make_integrand(parse_expr("x"), 0, 0.0, 1.0), 1, 0.0, 1.0) ==
          doctest::Approx(1.0).epsilon(1e-10));
    CHECK(alexiewicz_norm(make_integrand(parse_expr("sin(x)"), 0, 0.0, 2.0 * kPi), 1, 0.0, 2.0 * kPi) ==
          doctest::Approx(2.0).epsilon(1e-9));
    CHECK(alexiewicz_norm(make_integrand(parse_expr("x^2 - x"), 0, 0.0, 1.0), 1, 0.0, 1.0) ==
          doctest::Approx(0.25).epsilon(1e-10));
    CHECK_THROWS_AS(alexiewicz_norm(make_integrand(parse_expr("x"), 0, 0.0, 1.0), 2, 0.0, 1.0),
                    InsufficientDerivativeOrder);
}

TEST_CASE("distributional bound examples") {
    SchemeSpec q2 = make_scheme(2, Variant::Qn);
    Integrand f = make_integrand(parse_expr("exp(x)"), 2, 0.0, 1.0);
    double bound = distributional_bound(q2, f, Interval(0.0, 1.0, 4));
    CHECK(bound == doctest::Approx(0.25 * (kE - 1.0) * 0.25).epsilon(1e-9));
    double err = std::abs(error_actual(q2, f, Interval(0.0, 1.0, 4), 1e-13));
    CHECK(err <= bound);

    // Constant integrand: zero primitive oscillation.
    SchemeSpec p1 = make_scheme(1, Variant::Pn);
    CHECK(distributional_bound(p1, make_integrand(parse_expr("3"), 1, 0.0, 1.0), Interval(0.0, 1.0, 2)) ==
          doctest::Approx(0.0).epsilon(1e-12));

    // x^2/2 + 1 never vanishes on [0,1].
    SchemeSpec rogue{2, Rational(0),
                     RationalPoly(std::vector<Rational>{Rational(1), Rational(0), Rational(1, 2)}),
                     Variant::Custom};
    CHECK_THROWS_AS(distributional_bound(rogue, f, Interval(0.0, 1.0, 2)), NoRootInUnitInterval);
}

TEST_CASE("distributional bound holds across the corpus grid") {
    const char* tags[] = {"exp(x)", "sin(x)", "x*exp(x)"};
    for (const char* tag : tags) {
        for (int n : {2, 4, 6}) {
            Integrand f = make_integrand(parse_expr(tag), n, 0.0, 1.0);
            CHECK(alexiewicz_norm(f, n, 0.0, 1.0) ==
                  doctest::Approx(corpus_alexiewicz(tag, n)).epsilon(1e-9));
            for (Variant v : {Variant::Pn, Variant::Qn}) {
                SchemeSpec spec = make_scheme(n, v);
                for (int N : {1, 2, 4, 8, 16, 32, 64}) {
                    Interval iv(0.0, 1.0, N);
                    double err = std::abs(error_actual(spec, f, iv, 1e-13));
                    CHECK(err <= distributional_bound(spec, f, iv) + 1e-14);
                }
            }
        }
    }
}

TEST_CASE("wallis integrals") {
    CHECK(wallis(2) == doctest::Approx(kPi / 4.0).epsilon(1e-15));
    CHECK(wallis(3) == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
    CHECK(wallis(4) == doctest::Approx(3.0 * kPi / 16.0).epsilon(1e-15));
    CHECK(wallis(5) == doctest::Approx(8.0 / 15.0).epsilon(1e-15));
    CHECK(wallis(6) == doctest::Approx(5.0 * kPi / 32.0).epsilon(1e-15));
    CHECK_THROWS(wallis(1));
}

TEST_CASE("cosine moment identity behind the r-norm asymptotics") {
    for (int r : {2, 3, 4, 6}) {
        // int_0^1 |cos(2 pi x)|^r dx = 4 int_0^{1/4} cos(2 pi x)^r dx by symmetry.
        double moment = 4.0 * reference_integral(
                                  [r](double x) { return std::pow(std::cos(2.0 * kPi * x), r); }, 0.0, 0.25,
                                  1e-12);
        CHECK(std::abs(moment - 2.0 / kPi * wallis(r)) <= 1e-10);
    }
}

TEST_CASE("asymptotic estimates: closed forms and coarse-degree behavior") {
    CHECK(asymptotic_estimate(AsymptoticKind::PnInf, 10) ==
          doctest::Approx(2.0 / std::pow(2.0 * kPi, 10)).epsilon(1e-15));
    // The exact sup norm sits zeta(10) - 1 = 0.1% above the estimate.
    double exact10 = norm_exact(make_scheme(10, Variant::Pn), Exponent::infinity())->value;
    CHECK(exact10 / asymptotic_estimate(AsymptoticKind::PnInf, 10) ==
          doctest::Approx(1.0).epsilon(2e-3));

    CHECK(asymptotic_estimate(AsymptoticKind::Pn1, 5) ==
          doctest::Approx(8.0 / std::pow(2.0 * kPi, 6)).epsilon(1e-15));

    CHECK(asymptotic_estimate(AsymptoticKind::VariationPn, 2) ==
          doctest::Approx(8.0 / std::pow(2.0 * kPi, 2)).epsilon(1e-15));
    CHECK(total_variation(pn(2)).value == doctest::Approx(0.25).epsilon(1e-12));

    CHECK_THROWS_AS(parse_asymptotic_kind("pn_sup"), UnknownKind);
    CHECK_THROWS(asymptotic_estimate(AsymptoticKind::Q2nInf, 9));
    CHECK_THROWS(asymptotic_estimate(AsymptoticKind::PnREven, 10, 3));
    CHECK_THROWS(asymptotic_estimate(AsymptoticKind::PnREven, 10));
    for (AsymptoticKind k : {AsymptoticKind::PnInf, AsymptoticKind::Q2nInf, AsymptoticKind::Pn1,
                             AsymptoticKind::Q2n1, AsymptoticKind::PnREven, AsymptoticKind::PnROdd,
                             AsymptoticKind::VariationPn})
        CHECK(parse_asymptotic_kind(asymptotic_kind_name(k)) == k);
}

TEST_CASE("asymptotic ratios close to one at degree 20") {
    auto ratio_ok = [](double exact, double asymptotic) {
        double ratio = exact / asymptotic;
        return ratio >= 0.99 && ratio <= 1.01;
    };
    CHECK(ratio_ok(norm_exact(make_scheme(20, Variant::Pn), Exponent::infinity())->value,
                   asymptotic_estimate(AsymptoticKind::PnInf, 20)));
    CHECK(ratio_ok(norm_numeric(pn(20), Exponent::finite(1)).value,
                   asymptotic_estimate(AsymptoticKind::Pn1, 20)));
    CHECK(ratio_ok(norm_exact(make_scheme(20, Variant::Qn), Exponent::infinity())->value,
                   asymptotic_estimate(AsymptoticKind::Q2nInf, 20)));
    CHECK(ratio_ok(norm_exact(make_scheme(20, Variant::Qn), Exponent::finite(1))->value,
                   asymptotic_estimate(AsymptoticKind::Q2n1, 20)));
    CHECK(ratio_ok(total_variation(pn(20)).value,
                   asymptotic_estimate(AsymptoticKind::VariationPn, 20)));
}

TEST_CASE("scaled polynomials converge to the trig envelope") {
    for (int n : {10, 11}) {
        RationalPoly b = bernoulli_poly(static_cast<unsigned>(n));
        double factorial = Rational::factorial(static_cast<unsigned>(n)).to_double();
        double sign = ((n / 2 - 1) % 2 == 0) ? 1.0 : -1.0;
        double worst = 0.0;
        for (int i = 0; i <= 512; ++i) {
            double x = static_cast<double>(i) / 512.0;
            double scaled = sign * std::pow(2.0 * kPi, n) * b.eval(x) / (2.0 * factorial);
            double trig = (n % 2 == 0) ? std::cos(2.0 * kPi * x) : std::sin(2.0 * kPi * x);
            worst = std::max(worst, std::abs(scaled - trig));
        }
        CHECK(worst <= 0.01);
    }
}

TEST_CASE("wallis cross-check of the degree-20 r-norms") {
    for (int r : {2, 3, 4, 6}) {
        AsymptoticKind kind = (r % 2 == 0) ? AsymptoticKind::PnREven : AsymptoticKind::PnROdd;
        double numeric = norm_numeric(pn(20), Exponent::finite(r)).value;
        double estimate = asymptotic_estimate(kind, 20, r);
        CHECK(numeric / estimate >= 0.98);
        CHECK(numeric / estimate <= 1.02);
    }
}

TEST_CASE("norms are nondecreasing in r on the unit interval") {
    const RationalPoly polys[] = {pn(2), pn(5), make_scheme(4, Variant::Qn).poly};
    for (const RationalPoly& p : polys) {
        double prev = -1.0;
        for (const Exponent& r : {Exponent::finite(1), Exponent::finite(1.5), Exponent::finite(2),
                                  Exponent::finite(3), Exponent::finite(8), Exponent::infinity()}) {
            double cur = norm_numeric(p, r).value;
            CHECK(cur >= prev - 1e-12);
            prev = cur;
        }
    }
}

TEST_CASE("root helpers") {
    std::vector<double> roots = real_roots_in_unit_interval(pn(2));
    REQUIRE(roots.size() == 2);
    CHECK(roots[0] == doctest::Approx(0.5 - 0.5 / std::sqrt(3.0)).epsilon(1e-12));
    CHECK(roots[1] == doctest::Approx(0.5 + 0.5 / std::sqrt(3.0)).epsilon(1e-12));

    CHECK(has_root_in_unit_interval(make_scheme(2, Variant::Qn).poly));  // vanishes at both ends
    CHECK(has_root_in_unit_interval(pn(2)));
    CHECK_FALSE(has_root_in_unit_interval(
        RationalPoly(std::vector<Rational>{Rational(1), Rational(0), Rational(1, 2)})));
}
