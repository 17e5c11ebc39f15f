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

#include <random>

#include "telequad/errors.hpp"
#include "telequad/scheme.hpp"

using namespace telequad;

namespace {

Rational random_rational(std::mt19937& rng) {
    std::uniform_int_distribution<long> num(-999, 999);
    std::uniform_int_distribution<long> den(1, 999);
    return Rational(num(rng), den(rng));
}

}  // namespace

TEST_CASE("is_telescoping examples") {
    // B_3(x)/3! + 7
    RationalPoly p = scheme_polynomial(3, Rational(7));
    CHECK(is_telescoping(p));

    // x + 5: the n = 1 condition range is empty
    CHECK(is_telescoping(RationalPoly(std::vector<Rational>{Rational(5), Rational(1)})));

    // x^2/2: p(0) = 0 != p(1) = 1/2
    CHECK_FALSE(is_telescoping(RationalPoly::monomial(2, Rational(1, 2))));
}

TEST_CASE("is_telescoping rejects wrong leading coefficients") {
    CHECK_THROWS_AS(is_telescoping(RationalPoly::monomial(2, Rational(1))), WrongLeadingCoefficient);
    CHECK_THROWS_AS(is_telescoping(RationalPoly::constant(Rational(1))), WrongLeadingCoefficient);
    CHECK_THROWS_AS(is_telescoping(RationalPoly::monomial(3, Rational(1, 2))), WrongLeadingCoefficient);
}

TEST_CASE("make_scheme examples") {
    SchemeSpec trap = make_scheme(2, Rational(-1, 12));
    CHECK(trap.variant == Variant::Qn);
    // (x^2 - x)/2
    CHECK(trap.poly == RationalPoly(std::vector<Rational>{Rational(0), Rational(-1, 2), Rational(1, 2)}));

    SchemeSpec p4 = make_scheme(4, Rational(0));
    CHECK(p4.variant == Variant::Pn);
    CHECK(p4.poly == bernoulli_poly(4).scaled(Rational(1, 24)));

    // B_3 = 0, so p_3 = q_3; the canonical tag is Pn.
    CHECK(make_scheme(3, Rational(0)).variant == Variant::Pn);
    CHECK(make_scheme(3, Variant::Qn).variant == Variant::Pn);
    CHECK(make_scheme(3, Variant::Qn).poly == make_scheme(3, Variant::Pn).poly);

    CHECK(make_scheme(2, Rational(1, 7)).variant == Variant::Custom);
    CHECK(make_scheme(1, Variant::Qn).c == Rational(1, 2));
    CHECK_THROWS(make_scheme(0, Rational(0)));
}

TEST_CASE("constructive direction: every B_n/n! + c telescopes") {
    std::mt19937 rng(20260810);
    for (int n = 1; n <= 12; ++n) {
        for (int trial = 0; trial < 50; ++trial) {
            SchemeSpec spec = make_scheme(n, random_rational(rng));
            CHECK(is_telescoping(spec.poly));
        }
    }
}

TEST_CASE("exclusive direction: single-coefficient perturbations break telescoping") {
    const Rational deltas[] = {Rational(1, 7), Rational(-3), Rational(1, 1000003)};
    for (int n = 2; n <= 8; ++n) {
        RationalPoly base = scheme_polynomial(static_cast<unsigned>(n), Rational(0));
        for (int k = 1; k <= n - 1; ++k) {
            for (const Rational& d : deltas) {
                // Perturb the coefficient of x^{n-k}.
                RationalPoly perturbed = base + RationalPoly::monomial(n - k, d);
                CHECK_FALSE(is_telescoping(perturbed));
            }
        }
        // Constant-term (k = n) perturbations keep it telescoping.
        for (const Rational& d : deltas) CHECK(is_telescoping(base.plus_constant(d)));
    }
}

TEST_CASE("endpoint weights reproduce the trapezoid pattern for q_2") {
    WeightTable t = endpoint_weights(make_scheme(2, Variant::Qn), 0.0, 1.0);
    REQUIRE(t.w_a.size() == 2);
    CHECK(t.exact_a[0] == Rational(1, 2));
    CHECK(t.exact_b[0] == Rational(1, 2));
    CHECK(t.exact_a[1] == Rational(0));
    CHECK(t.exact_b[1] == Rational(0));
    CHECK(t.w_a[0] == 0.5);
    CHECK(t.w_b[0] == 0.5);
    CHECK(t.w_a[1] == 0.0);
    CHECK(t.w_b[1] == 0.0);
}

TEST_CASE("endpoint weights for p_2 carry the 1/12 derivative corrections") {
    WeightTable t = endpoint_weights(make_scheme(2, Variant::Pn), 0.0, 1.0);
    CHECK(t.exact_a[0] == Rational(1, 2));
    CHECK(t.exact_b[0] == Rational(1, 2));
    CHECK(t.exact_a[1] == Rational(1, 12));
    CHECK(t.exact_b[1] == Rational(-1, 12));
}

TEST_CASE("weights on f sum to b - a") {
    std::mt19937 rng(7);
    for (int n = 1; n <= 9; ++n) {
        SchemeSpec spec = make_scheme(n, random_rational(rng));
        WeightTable t = endpoint_weights(spec, 0.25, 1.75);
        CHECK(t.w_a[0] + t.w_b[0] == doctest::Approx(1.5).epsilon(1e-14));
        CHECK(t.exact_a[0] + t.exact_b[0] == Rational(1));
    }
}

TEST_CASE("qn variants assign zero weight to the top derivative at both ends") {
    for (int n = 2; n <= 8; ++n) {
        WeightTable t = endpoint_weights(make_scheme(n, Variant::Qn), 0.0, 1.0);
        CHECK(t.exact_a[static_cast<std::size_t>(n) - 1].is_zero());
        CHECK(t.exact_b[static_cast<std::size_t>(n) - 1].is_zero());
    }
}

TEST_CASE("weight scaling follows (b-a)^{k+1}") {
    SchemeSpec spec = make_scheme(3, Rational(1, 7));
    double a = -0.5;
    double b = 2.0;
    WeightTable t = endpoint_weights(spec, a, b);
    double width = b - a;
    double wpow = width;
    for (int k = 0; k < 3; ++k) {
        CHECK(t.w_a[static_cast<std::size_t>(k)] ==
              doctest::Approx(t.exact_a[static_cast<std::size_t>(k)].to_double() * wpow).epsilon(1e-15));
        CHECK(t.w_b[static_cast<std::size_t>(k)] ==
              doctest::Approx(t.exact_b[static_cast<std::size_t>(k)].to_double() * wpow).epsilon(1e-15));
        wpow *= width;
    }
}

TEST_CASE("degenerate intervals are rejected") {
    SchemeSpec spec = make_scheme(2, Variant::Qn);
    CHECK_THROWS_AS(endpoint_weights(spec, 1.0, 1.0), DegenerateInterval);
    CHECK_THROWS_AS(endpoint_weights(spec, 2.0, 1.0), DegenerateInterval);
}
