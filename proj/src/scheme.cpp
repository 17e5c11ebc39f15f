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

#include "telequad/scheme.hpp"

#include "telequad/errors.hpp"

namespace telequad {

std::string variant_name(Variant v) {
    switch (v) {
        case Variant::Pn: return "pn";
        case Variant::Qn: return "qn";
        case Variant::Custom: return "custom";
    }
    return "?";
}

bool is_telescoping(const RationalPoly& p) {
    int n = p.degree();
    if (n < 1) throw WrongLeadingCoefficient("is_telescoping: polynomial must have degree >= 1");
    if (p.coeff(n) != Rational(1) / Rational::factorial(static_cast<unsigned>(n)))
        throw WrongLeadingCoefficient("is_telescoping: leading coefficient must be 1/n!");
    RationalPoly d = p;
    for (int l = 0; l <= n - 2; ++l) {
        if (d.eval(Rational(0)) != d.eval(Rational(1))) return false;
        d = d.derivative();
    }
    return true;
}

SchemeSpec make_scheme(int n, const Rational& c) {
    if (n < 1) throw Error("make_scheme: degree must be >= 1");
    unsigned un = static_cast<unsigned>(n);
    Rational qn_c = -(bernoulli_number(un) / Rational::factorial(un));
    Variant v = Variant::Custom;
    if (c.is_zero())
        v = Variant::Pn;
    else if (c == qn_c)
        v = Variant::Qn;
    return SchemeSpec{n, c, scheme_polynomial(un, c), v};
}

SchemeSpec make_scheme(int n, Variant v) {
    if (n < 1) throw Error("make_scheme: degree must be >= 1");
    unsigned un = static_cast<unsigned>(n);
    switch (v) {
        case Variant::Pn: return make_scheme(n, Rational(0));
        case Variant::Qn: return make_scheme(n, -(bernoulli_number(un) / Rational::factorial(un)));
        case Variant::Custom: break;
    }
    throw Error("make_scheme: custom variant requires an explicit constant");
}

WeightTable endpoint_weights(const SchemeSpec& spec, double a, double b) {
    if (!(a < b)) throw DegenerateInterval("endpoint_weights: requires a < b");
    int n = spec.degree;
    WeightTable t;
    t.degree = n;
    t.c = spec.c;
    t.a = a;
    t.b = b;
    t.exact_a.resize(static_cast<std::size_t>(n));
    t.exact_b.resize(static_cast<std::size_t>(n));
    t.w_a.resize(static_cast<std::size_t>(n));
    t.w_b.resize(static_cast<std::size_t>(n));

    // Derivatives p^(n-1-k) for k = 0..n-1, i.e. orders n-1 down to 0.
    std::vector<RationalPoly> ders(static_cast<std::size_t>(n));
    ders[static_cast<std::size_t>(n) - 1] = spec.poly;  // order 0
    for (int m = n - 2; m >= 0; --m)
        ders[static_cast<std::size_t>(m)] = ders[static_cast<std::size_t>(m) + 1].derivative();
    // ders[k] now holds p^(n-1-k).

    double width = b - a;
    double wpow = width;  // (b-a)^{k+1}
    int sign = 1;
    for (int k = 0; k < n; ++k) {
        const RationalPoly& pd = ders[static_cast<std::size_t>(k)];
        Rational at0 = pd.eval(Rational(0));
        Rational at1 = pd.eval(Rational(1));
        t.exact_a[static_cast<std::size_t>(k)] = Rational(-sign) * at0;
        t.exact_b[static_cast<std::size_t>(k)] = Rational(sign) * at1;
        t.w_a[static_cast<std::size_t>(k)] = t.exact_a[static_cast<std::size_t>(k)].to_double() * wpow;
        t.w_b[static_cast<std::size_t>(k)] = t.exact_b[static_cast<std::size_t>(k)].to_double() * wpow;
        wpow *= width;
        sign = -sign;
    }
    return t;
}

}  // namespace telequad
