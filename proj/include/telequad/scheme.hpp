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

#ifndef TELEQUAD_SCHEME_HPP
#define TELEQUAD_SCHEME_HPP

#include <string>
#include <vector>

#include "telequad/bernoulli.hpp"
#include "telequad/polynomial.hpp"
#include "telequad/rational.hpp"

namespace telequad {

/// Families of telescoping polynomials B_n(x)/n! + c.
enum class Variant {
    Pn,      // c = 0
    Qn,      // c = -B_n/n!, zero endpoint weights on f^{(n-1)} for n >= 2
    Custom,  // any other c
};

std::string variant_name(Variant v);

/// A degree-n endpoint-derivative integration scheme.
///
/// Immutable once constructed; poly always equals B_degree(x)/degree! + c
/// and passes is_telescoping.
struct SchemeSpec {
    int degree;
    Rational c;
    RationalPoly poly;
    Variant variant;
};

/// True iff p^(l)(0) = p^(l)(1) exactly for all 0 <= l <= n-2 (vacuous for n = 1).
///
/// p must have degree n >= 1 and leading coefficient exactly 1/n!,
/// otherwise WrongLeadingCoefficient is thrown.
bool is_telescoping(const RationalPoly& p);

/// Builds the scheme generated by B_n(x)/n! + c. Variant tag is inferred
/// from c; when B_n = 0 (odd n >= 3) the canonical tag is Pn.
SchemeSpec make_scheme(int n, const Rational& c);
SchemeSpec make_scheme(int n, Variant v);

/// Endpoint weights of the single-panel scheme on [a, b].
///
/// For k = 0..n-1 the scheme adds w_a[k]*f^(k)(a) + w_b[k]*f^(k)(b), where
/// w_a[k] = -(-1)^k (b-a)^{k+1} p^(n-1-k)(0) and
/// w_b[k] =  (-1)^k (b-a)^{k+1} p^(n-1-k)(1).
/// exact_a/exact_b hold the signed endpoint factors without the (b-a) power.
struct WeightTable {
    int degree;
    Rational c;
    double a;
    double b;
    std::vector<Rational> exact_a;
    std::vector<Rational> exact_b;
    std::vector<double> w_a;
    std::vector<double> w_b;
};

WeightTable endpoint_weights(const SchemeSpec& spec, double a, double b);

}  // namespace telequad

#endif
