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

#ifndef TELEQUAD_BERNOULLI_HPP
#define TELEQUAD_BERNOULLI_HPP

#include "telequad/polynomial.hpp"
#include "telequad/rational.hpp"

namespace telequad {

/// n-th Bernoulli number B_n = B_n(0), exact. B_1 = -1/2; B_n = 0 for odd n > 1.
///
/// Computed from the recursion sum_{k=0}^{n} C(n+1,k) B_k = 0 and memoized;
/// the cache is internally synchronized and entries are immutable.
Rational bernoulli_number(unsigned n);

/// n-th Bernoulli polynomial B_n(x), exact, with leading coefficient 1.
RationalPoly bernoulli_poly(unsigned n);

/// B_n(x)/n! + c, the degree-n telescoping polynomial with constant offset c.
RationalPoly scheme_polynomial(unsigned n, const Rational& c);

}  // namespace telequad

#endif
