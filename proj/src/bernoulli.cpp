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

#include "telequad/bernoulli.hpp"

#include <mutex>
#include <vector>

namespace telequad {

namespace {

// Shared memo for numbers and polynomials. Entry n is computed only after
// all entries below n; computed entries are never mutated.
struct Cache {
    std::mutex mutex;
    std::vector<Rational> numbers;
    std::vector<RationalPoly> polys;
};

Cache& cache() {
    static Cache c;
    return c;
}

void grow_numbers(Cache& c, unsigned n) {
    if (c.numbers.empty()) c.numbers.push_back(Rational(1));
    while (c.numbers.size() <= n) {
        unsigned m = static_cast<unsigned>(c.numbers.size());
        // sum_{k=0}^{m} C(m+1,k) B_k = 0  =>  B_m = -(1/C(m+1,m)) sum_{k<m} C(m+1,k) B_k
        Rational s;
        for (unsigned k = 0; k < m; ++k) s += Rational::binomial(m + 1, k) * c.numbers[k];
        c.numbers.push_back(-s / Rational::binomial(m + 1, m));
    }
}

void grow_polys(Cache& c, unsigned n) {
    grow_numbers(c, n);
    while (c.polys.size() <= n) {
        unsigned m = static_cast<unsigned>(c.polys.size());
        // B_m(x) = sum_{k=0}^{m} C(m,k) B_k x^{m-k}
        std::vector<Rational> coeffs(m + 1);
        for (unsigned k = 0; k <= m; ++k)
            coeffs[m - k] = Rational::binomial(m, k) * c.numbers[k];
        c.polys.emplace_back(std::move(coeffs));
    }
}

}  // namespace

Rational bernoulli_number(unsigned n) {
    Cache& c = cache();
    std::lock_guard<std::mutex> lock(c.mutex);
    grow_numbers(c, n);
    return c.numbers[n];
}

RationalPoly bernoulli_poly(unsigned n) {
    Cache& c = cache();
    std::lock_guard<std::mutex> lock(c.mutex);
    grow_polys(c, n);
    return c.polys[n];
}

RationalPoly scheme_polynomial(unsigned n, const Rational& c) {
    return bernoulli_poly(n).scaled(Rational(1) / Rational::factorial(n)).plus_constant(c);
}

}  // namespace telequad
