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

#ifndef TELEQUAD_POLYNOMIAL_HPP
#define TELEQUAD_POLYNOMIAL_HPP

#include <string>
#include <vector>

#include "telequad/rational.hpp"

namespace telequad {

/// Dense polynomial with exact rational coefficients.
///
/// Coefficients are stored in ascending powers with no trailing zeros;
/// the zero polynomial has an empty coefficient list and degree -1.
class RationalPoly {
public:
    RationalPoly() = default;
    explicit RationalPoly(std::vector<Rational> ascending_coeffs);

    static RationalPoly constant(const Rational& c);
    /// c * x^k
    static RationalPoly monomial(int k, const Rational& c);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }

    /// Coefficient of x^k; zero outside the stored range.
    const Rational& coeff(int k) const;
    const std::vector<Rational>& coefficients() const { return coeffs_; }

    Rational eval(const Rational& x) const;
    /// Horner evaluation in double precision.
    double eval(double x) const;

    RationalPoly derivative() const;
    /// Antiderivative with constant term 0.
    RationalPoly antiderivative() const;
    Rational definite_integral(const Rational& lo, const Rational& hi) const;

    /// p(alpha + beta x), exact.
    RationalPoly compose_affine(const Rational& alpha, const Rational& beta) const;

    RationalPoly operator-() const;
    friend RationalPoly operator+(const RationalPoly& p, const RationalPoly& q);
    friend RationalPoly operator-(const RationalPoly& p, const RationalPoly& q);
    friend RationalPoly operator*(const RationalPoly& p, const RationalPoly& q);
    RationalPoly scaled(const Rational& s) const;
    RationalPoly plus_constant(const Rational& c) const;

    friend bool operator==(const RationalPoly& p, const RationalPoly& q) { return p.coeffs_ == q.coeffs_; }
    friend bool operator!=(const RationalPoly& p, const RationalPoly& q) { return !(p == q); }

    std::vector<double> double_coefficients() const;

    /// Human-readable form in descending powers, e.g. "x^2 - x + 1/6".
    std::string str() const;

private:
    void trim();
    std::vector<Rational> coeffs_;
};

/// Horner evaluation of double coefficients (ascending powers).
double eval_poly(const std::vector<double>& ascending_coeffs, double x);

}  // namespace telequad

#endif
