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

#include "telequad/polynomial.hpp"

#include <sstream>

namespace telequad {

namespace {
const Rational kZero{};
}

RationalPoly::RationalPoly(std::vector<Rational> ascending_coeffs) : coeffs_(std::move(ascending_coeffs)) {
    trim();
}

void RationalPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

RationalPoly RationalPoly::constant(const Rational& c) {
    return RationalPoly(std::vector<Rational>{c});
}

RationalPoly RationalPoly::monomial(int k, const Rational& c) {
    std::vector<Rational> v(static_cast<std::size_t>(k) + 1);
    v.back() = c;
    return RationalPoly(std::move(v));
}

const Rational& RationalPoly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) return kZero;
    return coeffs_[static_cast<std::size_t>(k)];
}

Rational RationalPoly::eval(const Rational& x) const {
    Rational r;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) r = r * x + *it;
    return r;
}

double RationalPoly::eval(double x) const {
    double r = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) r = r * x + it->to_double();
    return r;
}

RationalPoly RationalPoly::derivative() const {
    if (coeffs_.size() <= 1) return RationalPoly();
    std::vector<Rational> d(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * Rational(static_cast<long>(i));
    return RationalPoly(std::move(d));
}

RationalPoly RationalPoly::antiderivative() const {
    if (coeffs_.empty()) return RationalPoly();
    std::vector<Rational> a(coeffs_.size() + 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        a[i + 1] = coeffs_[i] / Rational(static_cast<long>(i) + 1);
    return RationalPoly(std::move(a));
}

Rational RationalPoly::definite_integral(const Rational& lo, const Rational& hi) const {
    RationalPoly a = antiderivative();
    return a.eval(hi) - a.eval(lo);
}

RationalPoly RationalPoly::compose_affine(const Rational& alpha, const Rational& beta) const {
    // Horner in the polynomial ring: p(alpha + beta x)
    RationalPoly result;
    RationalPoly arg(std::vector<Rational>{alpha, beta});
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        result = result * arg + RationalPoly::constant(*it);
    return result;
}

RationalPoly RationalPoly::operator-() const {
    std::vector<Rational> v(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i] = -coeffs_[i];
    return RationalPoly(std::move(v));
}

RationalPoly operator+(const RationalPoly& p, const RationalPoly& q) {
    std::vector<Rational> v(std::max(p.coeffs_.size(), q.coeffs_.size()));
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = p.coeff(static_cast<int>(i)) + q.coeff(static_cast<int>(i));
    return RationalPoly(std::move(v));
}

RationalPoly operator-(const RationalPoly& p, const RationalPoly& q) {
    return p + (-q);
}

RationalPoly operator*(const RationalPoly& p, const RationalPoly& q) {
    if (p.is_zero() || q.is_zero()) return RationalPoly();
    std::vector<Rational> v(p.coeffs_.size() + q.coeffs_.size() - 1);
    for (std::size_t i = 0; i < p.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < q.coeffs_.size(); ++j) v[i + j] += p.coeffs_[i] * q.coeffs_[j];
    return RationalPoly(std::move(v));
}

RationalPoly RationalPoly::scaled(const Rational& s) const {
    std::vector<Rational> v(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i] = coeffs_[i] * s;
    return RationalPoly(std::move(v));
}

RationalPoly RationalPoly::plus_constant(const Rational& c) const {
    std::vector<Rational> v = coeffs_;
    if (v.empty()) v.resize(1);
    v[0] += c;
    return RationalPoly(std::move(v));
}

std::vector<double> RationalPoly::double_coefficients() const {
    std::vector<double> v(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i] = coeffs_[i].to_double();
    return v;
}

std::string RationalPoly::str() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        const Rational& c = coeff(k);
        if (c.is_zero()) continue;
        Rational mag = c.abs();
        if (first) {
            if (c.sign() < 0) os << "-";
            first = false;
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        bool unit = (mag == Rational(1));
        if (k == 0) {
            os << mag.str();
        } else {
            if (!unit) os << mag.str() << "*";
            os << "x";
            if (k > 1) os << "^" << k;
        }
    }
    return os.str();
}

double eval_poly(const std::vector<double>& ascending_coeffs, double x) {
    double r = 0.0;
    for (auto it = ascending_coeffs.rbegin(); it != ascending_coeffs.rend(); ++it) r = r * x + *it;
    return r;
}

}  // namespace telequad
