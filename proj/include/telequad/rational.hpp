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

#ifndef TELEQUAD_RATIONAL_HPP
#define TELEQUAD_RATIONAL_HPP

#include <gmpxx.h>

#include <compare>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>

namespace telequad {

/// Exact arbitrary-precision rational number.
///
/// Always kept canonical: lowest terms, positive denominator, zero stored
/// as 0/1. Backed by GMP.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(static_cast<signed long>(n)) {}  // NOLINT(google-explicit-constructor)
    Rational(int n) : v_(n) {}                             // NOLINT(google-explicit-constructor)
    Rational(long num, long den) {
        if (den == 0) throw std::domain_error("Rational: zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }
    explicit Rational(mpq_class q) : v_(std::move(q)) { v_.canonicalize(); }

    /// Parses "num", "num/den", decimal not accepted.
    static Rational from_string(const std::string& s) {
        mpq_class q;
        if (q.set_str(s, 10) != 0)
            throw std::domain_error("Rational: cannot parse '" + s + "'");
        if (q.get_den() == 0) throw std::domain_error("Rational: zero denominator in '" + s + "'");
        q.canonicalize();
        return Rational(already_canonical{}, std::move(q));
    }

    static Rational factorial(unsigned long n) {
        mpz_class f;
        mpz_fac_ui(f.get_mpz_t(), n);
        return Rational(already_canonical{}, mpq_class(f));
    }

    static Rational binomial(unsigned long n, unsigned long k) {
        mpz_class b;
        mpz_bin_uiui(b.get_mpz_t(), n, k);
        return Rational(already_canonical{}, mpq_class(b));
    }

    /// 2^k as an exact rational, k may be negative.
    static Rational pow2(long k) {
        mpq_class q(1);
        if (k >= 0)
            mpz_ui_pow_ui(q.get_num().get_mpz_t(), 2, static_cast<unsigned long>(k));
        else
            mpz_ui_pow_ui(q.get_den().get_mpz_t(), 2, static_cast<unsigned long>(-k));
        return Rational(already_canonical{}, std::move(q));
    }

    Rational operator-() const { return Rational(already_canonical{}, mpq_class(-v_)); }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw std::domain_error("Rational: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { a += b; return a; }
    friend Rational operator-(Rational a, const Rational& b) { a -= b; return a; }
    friend Rational operator*(Rational a, const Rational& b) { a *= b; return a; }
    friend Rational operator/(Rational a, const Rational& b) { a /= b; return a; }

    friend bool operator==(const Rational& a, const Rational& b) { return mpq_cmp(a.v_.get_mpq_t(), b.v_.get_mpq_t()) == 0; }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) { return mpq_cmp(a.v_.get_mpq_t(), b.v_.get_mpq_t()) < 0; }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    bool is_zero() const { return sgn(v_) == 0; }
    int sign() const { return sgn(v_); }
    Rational abs() const { return Rational(already_canonical{}, mpq_class(::abs(v_))); }

    /// Integer power, exponent may be negative (then *this must be nonzero).
    Rational pow(long k) const {
        if (k < 0) return (Rational(1) / *this).pow(-k);
        mpq_class r;
        mpz_pow_ui(r.get_num().get_mpz_t(), v_.get_num().get_mpz_t(), static_cast<unsigned long>(k));
        mpz_pow_ui(r.get_den().get_mpz_t(), v_.get_den().get_mpz_t(), static_cast<unsigned long>(k));
        return Rational(already_canonical{}, std::move(r));
    }

    double to_double() const { return v_.get_d(); }

    /// "num/den", or plain "num" when the denominator is 1.
    std::string str() const { return v_.get_str(); }

    const mpq_class& raw() const { return v_; }

private:
    struct already_canonical {};
    Rational(already_canonical, mpq_class q) : v_(std::move(q)) {}
    mpq_class v_;
};

inline std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace telequad

#endif
