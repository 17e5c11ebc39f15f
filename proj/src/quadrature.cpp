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

#include "telequad/quadrature.hpp"

#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

#include "telequad/reference.hpp"

namespace telequad {

namespace {

// Signed endpoint factors converted to double and scaled by h^{k+1},
// computed once per (spec, h); h-powers by repeated multiplication.
struct PanelWeights {
    int degree;
    std::vector<double> w_a;
    std::vector<double> w_b;
};

PanelWeights scaled_weights(const SchemeSpec& spec, double h) {
    int n = spec.degree;
    PanelWeights w;
    w.degree = n;
    w.w_a.resize(static_cast<std::size_t>(n));
    w.w_b.resize(static_cast<std::size_t>(n));

    std::vector<RationalPoly> ders(static_cast<std::size_t>(n));
    ders[static_cast<std::size_t>(n) - 1] = spec.poly;
    for (int m = n - 2; m >= 0; --m)
        ders[static_cast<std::size_t>(m)] = ders[static_cast<std::size_t>(m) + 1].derivative();

    double hpow = h;
    int sign = 1;
    for (int k = 0; k < n; ++k) {
        const RationalPoly& pd = ders[static_cast<std::size_t>(k)];
        w.w_a[static_cast<std::size_t>(k)] = (Rational(-sign) * pd.eval(Rational(0))).to_double() * hpow;
        w.w_b[static_cast<std::size_t>(k)] = (Rational(sign) * pd.eval(Rational(1))).to_double() * hpow;
        hpow *= h;
        sign = -sign;
    }
    return w;
}

double apply_weights(const PanelWeights& w, const Integrand& f, double left, double right) {
    double acc = 0.0;
    for (int k = 0; k < w.degree; ++k) {
        acc += w.w_a[static_cast<std::size_t>(k)] * f.derivative(k, left);
        acc += w.w_b[static_cast<std::size_t>(k)] * f.derivative(k, right);
    }
    return acc;
}

void require_order(const Integrand& f, int order, const char* who) {
    if (f.max_order() < order)
        throw InsufficientDerivativeOrder(std::string(who) + ": integrand supplies derivatives up to order " +
                                          std::to_string(f.max_order()) + ", need " + std::to_string(order));
}

int threads_from_env() {
    const char* s = std::getenv("TELEQUAD_THREADS");
    if (s == nullptr) return 1;
    int n = std::atoi(s);
    if (n <= 0) return 1;
    return n;
}

}  // namespace

double pairwise_sum(std::span<const double> values) {
    std::size_t n = values.size();
    if (n == 0) return 0.0;
    if (n == 1) return values[0];
    if (n == 2) return values[0] + values[1];
    std::size_t half = n / 2;
    return pairwise_sum(values.first(half)) + pairwise_sum(values.subspan(half));
}

double panel_apply(const SchemeSpec& spec, const Integrand& f, double a, double b) {
    if (a == b) return 0.0;
    if (!(a < b)) throw DegenerateInterval("panel_apply: requires a <= b");
    require_order(f, spec.degree - 1, "panel_apply");
    return apply_weights(scaled_weights(spec, b - a), f, a, b);
}

QuadratureReport composite_apply(const SchemeSpec& spec, const Integrand& f, const Interval& iv) {
    require_order(f, spec.degree - 1, "composite_apply");
    const double h = iv.h();
    const PanelWeights w = scaled_weights(spec, h);
    const std::size_t n_panels = static_cast<std::size_t>(iv.panels);

    std::vector<double> panel_values(n_panels);
    auto run = [&](std::size_t lo, std::size_t hi) {
        for (std::size_t k = lo; k < hi; ++k) {
            double left = iv.a + static_cast<double>(k) * h;
            double right = iv.a + static_cast<double>(k + 1) * h;
            panel_values[k] = apply_weights(w, f, left, right);
        }
    };

    int want = threads_from_env();
    if (want > 1 && n_panels >= 2 * static_cast<std::size_t>(want)) {
        std::vector<std::thread> pool;
        std::size_t chunk = (n_panels + static_cast<std::size_t>(want) - 1) / static_cast<std::size_t>(want);
        for (std::size_t lo = 0; lo < n_panels; lo += chunk)
            pool.emplace_back(run, lo, std::min(lo + chunk, n_panels));
        for (auto& t : pool) t.join();
    } else {
        run(0, n_panels);
    }

    QuadratureReport rep;
    rep.value = pairwise_sum(panel_values);
    rep.degree = spec.degree;
    rep.c = spec.c;
    rep.variant = spec.variant;
    rep.a = iv.a;
    rep.b = iv.b;
    rep.panels = iv.panels;
    return rep;
}

QuadratureReport euler_maclaurin(int n, const Rational& c, const Integrand& f, const Interval& iv) {
    if (n < 2) throw Error("euler_maclaurin: requires degree n >= 2");
    require_order(f, n - 1, "euler_maclaurin");
    const double h = iv.h();
    const double a = iv.a;
    const double b = iv.b;

    double value = h * 0.5 * (f(a) + f(b));
    if (iv.panels > 1) {
        std::vector<double> interior(static_cast<std::size_t>(iv.panels) - 1);
        for (int k = 1; k < iv.panels; ++k)
            interior[static_cast<std::size_t>(k) - 1] = f(a + static_cast<double>(k) * h);
        value += h * pairwise_sum(interior);
    }

    // Interior derivative corrections telescope across panels.
    double hpow = h * h;  // h^k starting at k = 2
    for (int k = 2; k <= n - 1; ++k) {
        Rational bk = bernoulli_number(static_cast<unsigned>(k));
        if (!bk.is_zero()) {
            double coeff = (bk / Rational::factorial(static_cast<unsigned>(k))).to_double();
            value += coeff * hpow * (f.derivative(k - 1, a) - f.derivative(k - 1, b));
        }
        hpow *= h;
    }

    // Order-n term: expanding the composite rule for p = B_n/n! + c gives
    // (-1)^n h^n (B_n/n! + c)(f^(n-1)(a) - f^(n-1)(b)), which subsumes the
    // k = n correction and the c contribution.
    Rational top = bernoulli_number(static_cast<unsigned>(n)) / Rational::factorial(static_cast<unsigned>(n)) + c;
    if (!top.is_zero()) {
        double sign = (n % 2 == 0) ? 1.0 : -1.0;
        value += sign * hpow * top.to_double() * (f.derivative(n - 1, a) - f.derivative(n - 1, b));
    }

    QuadratureReport rep;
    rep.value = value;
    rep.degree = n;
    rep.c = c;
    rep.variant = make_scheme(n, c).variant;
    rep.a = iv.a;
    rep.b = iv.b;
    rep.panels = iv.panels;
    return rep;
}

double error_actual(const SchemeSpec& spec, const Integrand& f, const Interval& iv, double tol) {
    double reference = reference_integral(f, iv.a, iv.b, tol);
    return reference - composite_apply(spec, f, iv).value;
}

}  // namespace telequad
