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

#ifndef TELEQUAD_QUADRATURE_HPP
#define TELEQUAD_QUADRATURE_HPP

#include <optional>
#include <span>

#include "telequad/holder.hpp"
#include "telequad/integrand.hpp"
#include "telequad/scheme.hpp"

namespace telequad {

/// [a, b] split into N equal panels of width h = (b-a)/N.
struct Interval {
    double a;
    double b;
    int panels;

    Interval(double a_, double b_, int n) : a(a_), b(b_), panels(n) {
        if (!(a < b)) throw DegenerateInterval("Interval: requires a < b");
        if (n < 1) throw Error("Interval: needs at least one panel");
    }

    double h() const { return (b - a) / panels; }
};

struct QuadratureReport {
    double value = 0.0;
    std::optional<double> bound;
    std::optional<double> reference;
    std::optional<double> actual_error;  // reference - value
    int degree = 0;
    Rational c;
    Variant variant = Variant::Custom;
    double a = 0.0;
    double b = 0.0;
    int panels = 1;
    std::optional<HolderPair> bound_exponents;
};

/// Deterministic pairwise (tree) reduction; splits at floor(size/2).
double pairwise_sum(std::span<const double> values);

/// Single-panel application of the scheme on [a, b] (h = b - a).
double panel_apply(const SchemeSpec& spec, const Integrand& f, double a, double b);

/// Composite rule: sum of panel applications over iv.panels equal panels,
/// combined by pairwise reduction. Panels are evaluated in parallel when
/// TELEQUAD_THREADS asks for it; the combination order never changes.
QuadratureReport composite_apply(const SchemeSpec& spec, const Integrand& f, const Interval& iv);

/// Closed-form Euler-Maclaurin-type evaluation of the composite rule for
/// the scheme B_n(x)/n! + c; n >= 2. Agrees with composite_apply to
/// roundoff-level tolerance.
QuadratureReport euler_maclaurin(int n, const Rational& c, const Integrand& f, const Interval& iv);

/// reference integral minus composite value (the realized error E^N).
double error_actual(const SchemeSpec& spec, const Integrand& f, const Interval& iv, double tol);

}  // namespace telequad

#endif
