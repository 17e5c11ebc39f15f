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

#ifndef TELEQUAD_BOUNDS_HPP
#define TELEQUAD_BOUNDS_HPP

#include <optional>
#include <string>
#include <vector>

#include "telequad/holder.hpp"
#include "telequad/integrand.hpp"
#include "telequad/polynomial.hpp"
#include "telequad/quadrature.hpp"
#include "telequad/scheme.hpp"

namespace telequad {

enum class NormMethod { ExactClosedForm, NumericAdaptive, CriticalPoint };

std::string norm_method_name(NormMethod m);

/// Closed-form record attached to an exactly known norm.
struct ExactNormInfo {
    std::string formula;               // which closed form applied
    std::optional<Rational> value;     // present when the norm is rational
    std::optional<Rational> squared;   // present when the norm is sqrt(rational)
};

struct NormResult {
    double value = 0.0;
    NormMethod method = NormMethod::NumericAdaptive;
    std::optional<ExactNormInfo> exact;
};

/// L^r norm of p over [0,1], r in [1, inf].
///
/// r = inf enumerates critical points exactly; finite r integrates |p|^r by
/// adaptive Simpson split at the real roots of p (where |p|^r loses
/// smoothness). The integrand is scaled by ||p||_inf so the 1e-12 absolute
/// tolerance acts at unit scale.
NormResult norm_numeric(const RationalPoly& p, const Exponent& r);

/// Closed forms for ||p_n||_r and ||q_n||_r where available:
/// (a) ||q_n||_1, n even; (b) ||p_n||_1, n odd; (c) r = 2, both variants;
/// (d) r = inf, n even, both variants. Absent otherwise.
std::optional<NormResult> norm_exact(const SchemeSpec& spec, const Exponent& r);

/// norm_exact when available, norm_numeric otherwise.
NormResult scheme_norm(const SchemeSpec& spec, const Exponent& r);

/// (b-a)^{n+1/r} ||p||_r fn_norm, the single-panel error bound.
/// fn_norm is the caller-supplied ||f^(n)||_s over [a, b].
double panel_error_bound(const SchemeSpec& spec, const HolderPair& hp, double fn_norm, double a, double b);

/// (b-a)^{n+1/r} N^{-n} ||p||_r fn_norm_total, the composite error bound.
double composite_error_bound(const SchemeSpec& spec, const HolderPair& hp, double fn_norm_total,
                             const Interval& iv);

struct VariationResult {
    double value = 0.0;
    std::vector<double> breakpoints;  // {0, interior critical points, 1}
};

/// Total variation of p on [0,1] from critical-point enumeration.
VariationResult total_variation(const RationalPoly& p);

/// max - min of f^(order-1) over [a, b]: the Alexiewicz norm of f^(order)
/// computed through its primitive. Dense sampling plus local ternary
/// refinement to 1e-10.
double alexiewicz_norm(const Integrand& f, int order, double a, double b, int samples = 4097);

/// ((b-a)^n / N^{n-1}) ||f^(n)||_A V_[0,1](p_n); requires spec.poly to have
/// a real root in [0,1] (true for both p_n and q_n). The variation is that
/// of p_n with c = 0 regardless of spec.c.
double distributional_bound(const SchemeSpec& spec, const Integrand& f, const Interval& iv);

enum class AsymptoticKind {
    PnInf,        // ||p_n||_inf   ~ 2/(2pi)^n
    Q2nInf,       // ||q_n||_inf   ~ 4/(2pi)^n, n even
    Pn1,          // ||p_n||_1     ~ 8/(2pi)^{n+1}
    Q2n1,         // ||q_n||_1     ~ 2/(2pi)^n, n even
    PnREven,      // ||p_n||_r, r >= 2 even
    PnROdd,       // ||p_n||_r, r >= 3 odd
    VariationPn,  // V_[0,1] p_n   ~ 8/(2pi)^n
};

/// Parses "pn_inf", "q2n_inf", "pn_1", "q2n_1", "pn_r_even", "pn_r_odd",
/// "variation_pn"; throws UnknownKind otherwise.
AsymptoticKind parse_asymptotic_kind(const std::string& name);
std::string asymptotic_kind_name(AsymptoticKind kind);

/// Large-n closed-form estimate for the given kind at degree n (r required
/// for the pn_r_* kinds).
double asymptotic_estimate(AsymptoticKind kind, int n, std::optional<int> r = std::nullopt);

/// Wallis integral over [0, pi/2] of cos^r, r >= 2 integer.
double wallis(int r);

/// Real roots of p strictly inside (0, 1), ascending. 1024-point sampling,
/// sign-change bracketing, bisection to 1e-14.
std::vector<double> real_roots_in_unit_interval(const RationalPoly& p);

/// Whether p vanishes somewhere on [0, 1] (endpoints checked exactly).
bool has_root_in_unit_interval(const RationalPoly& p);

}  // namespace telequad

#endif
