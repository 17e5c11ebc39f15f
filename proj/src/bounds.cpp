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

#include "telequad/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <utility>

#include "telequad/bernoulli.hpp"
#include "telequad/errors.hpp"

namespace telequad {

namespace {

constexpr int kRootScanPoints = 1024;
constexpr double kRootBisectTol = 1e-14;
constexpr double kNormQuadTol = 1e-12;

double bisect_root(const std::vector<double>& coeffs, double lo, double hi) {
    double flo = eval_poly(coeffs, lo);
    for (int iter = 0; iter < 200 && hi - lo > kRootBisectTol; ++iter) {
        double mid = 0.5 * (lo + hi);
        double fmid = eval_poly(coeffs, mid);
        if (fmid == 0.0) return mid;
        if ((flo < 0.0) != (fmid < 0.0)) {
            hi = mid;
        } else {
            lo = mid;
            flo = fmid;
        }
    }
    return 0.5 * (lo + hi);
}

std::vector<double> roots_in_open_unit_interval(const std::vector<double>& coeffs) {
    std::vector<double> roots;
    if (coeffs.size() <= 1) return roots;  // constants have no isolated roots
    double prev_x = 0.0;
    double prev_v = eval_poly(coeffs, 0.0);
    for (int i = 1; i <= kRootScanPoints; ++i) {
        double x = static_cast<double>(i) / kRootScanPoints;
        double v = eval_poly(coeffs, x);
        if (v == 0.0) {
            if (x < 1.0) roots.push_back(x);
        } else if (prev_v == 0.0) {
            // root recorded at the previous sample
        } else if ((prev_v < 0.0) != (v < 0.0)) {
            double r = bisect_root(coeffs, prev_x, x);
            if (r > 0.0 && r < 1.0) roots.push_back(r);
        }
        prev_x = x;
        prev_v = v;
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

// Adaptive Simpson on [lo, hi] with absolute tolerance tol.
double adaptive_simpson(const std::function<double(double)>& f, double lo, double hi, double flo, double fmid,
                        double fhi, double whole, double tol, int depth) {
    double mid = 0.5 * (lo + hi);
    double lmid = 0.5 * (lo + mid);
    double rmid = 0.5 * (mid + hi);
    double flmid = f(lmid);
    double frmid = f(rmid);
    double left = (mid - lo) / 6.0 * (flo + 4.0 * flmid + fmid);
    double right = (hi - mid) / 6.0 * (fmid + 4.0 * frmid + fhi);
    double delta = left + right - whole;
    if (depth <= 0 || std::abs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
    return adaptive_simpson(f, lo, mid, flo, flmid, fmid, left, 0.5 * tol, depth - 1) +
           adaptive_simpson(f, mid, hi, fmid, frmid, fhi, right, 0.5 * tol, depth - 1);
}

double integrate_adaptive(const std::function<double(double)>& f, double lo, double hi, double tol) {
    double flo = f(lo);
    double fhi = f(hi);
    double fmid = f(0.5 * (lo + hi));
    double whole = (hi - lo) / 6.0 * (flo + 4.0 * fmid + fhi);
    return adaptive_simpson(f, lo, hi, flo, fmid, fhi, whole, tol, 48);
}

double sup_norm_by_critical_points(const RationalPoly& p) {
    std::vector<double> coeffs = p.double_coefficients();
    double best = std::max(std::abs(p.eval(Rational(0)).to_double()), std::abs(p.eval(Rational(1)).to_double()));
    for (double r : roots_in_open_unit_interval(p.derivative().double_coefficients()))
        best = std::max(best, std::abs(eval_poly(coeffs, r)));
    return best;
}

}  // namespace

std::string norm_method_name(NormMethod m) {
    switch (m) {
        case NormMethod::ExactClosedForm: return "exact-closed-form";
        case NormMethod::NumericAdaptive: return "numeric-adaptive";
        case NormMethod::CriticalPoint: return "critical-point";
    }
    return "?";
}

std::vector<double> real_roots_in_unit_interval(const RationalPoly& p) {
    return roots_in_open_unit_interval(p.double_coefficients());
}

bool has_root_in_unit_interval(const RationalPoly& p) {
    if (p.eval(Rational(0)).is_zero() || p.eval(Rational(1)).is_zero()) return true;
    if (!real_roots_in_unit_interval(p).empty()) return true;
    // Tangential near-zeros that sign scanning cannot bracket.
    std::vector<double> coeffs = p.double_coefficients();
    double scale = sup_norm_by_critical_points(p);
    if (scale == 0.0) return true;  // zero polynomial
    for (double r : roots_in_open_unit_interval(p.derivative().double_coefficients()))
        if (std::abs(eval_poly(coeffs, r)) <= 1e-13 * scale) return true;
    return false;
}

NormResult norm_numeric(const RationalPoly& p, const Exponent& r) {
    NormResult res;
    if (r.is_inf()) {
        res.method = NormMethod::CriticalPoint;
        res.value = sup_norm_by_critical_points(p);
        return res;
    }
    res.method = NormMethod::NumericAdaptive;
    double scale = sup_norm_by_critical_points(p);
    if (scale == 0.0) {
        res.value = 0.0;
        return res;
    }
    std::vector<double> coeffs = p.double_coefficients();
    double rr = r.value();
    auto g = [&coeffs, scale, rr](double x) { return std::pow(std::abs(eval_poly(coeffs, x) / scale), rr); };

    std::vector<double> cuts = real_roots_in_unit_interval(p);
    cuts.insert(cuts.begin(), 0.0);
    cuts.push_back(1.0);
    double tol = kNormQuadTol / static_cast<double>(cuts.size() - 1);
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i)
        if (cuts[i + 1] > cuts[i]) total += integrate_adaptive(g, cuts[i], cuts[i + 1], tol);
    res.value = scale * std::pow(total, 1.0 / rr);
    return res;
}

std::optional<NormResult> norm_exact(const SchemeSpec& spec, const Exponent& r) {
    if (spec.variant == Variant::Custom) return std::nullopt;
    int n = spec.degree;
    unsigned un = static_cast<unsigned>(n);
    bool even = (n % 2 == 0);
    bool is_pn = (spec.variant == Variant::Pn);

    NormResult res;
    res.method = NormMethod::ExactClosedForm;

    if (!r.is_inf() && r.value() == 1.0) {
        if (!is_pn && even) {
            Rational v = (bernoulli_number(un) / Rational::factorial(un)).abs();
            res.exact = ExactNormInfo{"prop-4.2a", v, std::nullopt};
            res.value = v.to_double();
            return res;
        }
        if (is_pn && !even) {
            // 2|int_0^{1/2} p_n| with the half-interval identity for B_{n+1}.
            Rational v = (Rational::pow2(n + 1) - Rational(1)) * bernoulli_number(un + 1).abs() /
                         (Rational::factorial(un) * Rational(n + 1) * Rational::pow2(n - 1));
            res.exact = ExactNormInfo{"prop-4.2b", v, std::nullopt};
            res.value = v.to_double();
            return res;
        }
        return std::nullopt;
    }

    if (!r.is_inf() && r.value() == 2.0) {
        Rational sq = (bernoulli_number(2 * un) / Rational::factorial(2 * un)).abs();
        if (!is_pn) {
            Rational qc = bernoulli_number(un) / Rational::factorial(un);
            sq += qc * qc;
        }
        res.exact = ExactNormInfo{"prop-4.2c", std::nullopt, sq};
        res.value = std::sqrt(sq.to_double());
        return res;
    }

    if (r.is_inf() && even) {
        Rational v;
        if (is_pn) {
            v = (bernoulli_number(un) / Rational::factorial(un)).abs();
        } else {
            v = ((spec.poly.eval(Rational(1, 2)))).abs();
        }
        res.exact = ExactNormInfo{"prop-4.2d", v, std::nullopt};
        res.value = v.to_double();
        return res;
    }

    return std::nullopt;
}

NormResult scheme_norm(const SchemeSpec& spec, const Exponent& r) {
    if (auto e = norm_exact(spec, r)) return *e;
    return norm_numeric(spec.poly, r);
}

double panel_error_bound(const SchemeSpec& spec, const HolderPair& hp, double fn_norm, double a, double b) {
    if (!(a < b)) throw DegenerateInterval("panel_error_bound: requires a < b");
    if (fn_norm < 0.0) throw Error("panel_error_bound: fn_norm must be >= 0");
    double width = b - a;
    return std::pow(width, spec.degree + hp.r.reciprocal()) * scheme_norm(spec, hp.r).value * fn_norm;
}

double composite_error_bound(const SchemeSpec& spec, const HolderPair& hp, double fn_norm_total,
                             const Interval& iv) {
    return panel_error_bound(spec, hp, fn_norm_total, iv.a, iv.b) /
           std::pow(static_cast<double>(iv.panels), spec.degree);
}

VariationResult total_variation(const RationalPoly& p) {
    VariationResult res;
    res.breakpoints.push_back(0.0);
    for (double r : roots_in_open_unit_interval(p.derivative().double_coefficients()))
        res.breakpoints.push_back(r);
    res.breakpoints.push_back(1.0);

    std::vector<double> coeffs = p.double_coefficients();
    double prev = eval_poly(coeffs, 0.0);
    for (std::size_t i = 1; i < res.breakpoints.size(); ++i) {
        double cur = eval_poly(coeffs, res.breakpoints[i]);
        res.value += std::abs(cur - prev);
        prev = cur;
    }
    return res;
}

namespace {

// Ternary search for the maximum of g on [lo, hi] (locally unimodal window).
double refine_max(const std::function<double(double)>& g, double lo, double hi) {
    while (hi - lo > 1e-10) {
        double m1 = lo + (hi - lo) / 3.0;
        double m2 = hi - (hi - lo) / 3.0;
        if (g(m1) < g(m2))
            lo = m1;
        else
            hi = m2;
    }
    return g(0.5 * (lo + hi));
}

}  // namespace

double alexiewicz_norm(const Integrand& f, int order, double a, double b, int samples) {
    if (order < 1 || f.max_order() < order - 1)
        throw InsufficientDerivativeOrder("alexiewicz_norm: integrand must supply derivative order n-1");
    if (samples < 2) throw Error("alexiewicz_norm: needs at least 2 samples");
    auto g = [&f, order](double x) { return f.derivative(order - 1, x); };

    double h = (b - a) / (samples - 1);
    double best_max = -std::numeric_limits<double>::infinity();
    double best_min = std::numeric_limits<double>::infinity();
    int arg_max = 0;
    int arg_min = 0;
    for (int i = 0; i < samples; ++i) {
        double x = (i == samples - 1) ? b : a + i * h;
        double v = g(x);
        if (v > best_max) {
            best_max = v;
            arg_max = i;
        }
        if (v < best_min) {
            best_min = v;
            arg_min = i;
        }
    }
    auto window = [&](int i) {
        double lo = std::max(a, a + (i - 1) * h);
        double hi = std::min(b, a + (i + 1) * h);
        return std::pair<double, double>(lo, hi);
    };
    auto [max_lo, max_hi] = window(arg_max);
    auto [min_lo, min_hi] = window(arg_min);
    double refined_max = std::max(best_max, refine_max(g, max_lo, max_hi));
    double refined_min = -std::max(-best_min, refine_max([&g](double x) { return -g(x); }, min_lo, min_hi));
    return refined_max - refined_min;
}

double distributional_bound(const SchemeSpec& spec, const Integrand& f, const Interval& iv) {
    if (!has_root_in_unit_interval(spec.poly))
        throw NoRootInUnitInterval("distributional_bound: scheme polynomial has no root in [0,1]");
    int n = spec.degree;
    double alex = alexiewicz_norm(f, n, iv.a, iv.b);
    // Eqs. for the composite estimate use the variation of p_n itself
    // (constant shifts do not change variation).
    double variation = total_variation(scheme_polynomial(static_cast<unsigned>(n), Rational(0))).value;
    return std::pow(iv.b - iv.a, n) / std::pow(static_cast<double>(iv.panels), n - 1) * alex * variation;
}

AsymptoticKind parse_asymptotic_kind(const std::string& name) {
    if (name == "pn_inf") return AsymptoticKind::PnInf;
    if (name == "q2n_inf") return AsymptoticKind::Q2nInf;
    if (name == "pn_1") return AsymptoticKind::Pn1;
    if (name == "q2n_1") return AsymptoticKind::Q2n1;
    if (name == "pn_r_even") return AsymptoticKind::PnREven;
    if (name == "pn_r_odd") return AsymptoticKind::PnROdd;
    if (name == "variation_pn") return AsymptoticKind::VariationPn;
    throw UnknownKind("unknown asymptotic kind '" + name + "'");
}

std::string asymptotic_kind_name(AsymptoticKind kind) {
    switch (kind) {
        case AsymptoticKind::PnInf: return "pn_inf";
        case AsymptoticKind::Q2nInf: return "q2n_inf";
        case AsymptoticKind::Pn1: return "pn_1";
        case AsymptoticKind::Q2n1: return "q2n_1";
        case AsymptoticKind::PnREven: return "pn_r_even";
        case AsymptoticKind::PnROdd: return "pn_r_odd";
        case AsymptoticKind::VariationPn: return "variation_pn";
    }
    throw UnknownKind("unknown asymptotic kind");
}

double wallis(int r) {
    if (r < 2) throw Error("wallis: requires r >= 2");
    if (r % 2 == 0) {
        double v = std::acos(-1.0) / 2.0;
        for (int i = 2; i <= r; i += 2) v *= static_cast<double>(i - 1) / i;
        return v;
    }
    double v = 1.0;
    for (int i = 3; i <= r; i += 2) v *= static_cast<double>(i - 1) / i;
    return v;
}

double asymptotic_estimate(AsymptoticKind kind, int n, std::optional<int> r) {
    if (n < 1) throw Error("asymptotic_estimate: degree must be >= 1");
    const double two_pi = 2.0 * std::acos(-1.0);
    double decay = std::pow(two_pi, -n);
    switch (kind) {
        case AsymptoticKind::PnInf: return 2.0 * decay;
        case AsymptoticKind::Q2nInf:
            if (n % 2 != 0) throw Error("asymptotic_estimate: q2n kinds require even degree");
            return 4.0 * decay;
        case AsymptoticKind::Pn1: return 8.0 * decay / two_pi;
        case AsymptoticKind::Q2n1:
            if (n % 2 != 0) throw Error("asymptotic_estimate: q2n kinds require even degree");
            return 2.0 * decay;
        case AsymptoticKind::PnREven:
        case AsymptoticKind::PnROdd: {
            if (!r) throw Error("asymptotic_estimate: pn_r kinds require r");
            int rr = *r;
            bool want_even = (kind == AsymptoticKind::PnREven);
            if (rr < 2 || (rr % 2 == 0) != want_even)
                throw Error("asymptotic_estimate: r has wrong parity for kind");
            // ||p_n||_r ~ (2/(2pi)^n) (int_0^1 |cos(2pi x)|^r dx)^{1/r},
            // and the cosine moment equals (2/pi) wallis(r).
            double moment = 2.0 / std::acos(-1.0) * wallis(rr);
            return 2.0 * decay * std::pow(moment, 1.0 / rr);
        }
        case AsymptoticKind::VariationPn: return 8.0 * decay;
    }
    throw UnknownKind("asymptotic_estimate: unknown kind");
}

}  // namespace telequad
