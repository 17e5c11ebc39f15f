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

#include "telequad/witness.hpp"

#include <cmath>

#include "telequad/quadrature.hpp"

namespace telequad {

SampledFunction::SampledFunction(double a_, double b_, std::vector<double> v)
    : a(a_), b(b_), values(std::move(v)) {
    if (values.size() < 2) throw InsufficientGrid("SampledFunction: needs at least 2 samples");
    if (!(a < b)) throw DegenerateInterval("SampledFunction: requires a < b");
}

double SampledFunction::operator()(double x) const {
    double h = step();
    double t = (x - a) / h;
    auto last = static_cast<double>(values.size() - 1);
    if (t <= 0.0) return values.front();
    if (t >= last) return values.back();
    auto i = static_cast<std::size_t>(t);
    double frac = t - static_cast<double>(i);
    return values[i] + frac * (values[i + 1] - values[i]);
}

double DeltaSpike::operator()(double x) const {
    double d = std::abs(x - center);
    double hw = half_width();
    double edge_tol = hw * 1e-9;
    if (d < hw - edge_tol) return height();
    if (d <= hw + edge_tol) return 0.5 * height();
    return 0.0;
}

DeltaSpike delta_spike_at_maximizer(const RationalPoly& p, int k) {
    if (k < 1) throw Error("delta_spike_at_maximizer: k must be >= 1");
    std::vector<double> candidates{0.0};
    for (double r : real_roots_in_unit_interval(p.derivative())) candidates.push_back(r);
    candidates.push_back(1.0);
    std::vector<double> coeffs = p.double_coefficients();
    double best_x = 0.0;
    double best_v = -1.0;
    for (double x : candidates) {
        double v = std::abs(eval_poly(coeffs, x));
        if (v > best_v + 1e-15 * best_v) {
            best_v = v;
            best_x = x;
        }
    }
    bool at_end = (best_x == 0.0 || best_x == 1.0);
    return DeltaSpike{best_x, k, at_end};
}

SampledIntegrand::SampledIntegrand(double a_, double b_, std::vector<std::vector<double>> tables)
    : a_(a_), b_(b_), tables_(std::make_shared<const std::vector<std::vector<double>>>(std::move(tables))) {
    if (tables_->empty()) throw Error("SampledIntegrand: empty table chain");
}

const std::vector<double>& SampledIntegrand::table(int derivative_order) const {
    return tables_->at(static_cast<std::size_t>(derivative_order));
}

Integrand SampledIntegrand::as_integrand() const {
    std::vector<Integrand::Evaluator> evals;
    evals.reserve(tables_->size());
    for (std::size_t j = 0; j < tables_->size(); ++j) {
        SampledFunction fn(a_, b_, (*tables_)[j]);
        evals.emplace_back([fn = std::move(fn)](double x) { return fn(x); });
    }
    return Integrand(a_, b_, std::move(evals));
}

double SampledIntegrand::integral() const {
    const std::vector<double>& f = (*tables_)[0];
    double h = (b_ - a_) / static_cast<double>(f.size() - 1);
    std::vector<double> cells(f.size() - 1);
    for (std::size_t i = 0; i + 1 < f.size(); ++i) cells[i] = 0.5 * h * (f[i] + f[i + 1]);
    return pairwise_sum(cells);
}

SampledIntegrand antidifferentiate_chain(const SampledFunction& g, int n, const std::vector<double>& seeds) {
    if (n < 1) throw Error("antidifferentiate_chain: n must be >= 1");
    std::size_t m = g.size();
    double h = g.step();

    std::vector<std::vector<double>> tables(static_cast<std::size_t>(n) + 1);
    tables[static_cast<std::size_t>(n)] = g.values;
    for (int j = n - 1; j >= 0; --j) {
        const std::vector<double>& upper = tables[static_cast<std::size_t>(j) + 1];
        std::vector<double> cur(m);
        cur[0] = (static_cast<std::size_t>(j) < seeds.size()) ? seeds[static_cast<std::size_t>(j)] : 0.0;
        for (std::size_t i = 1; i < m; ++i)
            cur[i] = cur[i - 1] + 0.5 * h * (upper[i - 1] + upper[i]);
        tables[static_cast<std::size_t>(j)] = std::move(cur);
    }
    return SampledIntegrand(g.a, g.b, std::move(tables));
}

Integrand antidifferentiate_n(const SampledFunction& g, int n, const std::vector<double>& seeds) {
    return antidifferentiate_chain(g, n, seeds).as_integrand();
}

namespace {

SampledIntegrand build_witness(const SchemeSpec& spec, const HolderPair& hp, double a, double b,
                               int grid_size, int spike_index) {
    if (grid_size < 1025) throw InsufficientGrid("extremal_integrand: grid_size must be >= 1025");
    std::vector<double> coeffs = spec.poly.double_coefficients();
    std::vector<double> samples(static_cast<std::size_t>(grid_size));

    if (hp.r.is_inf()) {
        DeltaSpike spike = delta_spike_at_maximizer(spec.poly, spike_index);
        double s = eval_poly(coeffs, spike.center) < 0.0 ? -1.0 : 1.0;
        for (int i = 0; i < grid_size; ++i) {
            double x = static_cast<double>(i) / (grid_size - 1);
            samples[static_cast<std::size_t>(i)] = s * spike(x);
        }
    } else {
        double exponent = hp.r.value() - 1.0;  // r/s
        for (int i = 0; i < grid_size; ++i) {
            double x = static_cast<double>(i) / (grid_size - 1);
            double v = eval_poly(coeffs, x);
            double s = (v > 0.0) ? 1.0 : (v < 0.0 ? -1.0 : 0.0);
            samples[static_cast<std::size_t>(i)] =
                (exponent == 0.0) ? s : s * std::pow(std::abs(v), exponent);
        }
    }

    SampledFunction g(a, b, std::move(samples));
    return antidifferentiate_chain(g, spec.degree);
}

}  // namespace

Integrand extremal_integrand(const SchemeSpec& spec, const HolderPair& hp, double a, double b,
                             int grid_size, int spike_index) {
    return build_witness(spec, hp, a, b, grid_size, spike_index).as_integrand();
}

double extremal_fn_norm(const SchemeSpec& spec, const HolderPair& hp, double a, double b) {
    if (hp.r.is_inf()) return b - a;        // unit spike mass in unit coordinates, stretched to [a,b]
    if (hp.r.value() == 1.0) return 1.0;    // ||sgn||_inf
    // ||f^(n)||_s = ((b-a) int_0^1 |p|^r)^{1/s} = (b-a)^{1/s} ||p||_r^{r-1}
    double pr = scheme_norm(spec, hp.r).value;
    return std::pow(b - a, hp.s.reciprocal()) * std::pow(pr, hp.r.value() - 1.0);
}

SharpnessReport sharpness_report(const SchemeSpec& spec, const HolderPair& hp, double a, double b,
                                 int grid_size, int spike_index) {
    SampledIntegrand chain = build_witness(spec, hp, a, b, grid_size, spike_index);
    Integrand f = chain.as_integrand();

    SharpnessReport rep;
    rep.degree = spec.degree;
    rep.variant = spec.variant;
    rep.grid = grid_size;
    rep.spike_index = hp.r.is_inf() ? spike_index : 0;
    rep.achieved = std::abs(chain.integral() - panel_apply(spec, f, a, b));
    rep.bound = panel_error_bound(spec, hp, extremal_fn_norm(spec, hp, a, b), a, b);
    rep.ratio = rep.bound == 0.0 ? 0.0 : rep.achieved / rep.bound;
    return rep;
}

}  // namespace telequad
