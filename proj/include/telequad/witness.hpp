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

#ifndef TELEQUAD_WITNESS_HPP
#define TELEQUAD_WITNESS_HPP

#include <memory>
#include <vector>

#include "telequad/bounds.hpp"
#include "telequad/holder.hpp"
#include "telequad/integrand.hpp"
#include "telequad/reference.hpp"
#include "telequad/scheme.hpp"

namespace telequad {

/// Uniform samples on [a, b] with piecewise-linear interpolation.
struct SampledFunction {
    double a;
    double b;
    std::vector<double> values;

    SampledFunction(double a_, double b_, std::vector<double> v);

    std::size_t size() const { return values.size(); }
    double step() const { return (b - a) / static_cast<double>(values.size() - 1); }
    double operator()(double x) const;
};

/// Rectangular delta-sequence element on [0, 1]: height k on
/// |x - center| < 1/(2k), doubled to 2k and truncated when center is an
/// endpoint. Unit mass either way. Samples exactly on a support edge get
/// half the height so trapezoid sums reproduce the mass.
struct DeltaSpike {
    double center;
    int index;         // k
    bool at_endpoint;

    double height() const { return at_endpoint ? 2.0 * index : static_cast<double>(index); }
    double half_width() const { return 1.0 / (2.0 * index); }
    double operator()(double x) const;
};

/// Places the spike at the maximizer of |p| over [0,1] (smallest abscissa
/// on ties).
DeltaSpike delta_spike_at_maximizer(const RationalPoly& p, int k);

/// The antidifferentiation chain f^(n) = g, f^(n-1), ..., f built from
/// successive trapezoid-rule cumulative integrals, all carried on g's grid.
class SampledIntegrand {
public:
    SampledIntegrand(double a, double b, std::vector<std::vector<double>> tables);

    int order() const { return static_cast<int>(tables_->size()) - 1; }
    const std::vector<double>& table(int derivative_order) const;
    /// Integrand exposing derivative orders 0..n (order n is g itself).
    Integrand as_integrand() const;
    /// Exact integral of the piecewise-linear order-0 interpolant.
    double integral() const;
    double a() const { return a_; }
    double b() const { return b_; }

private:
    double a_;
    double b_;
    std::shared_ptr<const std::vector<std::vector<double>>> tables_;  // [order][sample]
};

/// Fuller-information form of antidifferentiate_n. seeds[j], when present,
/// fixes f^(j)(a) for 0 <= j < n; missing seeds default to 0.
SampledIntegrand antidifferentiate_chain(const SampledFunction& g, int n,
                                         const std::vector<double>& seeds = {});

/// Integrand whose order-j derivatives (0 <= j <= n) interpolate successive
/// trapezoid-rule cumulative integrals of g; order n is g itself.
Integrand antidifferentiate_n(const SampledFunction& g, int n, const std::vector<double>& seeds = {});

/// Extremal integrand of the sharpness construction:
/// f^(n)(a + (b-a)x) = sgn(p(x)) for r = 1, |p(x)|^{r-1} sgn(p(x)) for
/// 1 < r < inf, and the delta spike at the maximizer of |p| for r = inf
/// (parameterized by spike_index).
Integrand extremal_integrand(const SchemeSpec& spec, const HolderPair& hp, double a, double b,
                             int grid_size, int spike_index = 256);

/// ||f^(n)||_s of the ideal witness: 1 for r = 1; (b-a)^{1/s} ||p||_r^{r-1}
/// for finite r > 1; b-a for r = inf (unit spike mass in unit coordinates).
double extremal_fn_norm(const SchemeSpec& spec, const HolderPair& hp, double a, double b);

struct SharpnessReport {
    int degree = 0;
    Variant variant = Variant::Custom;
    int grid = 0;
    int spike_index = 0;   // r = inf only
    double achieved = 0.0;
    double bound = 0.0;
    double ratio = 0.0;
};

/// Builds the witness, measures the realized single-panel error, and
/// compares it against panel_error_bound.
SharpnessReport sharpness_report(const SchemeSpec& spec, const HolderPair& hp, double a, double b,
                                 int grid_size, int spike_index = 256);

}  // namespace telequad

#endif
