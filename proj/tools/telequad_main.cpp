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

#include <CLI11.hpp>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "telequad/bernoulli.hpp"
#include "telequad/bounds.hpp"
#include "telequad/errors.hpp"
#include "telequad/expr.hpp"
#include "telequad/quadrature.hpp"
#include "telequad/reference.hpp"
#include "telequad/scheme.hpp"
#include "telequad/witness.hpp"

using json = nlohmann::ordered_json;
using namespace telequad;

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitOracle = 3;

std::string format_double(double v) {
    char buf[40];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

void emit(const std::string& text, const std::string& output_path) {
    if (output_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(output_path, std::ios::binary);
    if (!out) throw Error("cannot open output file '" + output_path + "'");
    out << text;
}

struct SchemeChoice {
    int degree = 2;
    std::string variant;  // "pn", "qn", or empty when c given
    std::string c_text;

    SchemeSpec resolve() const {
        if (degree < 1) throw Error("degree must be >= 1");
        if (!c_text.empty()) return make_scheme(degree, Rational::from_string(c_text));
        if (variant == "pn" || variant.empty()) return make_scheme(degree, Variant::Pn);
        if (variant == "qn") return make_scheme(degree, Variant::Qn);
        throw Error("variant must be 'pn' or 'qn'");
    }

    // Odd degrees >= 3 have B_n = 0, so qn aliases pn.
    std::optional<std::string> aliasing_note() const {
        if (variant == "qn" && degree >= 3 && degree % 2 == 1)
            return "variant qn aliases pn for odd degree (B_n = 0)";
        return std::nullopt;
    }
};

void add_scheme_flags(CLI::App* cmd, SchemeChoice& choice) {
    cmd->add_option("--degree", choice.degree, "scheme degree n (>= 1)")->required();
    cmd->add_option("--variant", choice.variant, "pn (c = 0) or qn (c = -B_n/n!)");
    cmd->add_option("--c", choice.c_text, "explicit constant c as 'num/den'");
}

// 4097-point composite Simpson estimate of ||f^(n)||_s, max-of-samples for
// s = inf. An estimate, not a certified norm.
double sampled_fn_norm(const Integrand& f, int order, double a, double b, const Exponent& s) {
    const int m = 4097;
    double h = (b - a) / (m - 1);
    if (s.is_inf()) {
        double best = 0.0;
        for (int i = 0; i < m; ++i) best = std::max(best, std::abs(f.derivative(order, a + i * h)));
        return best;
    }
    double sv = s.value();
    auto g = [&](int i) { return std::pow(std::abs(f.derivative(order, a + i * h)), sv); };
    double acc = g(0) + g(m - 1);
    for (int i = 1; i < m - 1; i += 2) acc += 4.0 * g(i);
    for (int i = 2; i < m - 1; i += 2) acc += 2.0 * g(i);
    return std::pow(acc * h / 3.0, 1.0 / sv);
}

json report_to_json(const QuadratureReport& rep) {
    json j;
    j["value"] = rep.value;
    j["bound"] = rep.bound ? json(*rep.bound) : json(nullptr);
    j["reference"] = rep.reference ? json(*rep.reference) : json(nullptr);
    j["actual_error"] = rep.actual_error ? json(*rep.actual_error) : json(nullptr);
    j["degree"] = rep.degree;
    j["c"] = rep.c.str();
    j["variant"] = variant_name(rep.variant);
    j["N"] = rep.panels;
    j["a"] = rep.a;
    j["b"] = rep.b;
    if (rep.bound_exponents) {
        j["r"] = rep.bound_exponents->r.str();
        j["s"] = rep.bound_exponents->s.str();
    }
    return j;
}

json norm_to_json(const SchemeSpec& spec, const Exponent& r) {
    NormResult res = scheme_norm(spec, r);
    json j;
    j["degree"] = spec.degree;
    j["variant"] = variant_name(spec.variant);
    j["r"] = r.str();
    j["value"] = res.value;
    if (res.exact && res.exact->value)
        j["exact"] = res.exact->value->str();
    else if (res.exact)
        j["exact"] = res.exact->formula;
    else
        j["exact"] = nullptr;
    j["method"] = norm_method_name(res.method);
    return j;
}

int run(int argc, char** argv) {
    CLI::App app{"telequad: endpoint-derivative quadrature schemes, bounds, and sharpness audits"};
    app.require_subcommand(1);

    // --- bernoulli ---
    auto* cmd_bernoulli = app.add_subcommand("bernoulli", "print exact Bernoulli numbers or polynomials");
    int b_number = -1;
    int b_poly = -1;
    std::string b_out;
    cmd_bernoulli->add_option("--number", b_number, "print B_n");
    cmd_bernoulli->add_option("--poly", b_poly, "print B_n(x)");
    cmd_bernoulli->add_option("--output", b_out, "output path (default stdout)");

    // --- integrate ---
    auto* cmd_integrate = app.add_subcommand("integrate", "apply a composite scheme to an expression");
    std::string i_expr;
    double i_a = 0.0;
    double i_b = 1.0;
    int i_panels = 1;
    SchemeChoice i_scheme;
    std::string i_bound_r;
    double i_fn_norm = -1.0;
    bool i_reference = false;
    bool i_show_derivs = false;
    std::string i_out;
    cmd_integrate->add_option("--expr", i_expr, "integrand expression in x")->required();
    cmd_integrate->add_option("--a", i_a, "left endpoint")->required();
    cmd_integrate->add_option("--b", i_b, "right endpoint")->required();
    add_scheme_flags(cmd_integrate, i_scheme);
    cmd_integrate->add_option("--panels", i_panels, "number of panels N")->required();
    cmd_integrate->add_option("--bound", i_bound_r, "emit the L^r error bound; r in [1,inf]");
    cmd_integrate->add_option("--fn-norm", i_fn_norm, "caller-supplied ||f^(n)||_s for the bound");
    cmd_integrate->add_flag("--reference", i_reference, "compare against the reference integrator");
    cmd_integrate->add_flag("--show-derivatives", i_show_derivs, "include the symbolic derivative table");
    cmd_integrate->add_option("--output", i_out, "output path (default stdout)");

    // --- convergence ---
    auto* cmd_convergence = app.add_subcommand("convergence", "error vs panel count as CSV");
    std::string c_expr;
    double c_a = 0.0;
    double c_b = 1.0;
    SchemeChoice c_scheme;
    std::vector<int> c_panels;
    std::string c_bound_r;
    double c_fn_norm = -1.0;
    std::string c_out;
    cmd_convergence->add_option("--expr", c_expr, "integrand expression in x")->required();
    cmd_convergence->add_option("--a", c_a, "left endpoint")->required();
    cmd_convergence->add_option("--b", c_b, "right endpoint")->required();
    add_scheme_flags(cmd_convergence, c_scheme);
    cmd_convergence->add_option("--panels", c_panels, "ascending panel counts (comma separated)")
        ->required()
        ->delimiter(',');
    cmd_convergence->add_option("--bound", c_bound_r, "emit the L^r bound column");
    cmd_convergence->add_option("--fn-norm", c_fn_norm, "caller-supplied ||f^(n)||_s for the bound");
    cmd_convergence->add_option("--output", c_out, "output path (default stdout)");

    // --- norms ---
    auto* cmd_norms = app.add_subcommand("norms", "L^r norms of a scheme polynomial");
    SchemeChoice n_scheme;
    std::vector<std::string> n_rs;
    std::string n_out;
    add_scheme_flags(cmd_norms, n_scheme);
    cmd_norms->add_option("--r", n_rs, "exponents: numbers or 'inf'")->required()->delimiter(',');
    cmd_norms->add_option("--output", n_out, "output path (default stdout)");

    // --- asymptotics ---
    auto* cmd_asym = app.add_subcommand("asymptotics", "exact vs asymptotic norm table as CSV");
    std::vector<std::string> a_kinds;
    int a_maxn = 20;
    int a_r = 0;
    std::string a_out;
    cmd_asym->add_option("--kind", a_kinds,
                         "kinds: pn_inf q2n_inf pn_1 q2n_1 pn_r_even pn_r_odd variation_pn")
        ->required()
        ->delimiter(',');
    cmd_asym->add_option("--n", a_maxn, "maximum degree")->required();
    cmd_asym->add_option("--r", a_r, "integer r for the pn_r kinds");
    cmd_asym->add_option("--output", a_out, "output path (default stdout)");

    // --- sharpness ---
    auto* cmd_sharp = app.add_subcommand("sharpness", "extremal-integrand audit of the panel bound");
    SchemeChoice s_scheme;
    std::string s_r = "1";
    int s_grid = 8193;
    int s_spike = 256;
    double s_a = 0.0;
    double s_b = 1.0;
    std::string s_out;
    add_scheme_flags(cmd_sharp, s_scheme);
    cmd_sharp->add_option("--r", s_r, "Holder exponent r");
    cmd_sharp->add_option("--grid", s_grid, "witness grid size (>= 1025)");
    cmd_sharp->add_option("--spike-k", s_spike, "delta-sequence index for r = inf");
    cmd_sharp->add_option("--a", s_a, "left endpoint");
    cmd_sharp->add_option("--b", s_b, "right endpoint");
    cmd_sharp->add_option("--output", s_out, "output path (default stdout)");

    // --- weights ---
    auto* cmd_weights = app.add_subcommand("weights", "endpoint weight table of a scheme");
    SchemeChoice w_scheme;
    double w_a = 0.0;
    double w_b = 1.0;
    std::string w_out;
    add_scheme_flags(cmd_weights, w_scheme);
    cmd_weights->add_option("--a", w_a, "left endpoint");
    cmd_weights->add_option("--b", w_b, "right endpoint");
    cmd_weights->add_option("--output", w_out, "output path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    if (cmd_bernoulli->parsed()) {
        if ((b_number < 0) == (b_poly < 0)) throw Error("bernoulli: pass exactly one of --number, --poly");
        std::string text = b_number >= 0 ? bernoulli_number(static_cast<unsigned>(b_number)).str()
                                         : bernoulli_poly(static_cast<unsigned>(b_poly)).str();
        emit(text + "\n", b_out);
        return 0;
    }

    if (cmd_integrate->parsed()) {
        SchemeSpec spec = i_scheme.resolve();
        int order = spec.degree - 1;
        std::optional<HolderPair> hp;
        if (!i_bound_r.empty()) {
            hp = HolderPair::conjugate(Exponent::parse(i_bound_r));
            order = spec.degree;  // the bound needs f^(n)
        }
        Expr e = parse_expr(i_expr);
        Integrand f = make_integrand(e, order, i_a, i_b);
        Interval iv(i_a, i_b, i_panels);

        QuadratureReport rep = composite_apply(spec, f, iv);
        bool fn_estimated = false;
        double fn_norm = i_fn_norm;
        if (hp) {
            if (fn_norm < 0.0) {
                fn_norm = sampled_fn_norm(f, spec.degree, i_a, i_b, hp->s);
                fn_estimated = true;
            }
            rep.bound = composite_error_bound(spec, *hp, fn_norm, iv);
            rep.bound_exponents = hp;
        }
        if (i_reference) {
            rep.reference = reference_integral(f, i_a, i_b, 1e-12);
            rep.actual_error = *rep.reference - rep.value;
        }
        json j = report_to_json(rep);
        if (hp) {
            j["fn_norm"] = fn_norm;
            j["fn_norm_estimated"] = fn_estimated;
        }
        if (auto note = i_scheme.aliasing_note()) j["note"] = *note;
        if (i_show_derivs) {
            json table = json::array();
            for (const Expr& d : derivative_table(e, order)) table.push_back(to_string(d));
            j["derivatives"] = table;
        }
        emit(j.dump(2) + "\n", i_out);
        return 0;
    }

    if (cmd_convergence->parsed()) {
        SchemeSpec spec = c_scheme.resolve();
        if (c_panels.empty()) throw Error("convergence: panel list must be nonempty");
        for (std::size_t i = 1; i < c_panels.size(); ++i)
            if (c_panels[i] <= c_panels[i - 1]) throw Error("convergence: panel list must be ascending");

        std::optional<HolderPair> hp;
        if (!c_bound_r.empty()) hp = HolderPair::conjugate(Exponent::parse(c_bound_r));
        int order = hp ? spec.degree : spec.degree - 1;
        Integrand f = make_integrand(parse_expr(c_expr), order, c_a, c_b);
        double reference = reference_integral(f, c_a, c_b, 1e-12);
        double fn_norm = c_fn_norm;
        if (hp && fn_norm < 0.0) fn_norm = sampled_fn_norm(f, spec.degree, c_a, c_b, hp->s);

        std::ostringstream csv;
        csv << "N,value,actual_error,bound,observed_order\n";
        double prev_err = 0.0;
        int prev_n = 0;
        for (int N : c_panels) {
            Interval iv(c_a, c_b, N);
            double value = composite_apply(spec, f, iv).value;
            double err = reference - value;
            csv << N << "," << format_double(value) << "," << format_double(err) << ",";
            if (hp) csv << format_double(composite_error_bound(spec, *hp, fn_norm, iv));
            csv << ",";
            if (prev_n > 0 && err != 0.0 && prev_err != 0.0)
                csv << format_double(std::log(std::abs(prev_err / err)) /
                                     std::log(static_cast<double>(N) / prev_n));
            csv << "\n";
            prev_err = err;
            prev_n = N;
        }
        emit(csv.str(), c_out);
        return 0;
    }

    if (cmd_norms->parsed()) {
        SchemeSpec spec = n_scheme.resolve();
        json j;
        if (n_rs.size() == 1) {
            j = norm_to_json(spec, Exponent::parse(n_rs[0]));
        } else {
            j["degree"] = spec.degree;
            j["variant"] = variant_name(spec.variant);
            json results = json::array();
            for (const std::string& rs : n_rs) results.push_back(norm_to_json(spec, Exponent::parse(rs)));
            j["results"] = results;
        }
        if (auto note = n_scheme.aliasing_note()) j["note"] = *note;
        emit(j.dump(2) + "\n", n_out);
        return 0;
    }

    if (cmd_asym->parsed()) {
        std::ostringstream csv;
        csv << "n,kind,exact,asymptotic,ratio\n";
        for (const std::string& kind_name : a_kinds) {
            AsymptoticKind kind = parse_asymptotic_kind(kind_name);
            bool needs_r = kind == AsymptoticKind::PnREven || kind == AsymptoticKind::PnROdd;
            bool even_only = kind == AsymptoticKind::Q2nInf || kind == AsymptoticKind::Q2n1;
            if (needs_r && a_r < 2) throw Error("asymptotics: " + kind_name + " requires --r >= 2");
            for (int n = even_only ? 2 : 1; n <= a_maxn; n += even_only ? 2 : 1) {
                double exact = 0.0;
                switch (kind) {
                    case AsymptoticKind::PnInf:
                        exact = scheme_norm(make_scheme(n, Variant::Pn), Exponent::infinity()).value;
                        break;
                    case AsymptoticKind::Pn1:
                        exact = scheme_norm(make_scheme(n, Variant::Pn), Exponent::finite(1)).value;
                        break;
                    case AsymptoticKind::Q2nInf:
                        exact = scheme_norm(make_scheme(n, Variant::Qn), Exponent::infinity()).value;
                        break;
                    case AsymptoticKind::Q2n1:
                        exact = scheme_norm(make_scheme(n, Variant::Qn), Exponent::finite(1)).value;
                        break;
                    case AsymptoticKind::PnREven:
                    case AsymptoticKind::PnROdd:
                        exact = norm_numeric(scheme_polynomial(static_cast<unsigned>(n), Rational(0)),
                                             Exponent::finite(a_r))
                                    .value;
                        break;
                    case AsymptoticKind::VariationPn:
                        exact = total_variation(scheme_polynomial(static_cast<unsigned>(n), Rational(0))).value;
                        break;
                }
                double asym = asymptotic_estimate(kind, n, needs_r ? std::optional<int>(a_r) : std::nullopt);
                csv << n << "," << kind_name << "," << format_double(exact) << "," << format_double(asym)
                    << "," << format_double(exact / asym) << "\n";
            }
        }
        emit(csv.str(), a_out);
        return 0;
    }

    if (cmd_sharp->parsed()) {
        SchemeSpec spec = s_scheme.resolve();
        Exponent r = Exponent::parse(s_r);
        SharpnessReport rep =
            sharpness_report(spec, HolderPair::conjugate(r), s_a, s_b, s_grid, s_spike);
        json j;
        j["degree"] = rep.degree;
        j["variant"] = variant_name(rep.variant);
        j["r"] = r.str();
        j["grid"] = rep.grid;
        if (r.is_inf()) j["spike_k"] = rep.spike_index;
        j["achieved"] = rep.achieved;
        j["bound"] = rep.bound;
        j["ratio"] = rep.ratio;
        if (auto note = s_scheme.aliasing_note()) j["note"] = *note;
        emit(j.dump(2) + "\n", s_out);
        return 0;
    }

    if (cmd_weights->parsed()) {
        SchemeSpec spec = w_scheme.resolve();
        WeightTable t = endpoint_weights(spec, w_a, w_b);
        json j;
        j["degree"] = t.degree;
        j["c"] = t.c.str();
        j["a"] = t.a;
        j["b"] = t.b;
        json fw = json::array();
        json fx = json::array();
        for (std::size_t k = 0; k < t.w_a.size(); ++k) {
            fw.push_back(json::array({k, t.w_a[k], t.w_b[k]}));
            fx.push_back(json::array({k, t.exact_a[k].str(), t.exact_b[k].str()}));
        }
        j["f_weights"] = fw;
        j["f_weights_exact"] = fx;
        if (auto note = w_scheme.aliasing_note()) j["note"] = *note;
        emit(j.dump(2) + "\n", w_out);
        return 0;
    }

    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const OracleNoConvergence& err) {
        std::cerr << "oracle failure: " << err.what() << "\n";
        return kExitOracle;
    } catch (const Error& err) {
        std::cerr << "error: " << err.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return kExitUsage;
    }
}
