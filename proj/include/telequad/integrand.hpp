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

#ifndef TELEQUAD_INTEGRAND_HPP
#define TELEQUAD_INTEGRAND_HPP

#include <functional>
#include <utility>
#include <vector>

#include "telequad/errors.hpp"

namespace telequad {

/// A function on [a, b] with derivative access up to a stated order.
///
/// Evaluators must be pure and safe for concurrent calls; the table covers
/// every order 0..max_order.
class Integrand {
public:
    using Evaluator = std::function<double(double)>;

    Integrand(double a, double b, std::vector<Evaluator> derivatives)
        : a_(a), b_(b), derivs_(std::move(derivatives)) {
        if (derivs_.empty()) throw InsufficientDerivativeOrder("Integrand: needs at least order 0");
    }

    double a() const { return a_; }
    double b() const { return b_; }
    int max_order() const { return static_cast<int>(derivs_.size()) - 1; }

    /// f^(order)(x); throws InsufficientDerivativeOrder if order > max_order.
    double derivative(int order, double x) const {
        if (order < 0 || order > max_order())
            throw InsufficientDerivativeOrder("Integrand: derivative order " + std::to_string(order) +
                                              " exceeds max order " + std::to_string(max_order()));
        return derivs_[static_cast<std::size_t>(order)](x);
    }

    double operator()(double x) const { return derivs_[0](x); }

private:
    double a_;
    double b_;
    std::vector<Evaluator> derivs_;
};

}  // namespace telequad

#endif
