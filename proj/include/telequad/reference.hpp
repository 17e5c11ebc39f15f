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

#ifndef TELEQUAD_REFERENCE_HPP
#define TELEQUAD_REFERENCE_HPP

#include <functional>

#include "telequad/integrand.hpp"

namespace telequad {

/// Reference oracle for the true integral of a continuous f on [a, b].
///
/// Composite 10-point Gauss-Legendre with interval halving until two
/// successive refinements differ by less than tol; returns the finer
/// value. Throws OracleNoConvergence after 20 refinement levels.
double reference_integral(const std::function<double(double)>& f, double a, double b, double tol);

inline double reference_integral(const Integrand& f, double a, double b, double tol) {
    return reference_integral([&f](double x) { return f(x); }, a, b, tol);
}

}  // namespace telequad

#endif
