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

#ifndef TELEQUAD_ERRORS_HPP
#define TELEQUAD_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace telequad {

/// Base class for all telequad domain errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A candidate telescoping polynomial of degree n must have leading coefficient 1/n!.
struct WrongLeadingCoefficient : Error {
    using Error::Error;
};

/// Raised when an operation requires a < b.
struct DegenerateInterval : Error {
    using Error::Error;
};

/// An integrand cannot supply a derivative of the requested order.
struct InsufficientDerivativeOrder : Error {
    using Error::Error;
};

/// The reference integrator failed to reach the requested tolerance.
struct OracleNoConvergence : Error {
    using Error::Error;
};

/// The distributional bound requires the scheme polynomial to vanish somewhere in [0,1].
struct NoRootInUnitInterval : Error {
    using Error::Error;
};

/// Unrecognized asymptotic-estimate kind.
struct UnknownKind : Error {
    using Error::Error;
};

struct SyntaxError : Error {
    SyntaxError(const std::string& what, std::size_t pos)
        : Error(what + " (at offset " + std::to_string(pos) + ")"), position(pos) {}
    std::size_t position;
};

struct UnknownFunction : Error {
    explicit UnknownFunction(const std::string& fn, std::size_t pos)
        : Error("unknown function '" + fn + "' (at offset " + std::to_string(pos) + ")"),
          name(fn),
          position(pos) {}
    std::string name;
    std::size_t position;
};

/// Evaluation left the expression's domain (log of a nonpositive value, division by zero).
struct EvaluationDomainError : Error {
    using Error::Error;
};

/// A sampled function needs at least two grid points.
struct InsufficientGrid : Error {
    using Error::Error;
};

}  // namespace telequad

#endif
