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

#ifndef TELEQUAD_EXPR_HPP
#define TELEQUAD_EXPR_HPP

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "telequad/integrand.hpp"

namespace telequad {

/// Immutable expression tree over {constant, x, +, -, *, /, ^k, exp, sin, cos, log}.
///
/// Subtrees are shared; all operations produce new trees.
class Expr {
public:
    enum class Kind { Constant, Var, Add, Sub, Mul, Div, Pow, Neg, Exp, Sin, Cos, Log };

    static Expr constant(double v);
    static Expr var();
    static Expr add(Expr a, Expr b);
    static Expr sub(Expr a, Expr b);
    static Expr mul(Expr a, Expr b);
    static Expr div(Expr a, Expr b);
    /// Integer power, k >= 0.
    static Expr pow(Expr base, int k);
    static Expr neg(Expr a);
    static Expr exp(Expr a);
    static Expr sin(Expr a);
    static Expr cos(Expr a);
    static Expr log(Expr a);

    Kind kind() const;
    double constant_value() const;  // Constant only
    int exponent() const;           // Pow only
    Expr child(int i) const;        // 0 = lhs/arg, 1 = rhs

    bool is_constant(double v) const;

private:
    struct Node;
    explicit Expr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
    std::shared_ptr<const Node> node_;
};

/// Parses infix text: standard precedence, parentheses, functions by name,
/// '^' with a nonnegative integer exponent. Throws SyntaxError with an
/// offset, or UnknownFunction.
Expr parse_expr(std::string_view text);

/// Value at x = point. Throws EvaluationDomainError on log of a nonpositive
/// value or division by zero.
double eval(const Expr& e, double x);

/// Raw symbolic derivative (no simplification).
Expr derivative_raw(const Expr& e);

/// Light simplification: constant folding and 0/1 identities. Idempotent.
Expr simplify(const Expr& e);

/// simplify(derivative_raw(e)).
Expr differentiate(const Expr& e);

std::string to_string(const Expr& e);

bool structurally_equal(const Expr& a, const Expr& b);

/// [e, e', ..., e^(max_order)], simplified.
std::vector<Expr> derivative_table(const Expr& e, int max_order);

/// Integrand on [a, b] with derivatives up to max_order from repeated
/// symbolic differentiation.
Integrand make_integrand(const Expr& e, int max_order, double a, double b);

}  // namespace telequad

#endif
