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

#include "telequad/expr.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <sstream>

#include "telequad/errors.hpp"

namespace telequad {

struct Expr::Node {
    Kind kind;
    double value = 0.0;  // Constant
    int exponent = 0;    // Pow
    std::shared_ptr<const Node> lhs;
    std::shared_ptr<const Node> rhs;
};

Expr Expr::constant(double v) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Constant;
    n->value = v;
    return Expr(std::move(n));
}

Expr Expr::var() {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Var;
    return Expr(std::move(n));
}

#define TELEQUAD_BINARY_FACTORY(NAME, KIND)                  \
    Expr Expr::NAME(Expr a, Expr b) {                        \
        auto n = std::make_shared<Node>();                   \
        n->kind = Kind::KIND;                                \
        n->lhs = std::move(a.node_);                         \
        n->rhs = std::move(b.node_);                         \
        return Expr(std::move(n));                           \
    }

TELEQUAD_BINARY_FACTORY(add, Add)
TELEQUAD_BINARY_FACTORY(sub, Sub)
TELEQUAD_BINARY_FACTORY(mul, Mul)
TELEQUAD_BINARY_FACTORY(div, Div)
#undef TELEQUAD_BINARY_FACTORY

#define TELEQUAD_UNARY_FACTORY(NAME, KIND)                   \
    Expr Expr::NAME(Expr a) {                                \
        auto n = std::make_shared<Node>();                   \
        n->kind = Kind::KIND;                                \
        n->lhs = std::move(a.node_);                         \
        return Expr(std::move(n));                           \
    }

TELEQUAD_UNARY_FACTORY(neg, Neg)
TELEQUAD_UNARY_FACTORY(exp, Exp)
TELEQUAD_UNARY_FACTORY(sin, Sin)
TELEQUAD_UNARY_FACTORY(cos, Cos)
TELEQUAD_UNARY_FACTORY(log, Log)
#undef TELEQUAD_UNARY_FACTORY

Expr Expr::pow(Expr base, int k) {
    if (k < 0) throw Error("Expr::pow: exponent must be >= 0");
    auto n = std::make_shared<Node>();
    n->kind = Kind::Pow;
    n->exponent = k;
    n->lhs = std::move(base.node_);
    return Expr(std::move(n));
}

Expr::Kind Expr::kind() const { return node_->kind; }
double Expr::constant_value() const { return node_->value; }
int Expr::exponent() const { return node_->exponent; }
Expr Expr::child(int i) const { return Expr(i == 0 ? node_->lhs : node_->rhs); }
bool Expr::is_constant(double v) const { return node_->kind == Kind::Constant && node_->value == v; }

// ---------------------------------------------------------------------------
// Parsing

namespace {

struct Parser {
    std::string_view text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    bool at_end() {
        skip_ws();
        return pos >= text.size();
    }

    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }

    bool consume(char c) {
        skip_ws();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    Expr parse_expression() {
        Expr e = parse_term();
        for (;;) {
            if (consume('+'))
                e = Expr::add(std::move(e), parse_term());
            else if (consume('-'))
                e = Expr::sub(std::move(e), parse_term());
            else
                return e;
        }
    }

    Expr parse_term() {
        Expr e = parse_unary();
        for (;;) {
            if (consume('*'))
                e = Expr::mul(std::move(e), parse_unary());
            else if (consume('/'))
                e = Expr::div(std::move(e), parse_unary());
            else
                return e;
        }
    }

    Expr parse_unary() {
        if (consume('-')) return Expr::neg(parse_unary());
        if (consume('+')) return parse_unary();
        return parse_power();
    }

    Expr parse_power() {
        Expr base = parse_primary();
        if (!consume('^')) return base;
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) throw SyntaxError("expected nonnegative integer exponent", start);
        if (pos - start > 6) throw SyntaxError("exponent too large", start);
        int k = std::atoi(std::string(text.substr(start, pos - start)).c_str());
        return Expr::pow(std::move(base), k);
    }

    Expr parse_primary() {
        skip_ws();
        if (pos >= text.size()) throw SyntaxError("unexpected end of input", pos);
        char c = text[pos];
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return parse_number();
        if (std::isalpha(static_cast<unsigned char>(c))) return parse_name();
        if (c == '(') {
            ++pos;
            Expr e = parse_expression();
            if (!consume(')')) throw SyntaxError("expected ')'", pos);
            return e;
        }
        throw SyntaxError(std::string("unexpected character '") + c + "'", pos);
    }

    Expr parse_number() {
        std::size_t start = pos;
        while (pos < text.size() && (std::isdigit(static_cast<unsigned char>(text[pos])) || text[pos] == '.')) ++pos;
        if (pos < text.size() && (text[pos] == 'e' || text[pos] == 'E')) {
            std::size_t mark = pos;
            ++pos;
            if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) ++pos;
            if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
                while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
            } else {
                pos = mark;  // 'e' belongs to something else
            }
        }
        std::string token(text.substr(start, pos - start));
        char* end = nullptr;
        double v = std::strtod(token.c_str(), &end);
        if (end == token.c_str() || *end != '\0') throw SyntaxError("malformed number '" + token + "'", start);
        return Expr::constant(v);
    }

    Expr parse_name() {
        std::size_t start = pos;
        while (pos < text.size() && (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_')) ++pos;
        std::string name(text.substr(start, pos - start));
        if (name == "x") return Expr::var();
        if (!consume('(')) {
            if (name == "e" || name == "pi") {
                return Expr::constant(name == "e" ? std::exp(1.0) : std::acos(-1.0));
            }
            throw SyntaxError("expected '(' after function name '" + name + "'", pos);
        }
        Expr arg = parse_expression();
        if (!consume(')')) throw SyntaxError("expected ')'", pos);
        if (name == "exp") return Expr::exp(std::move(arg));
        if (name == "sin") return Expr::sin(std::move(arg));
        if (name == "cos") return Expr::cos(std::move(arg));
        if (name == "log") return Expr::log(std::move(arg));
        throw UnknownFunction(name, start);
    }
};

}  // namespace

Expr parse_expr(std::string_view text) {
    Parser p{text};
    Expr e = p.parse_expression();
    if (!p.at_end()) throw SyntaxError("trailing input", p.pos);
    return e;
}

// ---------------------------------------------------------------------------
// Evaluation

double eval(const Expr& e, double x) {
    using K = Expr::Kind;
    switch (e.kind()) {
        case K::Constant: return e.constant_value();
        case K::Var: return x;
        case K::Add: return eval(e.child(0), x) + eval(e.child(1), x);
        case K::Sub: return eval(e.child(0), x) - eval(e.child(1), x);
        case K::Mul: return eval(e.child(0), x) * eval(e.child(1), x);
        case K::Div: {
            double den = eval(e.child(1), x);
            if (den == 0.0) throw EvaluationDomainError("division by zero");
            return eval(e.child(0), x) / den;
        }
        case K::Pow: return std::pow(eval(e.child(0), x), e.exponent());
        case K::Neg: return -eval(e.child(0), x);
        case K::Exp: return std::exp(eval(e.child(0), x));
        case K::Sin: return std::sin(eval(e.child(0), x));
        case K::Cos: return std::cos(eval(e.child(0), x));
        case K::Log: {
            double v = eval(e.child(0), x);
            if (!(v > 0.0)) throw EvaluationDomainError("log of nonpositive value");
            return std::log(v);
        }
    }
    throw Error("eval: unreachable");
}

// ---------------------------------------------------------------------------
// Differentiation

Expr derivative_raw(const Expr& e) {
    using K = Expr::Kind;
    switch (e.kind()) {
        case K::Constant: return Expr::constant(0.0);
        case K::Var: return Expr::constant(1.0);
        case K::Add: return Expr::add(derivative_raw(e.child(0)), derivative_raw(e.child(1)));
        case K::Sub: return Expr::sub(derivative_raw(e.child(0)), derivative_raw(e.child(1)));
        case K::Mul:
            return Expr::add(Expr::mul(derivative_raw(e.child(0)), e.child(1)),
                             Expr::mul(e.child(0), derivative_raw(e.child(1))));
        case K::Div:
            return Expr::div(Expr::sub(Expr::mul(derivative_raw(e.child(0)), e.child(1)),
                                       Expr::mul(e.child(0), derivative_raw(e.child(1)))),
                             Expr::mul(e.child(1), e.child(1)));
        case K::Pow: {
            int k = e.exponent();
            if (k == 0) return Expr::constant(0.0);
            return Expr::mul(Expr::mul(Expr::constant(k), Expr::pow(e.child(0), k - 1)),
                             derivative_raw(e.child(0)));
        }
        case K::Neg: return Expr::neg(derivative_raw(e.child(0)));
        case K::Exp: return Expr::mul(Expr::exp(e.child(0)), derivative_raw(e.child(0)));
        case K::Sin: return Expr::mul(Expr::cos(e.child(0)), derivative_raw(e.child(0)));
        case K::Cos: return Expr::mul(Expr::neg(Expr::sin(e.child(0))), derivative_raw(e.child(0)));
        case K::Log: return Expr::div(derivative_raw(e.child(0)), e.child(0));
    }
    throw Error("derivative_raw: unreachable");
}

// ---------------------------------------------------------------------------
// Simplification: constant folding plus 0/1 identities, bottom-up.

namespace {

bool is_const(const Expr& e) { return e.kind() == Expr::Kind::Constant; }

}  // namespace

Expr simplify(const Expr& e) {
    using K = Expr::Kind;
    switch (e.kind()) {
        case K::Constant:
        case K::Var:
            return e;
        case K::Add: {
            Expr a = simplify(e.child(0));
            Expr b = simplify(e.child(1));
            if (is_const(a) && is_const(b)) return Expr::constant(a.constant_value() + b.constant_value());
            if (a.is_constant(0.0)) return b;
            if (b.is_constant(0.0)) return a;
            return Expr::add(std::move(a), std::move(b));
        }
        case K::Sub: {
            Expr a = simplify(e.child(0));
            Expr b = simplify(e.child(1));
            if (is_const(a) && is_const(b)) return Expr::constant(a.constant_value() - b.constant_value());
            if (b.is_constant(0.0)) return a;
            if (a.is_constant(0.0)) return simplify(Expr::neg(std::move(b)));
            return Expr::sub(std::move(a), std::move(b));
        }
        case K::Mul: {
            Expr a = simplify(e.child(0));
            Expr b = simplify(e.child(1));
            if (is_const(a) && is_const(b)) return Expr::constant(a.constant_value() * b.constant_value());
            if (a.is_constant(0.0) || b.is_constant(0.0)) return Expr::constant(0.0);
            if (a.is_constant(1.0)) return b;
            if (b.is_constant(1.0)) return a;
            return Expr::mul(std::move(a), std::move(b));
        }
        case K::Div: {
            Expr a = simplify(e.child(0));
            Expr b = simplify(e.child(1));
            if (is_const(a) && is_const(b) && b.constant_value() != 0.0)
                return Expr::constant(a.constant_value() / b.constant_value());
            if (b.is_constant(1.0)) return a;
            if (a.is_constant(0.0)) return Expr::constant(0.0);
            return Expr::div(std::move(a), std::move(b));
        }
        case K::Pow: {
            Expr a = simplify(e.child(0));
            int k = e.exponent();
            if (k == 0) return Expr::constant(1.0);
            if (k == 1) return a;
            if (is_const(a)) return Expr::constant(std::pow(a.constant_value(), k));
            return Expr::pow(std::move(a), k);
        }
        case K::Neg: {
            Expr a = simplify(e.child(0));
            if (is_const(a)) return Expr::constant(-a.constant_value());
            if (a.kind() == K::Neg) return a.child(0);
            return Expr::neg(std::move(a));
        }
        case K::Exp: {
            Expr a = simplify(e.child(0));
            if (is_const(a)) return Expr::constant(std::exp(a.constant_value()));
            return Expr::exp(std::move(a));
        }
        case K::Sin: {
            Expr a = simplify(e.child(0));
            if (is_const(a)) return Expr::constant(std::sin(a.constant_value()));
            return Expr::sin(std::move(a));
        }
        case K::Cos: {
            Expr a = simplify(e.child(0));
            if (is_const(a)) return Expr::constant(std::cos(a.constant_value()));
            return Expr::cos(std::move(a));
        }
        case K::Log: {
            Expr a = simplify(e.child(0));
            if (is_const(a) && a.constant_value() > 0.0) return Expr::constant(std::log(a.constant_value()));
            return Expr::log(std::move(a));
        }
    }
    throw Error("simplify: unreachable");
}

Expr differentiate(const Expr& e) { return simplify(derivative_raw(e)); }

// ---------------------------------------------------------------------------
// Printing

namespace {

// Precedence levels: Add/Sub 1, Mul/Div 2, Neg 3, Pow 4, atoms 5.
int precedence(const Expr& e) {
    using K = Expr::Kind;
    switch (e.kind()) {
        case K::Add:
        case K::Sub: return 1;
        case K::Mul:
        case K::Div: return 2;
        case K::Neg: return 3;
        case K::Pow: return 4;
        default: return 5;
    }
}

std::string format_double(double v) {
    char buf[40];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

void print(const Expr& e, int parent_prec, std::string& out) {
    using K = Expr::Kind;
    int prec = precedence(e);
    bool parens = prec < parent_prec;
    if (parens) out += "(";
    switch (e.kind()) {
        case K::Constant: out += format_double(e.constant_value()); break;
        case K::Var: out += "x"; break;
        case K::Add:
            print(e.child(0), prec, out);
            out += " + ";
            print(e.child(1), prec + 1, out);
            break;
        case K::Sub:
            print(e.child(0), prec, out);
            out += " - ";
            print(e.child(1), prec + 1, out);
            break;
        case K::Mul:
            print(e.child(0), prec, out);
            out += "*";
            print(e.child(1), prec + 1, out);
            break;
        case K::Div:
            print(e.child(0), prec, out);
            out += "/";
            print(e.child(1), prec + 1, out);
            break;
        case K::Neg:
            out += "-";
            print(e.child(0), prec + 1, out);
            break;
        case K::Pow:
            print(e.child(0), prec + 1, out);
            out += "^" + std::to_string(e.exponent());
            break;
        case K::Exp:
        case K::Sin:
        case K::Cos:
        case K::Log: {
            const char* name = e.kind() == K::Exp   ? "exp"
                               : e.kind() == K::Sin ? "sin"
                               : e.kind() == K::Cos ? "cos"
                                                    : "log";
            out += name;
            out += "(";
            print(e.child(0), 0, out);
            out += ")";
            break;
        }
    }
    if (parens) out += ")";
}

}  // namespace

std::string to_string(const Expr& e) {
    std::string out;
    print(e, 0, out);
    return out;
}

bool structurally_equal(const Expr& a, const Expr& b) {
    using K = Expr::Kind;
    if (a.kind() != b.kind()) return false;
    switch (a.kind()) {
        case K::Constant: return a.constant_value() == b.constant_value();
        case K::Var: return true;
        case K::Pow: return a.exponent() == b.exponent() && structurally_equal(a.child(0), b.child(0));
        case K::Add:
        case K::Sub:
        case K::Mul:
        case K::Div:
            return structurally_equal(a.child(0), b.child(0)) && structurally_equal(a.child(1), b.child(1));
        case K::Neg:
        case K::Exp:
        case K::Sin:
        case K::Cos:
        case K::Log:
            return structurally_equal(a.child(0), b.child(0));
    }
    return false;
}

std::vector<Expr> derivative_table(const Expr& e, int max_order) {
    std::vector<Expr> table;
    table.reserve(static_cast<std::size_t>(max_order) + 1);
    table.push_back(simplify(e));
    for (int k = 1; k <= max_order; ++k) table.push_back(differentiate(table.back()));
    return table;
}

Integrand make_integrand(const Expr& e, int max_order, double a, double b) {
    if (max_order < 0) throw Error("make_integrand: max_order must be >= 0");
    std::vector<Expr> table = derivative_table(e, max_order);
    std::vector<Integrand::Evaluator> evals;
    evals.reserve(table.size());
    for (const Expr& d : table)
        evals.emplace_back([d](double x) { return eval(d, x); });
    return Integrand(a, b, std::move(evals));
}

}  // namespace telequad
