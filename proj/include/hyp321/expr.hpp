#pragma once

#include "hyp321/linexpr.hpp"

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace hyp321 {

enum class Kind {
    Const, Pi, Lin, Add, Mul, Neg, Recip, Pow,
    Gamma, Sin, Cos, Polygamma, Pochhammer, FiniteSum, WatsonRef
};

struct Node;
using Expr = std::shared_ptr<const Node>;

struct Node {
    explicit Node(Kind k) : kind(k) {}

    Kind kind;
    Rational value;                      // Const
    LinExpr lin;                         // Lin
    std::vector<Expr> args;              // operands, body, W arguments
    std::vector<LinExpr> ints;           // Pochhammer count; sum bounds; W offsets m, n
    int order = 0;                       // Polygamma
    std::string index;                   // FiniteSum
};

namespace ex {
Expr constant(const Rational& q);
Expr pi();
Expr lin(const LinExpr& e);
Expr sym(const std::string& name);
Expr add(std::vector<Expr> terms);
Expr mul(std::vector<Expr> factors);
Expr neg(const Expr& e);
Expr recip(const Expr& e);
Expr sub(const Expr& a, const Expr& b);
Expr div(const Expr& a, const Expr& b);
Expr pow(const Expr& base, const Expr& exponent);
Expr gamma(const Expr& e);
Expr sin(const Expr& e);
Expr cos(const Expr& e);
Expr polygamma(int order, const Expr& e);
Expr poch(const Expr& x, const LinExpr& count);
Expr finite_sum(const std::string& index, const LinExpr& lo, const LinExpr& hi, const Expr& body);
Expr watson(const Expr& a, const Expr& b, const Expr& c, const LinExpr& m, const LinExpr& n);
}  // namespace ex

// Linear view of a Const/Lin node
std::optional<LinExpr> as_linear(const Expr& e);

using WatsonHook = std::function<Complex(Complex, Complex, Complex, long, long)>;

// The default evaluates WatsonRef nodes with the contiguous engine.
Complex eval_expr(const Expr& e, const Assignment& a);
Complex eval_expr(const Expr& e, const Assignment& a, const WatsonHook& watson);

Expr substitute(const Expr& e, const std::map<std::string, LinExpr>& mapping);
// replaces free symbols by arbitrary expressions (used for derived symbols)
Expr substitute_exprs(const Expr& e, const std::map<std::string, Expr>& mapping);

std::set<std::string> free_symbols(const Expr& e);
// renames bound sum indices that appear in avoid
Expr rename_bound(const Expr& e, const std::set<std::string>& avoid);
bool structurally_equal(const Expr& x, const Expr& y);

std::string to_string(const Expr& e);

// Infix syntax: + - * / ^, Gamma, psi(x) / psi(k, x), sin, cos, sqrt, poch(x, n),
// sum(L, lo, hi, body), W(a, b, c, m, n), pi, rational and decimal literals.
Expr parse_expr(const std::string& text);
// Accepts only expressions that collapse to a LinExpr.
LinExpr parse_linexpr(const std::string& text, long max_decimal_den = 0);

}  // namespace hyp321
