#include "hyp321/expr.hpp"

#include "hyp321/errors.hpp"

namespace hyp321 {

namespace {

Expr make(Node n) { return std::make_shared<const Node>(std::move(n)); }

Expr unary(Kind k, const Expr& e) {
    Node n(k);
    n.args = {e};
    return make(std::move(n));
}

bool is_linear(const Expr& e) { return e->kind == Kind::Const || e->kind == Kind::Lin; }

}  // namespace

std::optional<LinExpr> as_linear(const Expr& e) {
    if (e->kind == Kind::Const) return LinExpr(e->value);
    if (e->kind == Kind::Lin) return e->lin;
    return std::nullopt;
}

namespace ex {

Expr constant(const Rational& q) {
    Node n(Kind::Const);
    n.value = q;
    return make(std::move(n));
}

Expr pi() { return make(Node(Kind::Pi)); }

Expr lin(const LinExpr& e) {
    if (e.is_constant()) return constant(e.constant());
    Node n(Kind::Lin);
    n.lin = e;
    return make(std::move(n));
}

Expr sym(const std::string& name) { return lin(LinExpr::symbol(name)); }

Expr add(std::vector<Expr> terms) {
    std::vector<Expr> rest;
    LinExpr linear;
    bool any_linear = false;
    std::vector<Expr> queue = std::move(terms);
    for (std::size_t i = 0; i < queue.size(); ++i) {
        Expr t = queue[i];
        if (t->kind == Kind::Add) {
            for (auto& s : t->args) queue.push_back(s);
        } else if (auto l = as_linear(t)) {
            linear += *l;
            any_linear = true;
        } else if (t->kind == Kind::Neg && is_linear(t->args[0])) {
            linear -= *as_linear(t->args[0]);
            any_linear = true;
        } else {
            rest.push_back(t);
        }
    }
    if (rest.empty()) return lin(linear);
    if (any_linear && !(linear.is_constant() && linear.constant().is_zero())) rest.push_back(lin(linear));
    if (rest.size() == 1) return rest[0];
    Node n(Kind::Add);
    n.args = std::move(rest);
    return make(std::move(n));
}

Expr mul(std::vector<Expr> factors) {
    Rational scale(1);
    std::vector<Expr> rest;
    std::vector<Expr> queue = std::move(factors);
    for (std::size_t i = 0; i < queue.size(); ++i) {
        Expr f = queue[i];
        if (f->kind == Kind::Mul) {
            for (auto& s : f->args) queue.push_back(s);
        } else if (f->kind == Kind::Const) {
            scale *= f->value;
        } else if (f->kind == Kind::Neg) {
            scale *= Rational(-1);
            queue.push_back(f->args[0]);
        } else if (f->kind == Kind::Recip && f->args[0]->kind == Kind::Const) {
            scale /= f->args[0]->value;
        } else {
            rest.push_back(f);
        }
    }
    if (scale.is_zero()) return constant(Rational());
    if (rest.empty()) return constant(scale);
    if (scale != Rational(1)) {
        bool folded = false;
        for (auto& f : rest) {
            if (f->kind == Kind::Lin) {
                f = lin(f->lin * scale);
                folded = true;
                break;
            }
        }
        if (!folded) {
            if (scale == Rational(-1)) {
                Expr inner = rest.size() == 1 ? rest[0] : mul(rest);
                return unary(Kind::Neg, inner);
            }
            rest.insert(rest.begin(), constant(scale));
        }
    }
    if (rest.size() == 1) return rest[0];
    Node n(Kind::Mul);
    n.args = std::move(rest);
    return make(std::move(n));
}

Expr neg(const Expr& e) {
    if (auto l = as_linear(e)) return lin(-*l);
    if (e->kind == Kind::Neg) return e->args[0];
    return unary(Kind::Neg, e);
}

Expr recip(const Expr& e) {
    if (e->kind == Kind::Const) {
        if (e->value.is_zero()) throw PoleError("reciprocal of zero constant");
        return constant(Rational(1) / e->value);
    }
    if (e->kind == Kind::Recip) return e->args[0];
    return unary(Kind::Recip, e);
}

Expr sub(const Expr& a, const Expr& b) { return add({a, neg(b)}); }

Expr div(const Expr& a, const Expr& b) { return mul({a, recip(b)}); }

Expr pow(const Expr& base, const Expr& exponent) {
    if (exponent->kind == Kind::Const) {
        const Rational& q = exponent->value;
        if (q.is_zero()) return constant(Rational(1));
        if (q == Rational(1)) return base;
        if (base->kind == Kind::Const && q.is_integer()) {
            auto e = q.to_long();
            if (e && std::labs(*e) <= 64 && !(base->value.is_zero() && *e < 0)) {
                Rational r(1);
                for (long i = 0; i < std::labs(*e); ++i) r *= base->value;
                return constant(*e < 0 ? Rational(1) / r : r);
            }
        }
    }
    Node n(Kind::Pow);
    n.args = {base, exponent};
    return make(std::move(n));
}

Expr gamma(const Expr& e) { return unary(Kind::Gamma, e); }
Expr sin(const Expr& e) { return unary(Kind::Sin, e); }
Expr cos(const Expr& e) { return unary(Kind::Cos, e); }

Expr polygamma(int order, const Expr& e) {
    Node n(Kind::Polygamma);
    n.order = order;
    n.args = {e};
    return make(std::move(n));
}

Expr poch(const Expr& x, const LinExpr& count) {
    Node n(Kind::Pochhammer);
    n.args = {x};
    n.ints = {count};
    return make(std::move(n));
}

Expr finite_sum(const std::string& index, const LinExpr& lo, const LinExpr& hi, const Expr& body) {
    Node n(Kind::FiniteSum);
    n.index = index;
    n.ints = {lo, hi};
    n.args = {body};
    return make(std::move(n));
}

Expr watson(const Expr& a, const Expr& b, const Expr& c, const LinExpr& m, const LinExpr& n) {
    Node node(Kind::WatsonRef);
    node.args = {a, b, c};
    node.ints = {m, n};
    return make(std::move(node));
}

}  // namespace ex

std::set<std::string> free_symbols(const Expr& e) {
    std::set<std::string> out;
    switch (e->kind) {
    case Kind::Lin:
        return e->lin.symbols();
    case Kind::FiniteSum: {
        out = free_symbols(e->args[0]);
        out.erase(e->index);
        break;
    }
    default:
        for (auto& a : e->args) out.merge(free_symbols(a));
    }
    for (auto& l : e->ints) out.merge(l.symbols());
    return out;
}

namespace {

void bound_names(const Expr& e, std::set<std::string>& out) {
    if (e->kind == Kind::FiniteSum) out.insert(e->index);
    for (auto& a : e->args) bound_names(a, out);
}

Expr rename_bound_in(const Expr& e, const std::set<std::string>& avoid, std::set<std::string>& taken) {
    if (e->kind == Kind::Const || e->kind == Kind::Pi || e->kind == Kind::Lin) return e;
    Node n = *e;
    for (auto& a : n.args) a = rename_bound_in(a, avoid, taken);
    if (n.kind == Kind::FiniteSum && avoid.count(n.index)) {
        std::string fresh;
        for (int i = 1; fresh.empty() || taken.count(fresh) || avoid.count(fresh); ++i)
            fresh = n.index + std::to_string(i);
        taken.insert(fresh);
        n.args[0] = substitute(n.args[0], {{n.index, LinExpr::symbol(fresh)}});
        n.index = fresh;
    }
    return std::make_shared<const Node>(std::move(n));
}

}  // namespace

Expr rename_bound(const Expr& e, const std::set<std::string>& avoid) {
    std::set<std::string> taken = free_symbols(e);
    bound_names(e, taken);
    return rename_bound_in(e, avoid, taken);
}

Expr substitute(const Expr& e, const std::map<std::string, LinExpr>& mapping) {
    if (mapping.empty()) return e;
    switch (e->kind) {
    case Kind::Const:
    case Kind::Pi:
        return e;
    case Kind::Lin:
        return ex::lin(e->lin.substitute(mapping));
    case Kind::FiniteSum: {
        auto inner = mapping;
        inner.erase(e->index);
        for (auto& [s, target] : inner)
            if (target.mentions(e->index))
                throw IndexCapture("substitution for '" + s + "' captures bound index '" + e->index + "'");
        return ex::finite_sum(e->index, e->ints[0].substitute(mapping), e->ints[1].substitute(mapping),
                              substitute(e->args[0], inner));
    }
    default: {
        Node n = *e;
        for (auto& a : n.args) a = substitute(a, mapping);
        for (auto& l : n.ints) l = l.substitute(mapping);
        switch (n.kind) {
        case Kind::Add: return ex::add(n.args);
        case Kind::Mul: return ex::mul(n.args);
        case Kind::Neg: return ex::neg(n.args[0]);
        case Kind::Recip: return ex::recip(n.args[0]);
        case Kind::Pow: return ex::pow(n.args[0], n.args[1]);
        default: return std::make_shared<const Node>(std::move(n));
        }
    }
    }
}

Expr substitute_exprs(const Expr& e, const std::map<std::string, Expr>& mapping) {
    if (mapping.empty()) return e;
    auto linear_targets = [&](const std::string& bound) {
        std::map<std::string, LinExpr> lm;
        for (auto& [s, t] : mapping) {
            if (s == bound) continue;
            auto l = as_linear(t);
            if (!l) continue;
            if (l->mentions(bound))
                throw IndexCapture("substitution for '" + s + "' captures bound index '" + bound + "'");
            lm[s] = *l;
        }
        return lm;
    };
    auto check_linear = [&](const LinExpr& l) {
        for (auto& [s, c] : l.terms())
            if (mapping.count(s) && !as_linear(mapping.at(s)))
                throw Error("non-linear substitution into an integer position for '" + s + "'");
    };
    switch (e->kind) {
    case Kind::Const:
    case Kind::Pi:
        return e;
    case Kind::Lin: {
        std::vector<Expr> parts;
        LinExpr keep(e->lin.constant());
        for (auto& [s, c] : e->lin.terms()) {
            auto it = mapping.find(s);
            if (it == mapping.end())
                keep += LinExpr::symbol(s, c);
            else
                parts.push_back(ex::mul({ex::constant(c), it->second}));
        }
        parts.push_back(ex::lin(keep));
        return ex::add(parts);
    }
    case Kind::FiniteSum: {
        auto inner = mapping;
        inner.erase(e->index);
        for (auto& [s, t] : inner)
            if (free_symbols(t).count(e->index))
                throw IndexCapture("substitution for '" + s + "' captures bound index '" + e->index + "'");
        check_linear(e->ints[0]);
        check_linear(e->ints[1]);
        auto lm = linear_targets(e->index);
        return ex::finite_sum(e->index, e->ints[0].substitute(lm), e->ints[1].substitute(lm),
                              substitute_exprs(e->args[0], inner));
    }
    default: {
        Node n = *e;
        for (auto& a : n.args) a = substitute_exprs(a, mapping);
        auto lm = linear_targets("");
        for (auto& l : n.ints) {
            check_linear(l);
            l = l.substitute(lm);
        }
        switch (n.kind) {
        case Kind::Add: return ex::add(n.args);
        case Kind::Mul: return ex::mul(n.args);
        case Kind::Neg: return ex::neg(n.args[0]);
        case Kind::Recip: return ex::recip(n.args[0]);
        case Kind::Pow: return ex::pow(n.args[0], n.args[1]);
        default: return std::make_shared<const Node>(std::move(n));
        }
    }
    }
}

bool structurally_equal(const Expr& x, const Expr& y) {
    if (x == y) return true;
    if (x->kind != y->kind || x->value != y->value || !(x->lin == y->lin) || x->order != y->order ||
        x->index != y->index || x->args.size() != y->args.size() || x->ints != y->ints)
        return false;
    for (std::size_t i = 0; i < x->args.size(); ++i)
        if (!structurally_equal(x->args[i], y->args[i])) return false;
    return true;
}

}  // namespace hyp321
