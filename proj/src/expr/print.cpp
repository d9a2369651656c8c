#include "hyp321/expr.hpp"

namespace hyp321 {

namespace {

enum Prec { kSum = 1, kProduct = 2, kUnary = 3, kPower = 4, kAtom = 5 };

struct Printed {
    std::string text;
    int prec;
};

Printed print(const Expr& e);

std::string wrap(const Printed& p, int min_prec) {
    return p.prec < min_prec ? "(" + p.text + ")" : p.text;
}

Printed print_rational(const Rational& q) {
    std::string s = q.str();
    if (q.sign() < 0) return {s, kSum};
    return {s, q.is_integer() ? kAtom : kProduct};
}

Printed print_lin(const LinExpr& l) {
    if (l.is_constant()) return print_rational(l.constant());
    std::string s = l.str();
    if (l.terms().size() == 1 && l.constant().is_zero()) {
        const Rational& c = l.terms().begin()->second;
        if (c == Rational(1)) return {s, kAtom};
        return {s, c.sign() < 0 ? kSum : kProduct};
    }
    return {s, kSum};
}

Printed print(const Expr& e) {
    auto call = [](const std::string& f, const std::vector<std::string>& args) {
        std::string s = f + "(";
        for (std::size_t i = 0; i < args.size(); ++i) s += (i ? ", " : "") + args[i];
        return Printed{s + ")", kAtom};
    };
    switch (e->kind) {
    case Kind::Const:
        return print_rational(e->value);
    case Kind::Pi:
        return {"pi", kAtom};
    case Kind::Lin:
        return print_lin(e->lin);
    case Kind::Add: {
        std::string s;
        for (std::size_t i = 0; i < e->args.size(); ++i) {
            const Expr& t = e->args[i];
            if (i && t->kind == Kind::Neg) {
                s += " - " + wrap(print(t->args[0]), kProduct);
                continue;
            }
            Printed p = print(t);
            if (i && !p.text.empty() && p.text[0] == '-' && p.prec >= kSum && t->kind != Kind::Add) {
                s += " + (" + p.text + ")";
                continue;
            }
            s += (i ? " + " : "") + p.text;
        }
        return {s, kSum};
    }
    case Kind::Mul: {
        std::string num;
        std::vector<Printed> den;
        for (auto& f : e->args) {
            if (f->kind == Kind::Recip)
                den.push_back(print(f->args[0]));
            else
                num += (num.empty() ? "" : "*") + wrap(print(f), kProduct + 1);
        }
        if (num.empty()) num = "1";
        if (den.empty()) return {num, kProduct};
        if (den.size() == 1) return {num + "/" + wrap(den[0], kPower), kProduct};
        std::string d;
        for (auto& p : den) d += (d.empty() ? "" : "*") + wrap(p, kProduct + 1);
        return {num + "/(" + d + ")", kProduct};
    }
    case Kind::Neg:
        return {"-" + wrap(print(e->args[0]), kProduct + 1), kSum};
    case Kind::Recip:
        return {"1/" + wrap(print(e->args[0]), kPower), kProduct};
    case Kind::Pow:
        return {wrap(print(e->args[0]), kAtom) + "^" + wrap(print(e->args[1]), kAtom), kPower};
    case Kind::Gamma:
        return call("Gamma", {print(e->args[0]).text});
    case Kind::Sin:
        return call("sin", {print(e->args[0]).text});
    case Kind::Cos:
        return call("cos", {print(e->args[0]).text});
    case Kind::Polygamma:
        if (e->order == 0) return call("psi", {print(e->args[0]).text});
        return call("psi", {std::to_string(e->order), print(e->args[0]).text});
    case Kind::Pochhammer:
        return call("poch", {print(e->args[0]).text, e->ints[0].str()});
    case Kind::FiniteSum:
        return call("sum", {e->index, e->ints[0].str(), e->ints[1].str(), print(e->args[0]).text});
    case Kind::WatsonRef:
        return call("W", {print(e->args[0]).text, print(e->args[1]).text, print(e->args[2]).text,
                          e->ints[0].str(), e->ints[1].str()});
    }
    return {"?", kAtom};
}

}  // namespace

std::string to_string(const Expr& e) { return print(e).text; }

}  // namespace hyp321
