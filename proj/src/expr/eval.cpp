#include "hyp321/errors.hpp"
#include "hyp321/expr.hpp"
#include "hyp321/special.hpp"

#include <cmath>
#include <numbers>

namespace hyp321 {

Complex default_watson_element(Complex a, Complex b, Complex c, long m, long n);

namespace {

long bind_integer(const LinExpr& l, const Assignment& a, const char* what) {
    Complex v = l.eval(a);
    double r = std::round(v.real());
    if (std::abs(v - Complex(r, 0)) > 1e-9)
        throw NonIntegerSumBound(std::string(what) + " '" + l.str() + "' is not an integer");
    return long(r);
}

struct Evaluator {
    const WatsonHook& watson;

    Complex operator()(const Expr& e, const Assignment& a) const {
        switch (e->kind) {
        case Kind::Const:
            return e->value.to_double();
        case Kind::Pi:
            return std::numbers::pi;
        case Kind::Lin:
            return e->lin.eval(a);
        case Kind::Add: {
            Complex s = 0;
            for (auto& t : e->args) s += (*this)(t, a);
            return s;
        }
        case Kind::Mul: {
            Complex p = 1;
            for (auto& f : e->args) p *= (*this)(f, a);
            return p;
        }
        case Kind::Neg:
            return -(*this)(e->args[0], a);
        case Kind::Recip: {
            Complex d = (*this)(e->args[0], a);
            if (std::abs(d) < 1e-300) throw PoleError("division by zero");
            return 1.0 / d;
        }
        case Kind::Pow:
            return cpow((*this)(e->args[0], a), (*this)(e->args[1], a));
        case Kind::Gamma:
            return cgamma((*this)(e->args[0], a));
        case Kind::Polygamma:
            return polygamma(e->order, (*this)(e->args[0], a));
        case Kind::Sin:
        case Kind::Cos: {
            Complex t = pi_multiple(e->args[0], a);
            return e->kind == Kind::Sin ? sinpi(t) : cospi(t);
        }
        case Kind::Pochhammer:
            return pochhammer(e, a);
        case Kind::FiniteSum: {
            long lo = bind_integer(e->ints[0], a, "sum bound");
            long hi = bind_integer(e->ints[1], a, "sum bound");
            Assignment inner = a;
            Complex s = 0;
            for (long i = lo; i <= hi; ++i) {
                inner[e->index] = double(i);
                s += (*this)(e->args[0], inner);
            }
            return s;
        }
        case Kind::WatsonRef: {
            long m = bind_integer(e->ints[0], a, "Watson offset");
            long n = bind_integer(e->ints[1], a, "Watson offset");
            Complex x = (*this)(e->args[0], a), y = (*this)(e->args[1], a), z = (*this)(e->args[2], a);
            return watson ? watson(x, y, z, m, n) : default_watson_element(x, y, z, m, n);
        }
        }
        throw Error("unknown expression node");
    }

    // argument / pi, so that sin and cos see exact multiples of pi
    Complex pi_multiple(const Expr& arg, const Assignment& a) const {
        if (arg->kind == Kind::Pi) return 1.0;
        if (arg->kind == Kind::Mul) {
            int pis = 0;
            Complex rest = 1;
            for (auto& f : arg->args) {
                if (f->kind == Kind::Pi && pis == 0)
                    ++pis;
                else
                    rest *= (*this)(f, a);
            }
            if (pis == 1) return rest;
        }
        return (*this)(arg, a) / std::numbers::pi;
    }

    Complex pochhammer(const Expr& e, const Assignment& a) const {
        Complex x = (*this)(e->args[0], a);
        Complex nu = e->ints[0].eval(a);
        double r = std::round(nu.real());
        if (std::abs(nu - Complex(r, 0)) < 1e-9 && std::abs(r) < 1e6) {
            long n = long(r);
            Complex p = 1;
            if (n >= 0) {
                for (long j = 0; j < n; ++j) p *= x + double(j);
                return p;
            }
            for (long j = 1; j <= -n; ++j) p *= x - double(j);
            if (std::abs(p) < 1e-300) throw PoleError("Pochhammer with negative count hits a pole");
            return 1.0 / p;
        }
        return cgamma(x + nu) / cgamma(x);
    }
};

}  // namespace

Complex eval_expr(const Expr& e, const Assignment& a) {
    static const WatsonHook none;
    return Evaluator{none}(e, a);
}

Complex eval_expr(const Expr& e, const Assignment& a, const WatsonHook& watson) {
    return Evaluator{watson}(e, a);
}

}  // namespace hyp321
