#include "hyp321/errors.hpp"
#include "hyp321/expr.hpp"

#include <cctype>

namespace hyp321 {

namespace {

class Parser {
public:
    Parser(const std::string& text, long max_den) : s_(text), max_den_(max_den) {}

    Expr parse_all() {
        Expr e = expr();
        skip();
        if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        return e;
    }

private:
    const std::string& s_;
    long max_den_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(msg + " in '" + s_ + "'", 1, pos_ + 1);
    }

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!accept(c)) fail(std::string("expected '") + c + "'");
    }

    Expr expr() {
        std::vector<Expr> terms{term()};
        for (;;) {
            if (accept('+'))
                terms.push_back(term());
            else if (accept('-'))
                terms.push_back(ex::neg(term()));
            else
                break;
        }
        return terms.size() == 1 ? terms[0] : ex::add(terms);
    }

    Expr term() {
        Expr e = unary();
        for (;;) {
            if (accept('*'))
                e = ex::mul({e, unary()});
            else if (accept('/')) {
                Expr d = unary();
                if (d->kind == Kind::Const && d->value.is_zero()) fail("division by zero");
                e = ex::div(e, d);
            } else
                break;
        }
        return e;
    }

    Expr unary() {
        if (accept('-')) return ex::neg(unary());
        if (accept('+')) return unary();
        return power();
    }

    Expr power() {
        Expr base = primary();
        if (accept('^')) return ex::pow(base, unary());
        return base;
    }

    std::string identifier() {
        skip();
        std::size_t start = pos_;
        while (pos_ < s_.size() &&
               (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
            ++pos_;
        if (start == pos_ || std::isdigit(static_cast<unsigned char>(s_[start])))
            fail("expected identifier");
        return s_.substr(start, pos_ - start);
    }

    LinExpr linear(const Expr& e) {
        auto l = as_linear(e);
        if (!l) fail("expected a linear expression");
        return *l;
    }

    Expr number() {
        std::size_t start = pos_;
        while (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '.'))
            ++pos_;
        std::string lit = s_.substr(start, pos_ - start);
        Rational q;
        try {
            q = Rational::from_decimal(lit);
        } catch (const ParseError&) {
            fail("malformed number '" + lit + "'");
        }
        if (max_den_ > 0 && lit.find('.') != std::string::npos && q.den() > max_den_)
            fail("decimal '" + lit + "' needs a denominator above " + std::to_string(max_den_) +
                 "; write it as a fraction p/q");
        return ex::constant(q);
    }

    Expr primary() {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        char c = s_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
        if (accept('(')) {
            Expr e = expr();
            expect(')');
            return e;
        }
        std::string id = identifier();
        if (!accept('(')) {
            if (id == "pi") return ex::pi();
            if (id == "const") fail("'const' is not a valid symbol name");
            return ex::sym(id);
        }
        Expr r = call(id);
        expect(')');
        return r;
    }

    Expr call(const std::string& f) {
        if (f == "sum") {
            std::string index = identifier();
            expect(',');
            LinExpr lo = linear(expr());
            expect(',');
            LinExpr hi = linear(expr());
            expect(',');
            return ex::finite_sum(index, lo, hi, expr());
        }
        std::vector<Expr> args{expr()};
        while (accept(',')) args.push_back(expr());
        auto arity = [&](std::size_t n) {
            if (args.size() != n) fail(f + " expects " + std::to_string(n) + " argument(s)");
        };
        if (f == "Gamma") return arity(1), ex::gamma(args[0]);
        if (f == "sin") return arity(1), ex::sin(args[0]);
        if (f == "cos") return arity(1), ex::cos(args[0]);
        if (f == "sqrt") return arity(1), ex::pow(args[0], ex::constant(Rational(1, 2)));
        if (f == "psi") {
            if (args.size() == 1) return ex::polygamma(0, args[0]);
            arity(2);
            auto k = as_linear(args[0]);
            if (!k || !k->is_constant() || !k->constant().is_integer() || k->constant().sign() < 0)
                fail("psi order must be a nonnegative integer");
            return ex::polygamma(int(*k->constant().to_long()), args[1]);
        }
        if (f == "poch") return arity(2), ex::poch(args[0], linear(args[1]));
        if (f == "W") {
            arity(5);
            return ex::watson(args[0], args[1], args[2], linear(args[3]), linear(args[4]));
        }
        fail("unknown function '" + f + "'");
    }
};

}  // namespace

Expr parse_expr(const std::string& text) { return Parser(text, 0).parse_all(); }

LinExpr parse_linexpr(const std::string& text, long max_decimal_den) {
    Expr e = Parser(text, max_decimal_den).parse_all();
    auto l = as_linear(e);
    if (!l) throw ParseError("'" + text + "' is not a linear expression in its symbols");
    return *l;
}

}  // namespace hyp321
