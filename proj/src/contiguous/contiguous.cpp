#include "hyp321/contiguous.hpp"

#include "hyp321/database.hpp"
#include "hyp321/errors.hpp"

#include <cmath>
#include <map>
#include <memory>

namespace hyp321 {

std::string to_string(Family f) {
    switch (f) {
        case Family::Watson: return "watson";
        case Family::Dixon: return "dixon";
        case Family::Whipple: return "whipple";
    }
    return "?";
}

Family family_from_string(const std::string& s) {
    if (s == "watson" || s == "W") return Family::Watson;
    if (s == "dixon" || s == "X") return Family::Dixon;
    if (s == "whipple" || s == "P") return Family::Whipple;
    throw Error("unknown family '" + s + "'");
}

namespace {

LinExpr sym(const char* s) { return LinExpr::symbol(s); }
LinExpr num(long v) { return LinExpr(Rational(v)); }

}  // namespace

ParamSet contig_params(Family f, long m, long n) {
    LinExpr a = sym("a"), b = sym("b"), c = sym("c");
    Rational half(1, 2);
    switch (f) {
        case Family::Watson: return {{a, b, c}, {(a + b + num(1 + m)) * half, c * Rational(2) + num(n)}};
        case Family::Dixon: return {{a, b, c}, {num(1 + m) + a - b, num(1 + m + n) + a - c}};
        case Family::Whipple: return {{a, b, num(1 + m + n) - b}, {c, num(1 + m) + a * Rational(2) - c}};
    }
    return {};
}

Assignment contig_assignment(const ContigQuery& q) { return {{"a", q.a}, {"b", q.b}, {"c", q.c}}; }

namespace {

ContigMap make_map(Family target, const std::map<std::string, LinExpr>& env, const char* ta, const char* tb,
                   const char* tc, long m, long n, const char* prefactor) {
    std::map<std::string, LinExpr> full = env;
    full["m"] = num(m);
    full["n"] = num(n);
    auto lin = [&](const char* t) { return parse_linexpr(t).substitute(full); };
    return {target, lin(ta), lin(tb), lin(tc), m, n, substitute(parse_expr(prefactor), full)};
}

std::map<std::string, LinExpr> env_of(const LinExpr& a, const LinExpr& b, const LinExpr& c) {
    return {{"a", a}, {"b", b}, {"c", c}};
}

}  // namespace

ContigMap x_to_w(const LinExpr& a, const LinExpr& b, const LinExpr& c, long m, long n) {
    return make_map(Family::Watson, env_of(a, b, c), "1+m+a-2*b", "a", "1+m+a-b-c", m, n,
                    "Gamma(a-2*b-2*c+2+2*m+n)*Gamma(1+a-c+m+n)/(Gamma(1-c+m+n)*Gamma(2*a-2*b-2*c+2+2*m+n))");
}

ContigMap w_to_x(const LinExpr& a, const LinExpr& b, const LinExpr& c, long m, long n) {
    return make_map(Family::Dixon, env_of(a, b, c), "2*c+n-a", "(b-a+m+1)/2", "(1+m-a-b)/2+c+n", m, n,
                    "Gamma(c+n+(1+m-a-b)/2)*Gamma(2*c+n)*Gamma((a+b+1+m)/2)"
                    "/(Gamma(a)*Gamma(c+n+(1+m+b-a)/2)*Gamma(2*c+n+(1+m-a-b)/2))");
}

ContigMap p_from_x(const LinExpr& a, const LinExpr& b, const LinExpr& c, long m, long n) {
    return make_map(Family::Dixon, env_of(a, b, c), "2*a-b-c+m+1", "1+a-c+m", "1-b+m+n", m, n,
                    "Gamma(a-n)*Gamma(c)/(Gamma(b+c-1-m-n)*Gamma(a-b+m+1))");
}

ContigMap p_from_w(const LinExpr& a, const LinExpr& b, const LinExpr& c, long m, long n) {
    return make_map(Family::Watson, env_of(a, b, c), "c-b", "2*a-c+m+1-b", "a-n", m, n,
                    "Gamma(a-n)*Gamma(c)*Gamma(1+m+2*a-c)/(Gamma(b)*Gamma(2*a-n)*Gamma(a-b+m+1))");
}

ContigMap dixon_swap(const LinExpr& a, const LinExpr& b, const LinExpr& c, long m, long n) {
    return {Family::Dixon, a, c, b, m + n, -n, ex::constant(Rational(1))};
}

MappedValue eval_map(const ContigMap& map, Complex a, Complex b, Complex c) {
    Assignment env{{"a", a}, {"b", b}, {"c", c}};
    return {eval_expr(map.prefactor, env), map.a.eval(env), map.b.eval(env), map.c.eval(env)};
}

const std::vector<Anchor>& watson_anchors() {
    static const std::vector<Anchor> anchors = {
        {0, 0, "ANCHOR.W00", "a", "b", "c"}, {0, 1, "EQ.15", "a", "b", "c"},
        {0, -1, "B.43", "a", "b", "c"},       {-1, 1, "B.44", "a", "c", "b"},
        {1, 0, "B.47", "a", "b", "c"},        {1, -1, "B.51", "c", "b", "a"},
        {-1, 0, "C.5", "a", "b", "c"},        {2, 0, "C.6", "a", "b", "c"},
    };
    return anchors;
}

Complex anchor_value(const Anchor& an, Complex a, Complex b, Complex c) {
    const DbEntry& e = find_entry(seed_db(), an.entry_id);
    auto pick = [&](const std::string& s) { return s == "a" ? a : s == "b" ? b : c; };
    Assignment env{{"a", pick(an.a)}, {"b", pick(an.b)}, {"c", pick(an.c)}};
    try {
        return eval_expr(e.rhs, env);
    } catch (const PoleError& err) {
        throw AnchorPole("anchor " + an.entry_id + " W(" + std::to_string(an.m) + "," + std::to_string(an.n) +
                         "): " + err.what());
    }
}

namespace {

struct Coefficients {
    Complex alpha, beta;
    std::vector<Complex> den_factors;   // vanishing aborts any use of the step
    std::vector<Complex> beta_factors;  // vanishing aborts a downward solve
};

Coefficients c1_full(Complex a, Complex b, Complex c, long m, long n) {
    Complex M{double(m)}, N{double(n)};
    Complex f1 = -1.0 + M + a + b - 2.0 * c, f2 = M - 1.0 - b + a, f3 = -M + a - b + 1.0;
    Complex den = f1 * f2 * f3;
    Complex g = M - 1.0 + a + b;
    Complex poly = 10.0 + 2.0 * M * M + 2.0 * M * N + 4.0 * c * a + 4.0 * c * b - 2.0 * b * b - 2.0 * a * a +
                   2.0 * N * a + 2.0 * N * b - 8.0 * M - 6.0 * N - 4.0 * c;
    Complex h1 = -3.0 + a + b + M, h2 = a + b - 2.0 * c + 3.0 - M - 2.0 * N;
    return {-g * poly / den, -g * h1 * h2 / den, {f1, f2, f3}, {g, h1, h2}};
}

Coefficients c2_full(Complex a, Complex b, Complex c, long m, long n) {
    Complex M{double(m)}, N{double(n)};
    Complex f1 = -1.0 + N + c, f2 = -N + 1.0 - 2.0 * c + b, f3 = -N + 1.0 - 2.0 * c + a;
    Complex den = f1 * f2 * f3;
    Complex g = 2.0 * c + N - 1.0;
    Complex poly = -3.0 * N * a - 3.0 * N * b - 11.0 * N + 2.0 * M * c - 4.0 * c * a - 4.0 * c * b - 16.0 * c + 8.0 +
                   12.0 * c * N + 4.0 * a + 4.0 * b - 2.0 * M + 8.0 * c * c + 4.0 * N * N + 2.0 * a * b + M * N;
    Complex h1 = 2.0 * c + N - 2.0, h2 = a + b - 2.0 * c + 3.0 - M - 2.0 * N;
    return {0.5 * g * poly / den, 0.5 * g * h1 * h2 / den, {f1, f2, f3}, {g, h1, h2}};
}

long mod2(long v) { return ((v % 2) + 2) % 2; }

class Engine {
public:
    Engine(Complex a, Complex b, Complex c)
        : a_(a), b_(b), c_(c), scale_(1 + std::abs(a) + std::abs(b) + std::abs(c)) {}

    Complex get(long m, long n, RecursionOrder order) {
        if (auto it = memo_.find({m, n}); it != memo_.end()) return it->second;
        Complex v;
        if (is_base(m, n)) {
            v = base(m, n);
        } else {
            long lo = mod2(m) ? -1 : 0;
            if (order == RecursionOrder::NFirst) {
                Complex w0 = walk_n(lo, n), w2 = walk_n(lo + 2, n);
                v = walk_m(m, n, lo, w0, w2);
            } else {
                std::map<long, Complex> col;
                for (long k = -1; k <= 1; ++k) col[k] = walk_m(m, k, lo, base(lo, k), base(lo + 2, k));
                v = walk_n_from(m, n, col);
            }
        }
        memo_[{m, n}] = v;
        return v;
    }

private:
    static bool is_base(long m, long n) { return m >= -1 && m <= 2 && n >= -1 && n <= 1; }

    void check(const std::vector<Complex>& factors, const char* which, long m, long n) const {
        double tol = 1e-9 * (scale_ + std::abs(double(m)) + std::abs(double(n)));
        for (auto f : factors)
            if (std::abs(f) < tol)
                throw SingularRecursionPath(std::string(which) + " step at (m,n) = (" + std::to_string(m) + "," +
                                            std::to_string(n) + ") has a vanishing coefficient factor");
    }

    Complex base(long m, long n) {
        if (auto it = memo_.find({m, n}); it != memo_.end()) return it->second;
        Complex v;
        bool found = false;
        for (auto& an : watson_anchors())
            if (an.m == m && an.n == n) v = anchor_value(an, a_, b_, c_), found = true;
        if (!found) {
            if (m == 1 && n == 1) {
                v = step_n_up(1, 1, base(1, 0), base(1, -1));
            } else if (m == -1 && n == -1) {
                v = step_n_down(-1, 1, base(-1, 1), base(-1, 0));
            } else {
                v = by_symmetry(m, n);
            }
        }
        memo_[{m, n}] = v;
        return v;
    }

    // W(a,b,c,m,n) -> X -> X(a,c,b,m+n,-n) -> W at new arguments, switching the parity of m for odd n
    Complex by_symmetry(long m, long n) {
        auto s = [](const char* x) { return LinExpr::symbol(x); };
        ContigMap wx = w_to_x(s("a"), s("b"), s("c"), m, n);
        ContigMap sw = dixon_swap(wx.a, wx.b, wx.c, wx.m, wx.n);
        ContigMap xw = x_to_w(sw.a, sw.b, sw.c, sw.m, sw.n);
        Assignment env{{"a", a_}, {"b", b_}, {"c", c_}};
        Complex pre = eval_expr(wx.prefactor, env) * eval_expr(xw.prefactor, env);
        Engine other(xw.a.eval(env), xw.b.eval(env), xw.c.eval(env));
        return pre * other.get(xw.m, xw.n, RecursionOrder::NFirst);
    }

    Complex step_n_up(long m, long n, Complex w1, Complex w2) const {
        auto co = c2_full(a_, b_, c_, m, n);
        check(co.den_factors, "C.2", m, n);
        return co.alpha * w1 + co.beta * w2;
    }
    // solves the C.2 relation at n for W(n-2)
    Complex step_n_down(long m, long n, Complex wn, Complex w1) const {
        auto co = c2_full(a_, b_, c_, m, n);
        check(co.den_factors, "C.2", m, n);
        check(co.beta_factors, "C.2", m, n);
        return (wn - co.alpha * w1) / co.beta;
    }
    Complex step_m_up(long m, long n, Complex w2, Complex w4) const {
        auto co = c1_full(a_, b_, c_, m, n);
        check(co.den_factors, "C.1", m, n);
        return co.alpha * w2 + co.beta * w4;
    }
    Complex step_m_down(long m, long n, Complex wm, Complex w2) const {
        auto co = c1_full(a_, b_, c_, m, n);
        check(co.den_factors, "C.1", m, n);
        check(co.beta_factors, "C.1", m, n);
        return (wm - co.alpha * w2) / co.beta;
    }

    Complex walk_n(long m, long n) {
        std::map<long, Complex> col;
        for (long k = -1; k <= 1; ++k) col[k] = base(m, k);
        return walk_n_from(m, n, col);
    }

    Complex walk_n_from(long m, long n, const std::map<long, Complex>& col) const {
        if (n >= -1 && n <= 1) return col.at(n);
        if (n > 1) {
            Complex prev = col.at(0), cur = col.at(1);
            for (long k = 2; k <= n; ++k) {
                Complex next = step_n_up(m, k, cur, prev);
                prev = cur;
                cur = next;
            }
            return cur;
        }
        Complex upper = col.at(0), cur = col.at(-1);
        for (long k = -2; k >= n; --k) {
            Complex next = step_n_down(m, k + 2, upper, cur);
            upper = cur;
            cur = next;
        }
        return cur;
    }

    Complex walk_m(long m, long n, long lo, Complex w_lo, Complex w_hi) const {
        if (m == lo) return w_lo;
        if (m == lo + 2) return w_hi;
        if (m > lo + 2) {
            Complex prev = w_lo, cur = w_hi;
            for (long k = lo + 4; k <= m; k += 2) {
                Complex next = step_m_up(k, n, cur, prev);
                prev = cur;
                cur = next;
            }
            return cur;
        }
        Complex upper = w_hi, cur = w_lo;
        for (long k = lo - 2; k >= m; k -= 2) {
            Complex next = step_m_down(k + 4, n, upper, cur);
            upper = cur;
            cur = next;
        }
        return cur;
    }

    Complex a_, b_, c_;
    double scale_;
    std::map<std::pair<long, long>, Complex> memo_;
};

bool near_int(Complex z, double tol = 1e-9) {
    return std::abs(z.imag()) < tol && std::abs(z.real() - std::round(z.real())) < tol;
}

void guard_whipple(Complex a, Complex b, long m, long n) {
    if (m == 0 && n == 0 && near_int(a) && std::round(a.real()) <= 0 && !near_int(b))
        throw ExceptionalCase("Whipple element with m = n = 0, non-positive integer a and non-integer b");
}

}  // namespace

std::pair<Complex, Complex> c1_coefficients(Complex a, Complex b, Complex c, long m, long n) {
    auto co = c1_full(a, b, c, m, n);
    return {co.alpha, co.beta};
}

std::pair<Complex, Complex> c2_coefficients(Complex a, Complex b, Complex c, long m, long n) {
    auto co = c2_full(a, b, c, m, n);
    return {co.alpha, co.beta};
}

Complex watson_element(Complex a, Complex b, Complex c, long m, long n, RecursionOrder order) {
    Engine e(a, b, c);
    return e.get(m, n, order);
}

Complex default_watson_element(Complex a, Complex b, Complex c, long m, long n) {
    return watson_element(a, b, c, m, n);
}

Complex dixon_element(Complex a, Complex b, Complex c, long m, long n) {
    auto s = [](const char* x) { return LinExpr::symbol(x); };
    auto v = eval_map(x_to_w(s("a"), s("b"), s("c"), m, n), a, b, c);
    return v.prefactor * watson_element(v.a, v.b, v.c, m, n);
}

Complex whipple_element(Complex a, Complex b, Complex c, long m, long n) {
    guard_whipple(a, b, m, n);
    auto s = [](const char* x) { return LinExpr::symbol(x); };
    auto v = eval_map(p_from_w(s("a"), s("b"), s("c"), m, n), a, b, c);
    return v.prefactor * watson_element(v.a, v.b, v.c, m, n);
}

Complex whipple_element_via_dixon(Complex a, Complex b, Complex c, long m, long n) {
    guard_whipple(a, b, m, n);
    auto s = [](const char* x) { return LinExpr::symbol(x); };
    auto v = eval_map(p_from_x(s("a"), s("b"), s("c"), m, n), a, b, c);
    return v.prefactor * dixon_element(v.a, v.b, v.c, m, n);
}

Complex contig_element(const ContigQuery& q) {
    switch (q.family) {
        case Family::Watson: return watson_element(q.a, q.b, q.c, q.m, q.n);
        case Family::Dixon: return dixon_element(q.a, q.b, q.c, q.m, q.n);
        case Family::Whipple: return whipple_element(q.a, q.b, q.c, q.m, q.n);
    }
    return {};
}

ContigResult checked_element(const ContigQuery& q, double rel_tol) {
    ContigResult r;
    r.value = contig_element(q);
    ParamSet p = contig_params(q.family, q.m, q.n);
    Assignment env = contig_assignment(q);
    if (!is_terminating(p, env) && excess(p).eval(env).real() <= 0)
        throw NoConvergentCheck("series cross-check unavailable: excess <= 0 (recursion value " +
                                std::to_string(r.value.real()) + ")");
    auto s = series_pfq(p, env, rel_tol);
    r.checked = true;
    r.series_value = s.value;
    r.rel_error = relative_error(r.value, s.value);
    return r;
}

}  // namespace hyp321
