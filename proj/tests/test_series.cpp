#include <doctest.h>

#include "hyp321/errors.hpp"
#include "hyp321/expr.hpp"
#include "hyp321/series.hpp"
#include "hyp321/special.hpp"

#include <cmath>
#include <numbers>
#include <random>

using namespace hyp321;

namespace {

double rel(Complex x, Complex y) { return std::abs(x - y) / std::abs(y); }

ParamSet ps(std::initializer_list<const char*> up, std::initializer_list<const char*> lo) {
    ParamSet p;
    for (auto u : up) p.upper.push_back(parse_linexpr(u));
    for (auto l : lo) p.lower.push_back(parse_linexpr(l));
    return p;
}

Complex literal_sum(const std::vector<Complex>& up, const std::vector<Complex>& lo, int terms, double* mass) {
    Complex t = 1, s = 1;
    *mass = 1;
    for (int k = 0; k + 1 < terms; ++k) {
        Complex num = 1, den = double(k + 1);
        for (auto u : up) num *= u + double(k);
        for (auto l : lo) den *= l + double(k);
        t *= num / den;
        s += t;
        *mass += std::abs(t);
    }
    return s;
}

}  // namespace

TEST_CASE("excess examples") {
    CHECK(excess(ps({"a", "b", "c"}, {"f", "e"})) == parse_linexpr("f+e-a-b-c"));
    CHECK(excess(ps({"1/5", "3/10", "2/5"}, {"1", "11/10"})) == LinExpr(Rational(6, 5)));
    CHECK(excess(ps({"-2", "b", "c"}, {"e", "f"})) == parse_linexpr("e+f+2-b-c"));
}

TEST_CASE("termination classification") {
    CHECK(is_terminating(ps({"1-n", "a", "b"}, {"c", "e"}), {{"n", 1}, {"a", 0.3}, {"b", 0.4}, {"c", 1.2}, {"e", 1.5}}));
    CHECK_FALSE(is_terminating(ps({"3/10", "7/10", "11/10"}, {"2", "3"}), {}));
    CHECK(is_terminating(ps({"-n", "a", "b"}, {"c", "e"}), {{"n", 3}, {"a", 0.3}, {"b", 0.4}, {"c", 1.2}, {"e", 1.5}}));
}

TEST_CASE("Karlsson-Minton classification") {
    Assignment g{{"a", 0.31}, {"b", 0.47}, {"c", 0.83}, {"e", 1.29}, {"f", 1.61}};
    CHECK(is_karlsson_minton(ps({"b+1", "a", "c"}, {"b", "e"}), g));
    CHECK_FALSE(is_karlsson_minton(ps({"a", "b", "c"}, {"e", "f"}), g));
    // the 4F3 of the Minton-type reduction
    ParamSet p{{parse_linexpr("1"), LinExpr(1) + LinExpr::symbol("t"), parse_linexpr("x"), parse_linexpr("-n")},
               {LinExpr::symbol("t"), parse_linexpr("b+1"), parse_linexpr("y")}};
    CHECK(is_karlsson_minton(p, {{"t", 0.37}, {"x", 0.52}, {"n", 3}, {"b", 0.41}, {"y", 2.3}}));
}

TEST_CASE("series examples") {
    auto r0 = series_pfq(ps({"0", "a", "b"}, {"c", "e"}), {{"a", 0.3}, {"b", 0.4}, {"c", 1.2}, {"e", 1.5}});
    CHECK(r0.value == Complex(1));
    CHECK(r0.terminated);
    auto r1 = series_pfq(ps({"1", "1", "1"}, {"2", "2"}), {});
    CHECK(rel(r1.value, std::numbers::pi * std::numbers::pi / 6) < 1e-10);
    auto r2 = series_pfq({0.5, 0.5}, {2.0});
    CHECK(rel(r2.value, 1.27323954473516268615) < 1e-10);  // mpmath hyp2f1(1/2,1/2,2,1)
    CHECK(rel(r2.value, 4 / std::numbers::pi) < 1e-10);
    auto r3 = series_pfq(ps({"-2", "1", "1"}, {"2", "2"}), {});
    CHECK(rel(r3.value, 11.0 / 18) < 1e-15);
    CHECK(r3.terminated);
    CHECK(r3.terms_used == 3);
}

TEST_CASE("series errors") {
    CHECK_THROWS_AS(series_pfq(ps({"1/2", "1/2", "1"}, {"1", "1"}), {}), DivergentSeries);
    CHECK_THROWS_AS(series_pfq(ps({"-3", "1/2", "1"}, {"-1", "3"}), {}), LowerPole);
    // termination before the lower pole is fine
    CHECK_NOTHROW(series_pfq(ps({"-1", "1/2", "1"}, {"-2", "3"}), {}));
}

TEST_CASE("Gauss summation cross-check") {
    std::mt19937_64 rng(101);
    std::uniform_real_distribution<double> u(-0.9, 1.9);
    int done = 0;
    while (done < 25) {
        double a = u(rng), b = u(rng), c = a + b + 0.6 + std::abs(u(rng)) * 2;
        Complex closed = cgamma(c) * cgamma(c - a - b) / (cgamma(c - a) * cgamma(c - b));
        CHECK(rel(series_pfq({a, b}, {c}).value, closed) < 1e-9);
        ++done;
    }
}

TEST_CASE("termination exactness") {
    std::mt19937_64 rng(103);
    std::uniform_real_distribution<double> u(0.1, 2.9);
    for (int n = 0; n <= 10; ++n) {
        std::vector<Complex> up{double(-n), u(rng), u(rng)}, lo{u(rng), u(rng)};
        auto r = series_pfq(up, lo);
        CHECK(r.terminated);
        double mass = 0;
        Complex lit = literal_sum(up, lo, n + 1, &mass);
        CHECK(std::abs(r.value - lit) <= 1e-14 * mass);
    }
}

TEST_CASE("truncation doubling self-consistency") {
    std::mt19937_64 rng(107);
    std::uniform_real_distribution<double> u(0.1, 1.5), s(0.6, 3);
    for (int i = 0; i < 50; ++i) {
        double a = u(rng), b = u(rng), c = u(rng), e = u(rng);
        double f = a + b + c + s(rng) - e;
        std::vector<Complex> up{a, b, c}, lo{e, f};
        auto r = series_pfq(up, lo);
        auto w1 = series_window(up, lo, 64), w2 = series_window(up, lo, 128);
        double est = r.abs_error_estimate;
        CHECK(std::abs(r.value) > 0);
        CHECK(est <= 1e-10 * std::abs(r.value) * 10);
        CHECK(std::abs(w1.value - w2.value) <= 2 * (w1.abs_error_estimate + w2.abs_error_estimate) + 1e-14);
        CHECK(std::abs(r.value - w2.value) <= 2 * (est + w2.abs_error_estimate) + 1e-14);
    }
}

TEST_CASE("error estimate shrinks as the tolerance tightens") {
    std::vector<Complex> up{0.3, 0.45, 0.7}, lo{1.1, 1.05};
    double prev = INFINITY;
    for (double tol : {1e-4, 1e-6, 1e-8, 1e-10, 1e-12}) {
        auto r = series_pfq(up, lo, tol);
        CHECK(r.abs_error_estimate <= prev);
        CHECK(r.abs_error_estimate <= tol * std::abs(r.value));
        prev = r.abs_error_estimate;
    }
}

TEST_CASE("small excess against Dixon's formula") {
    // excess 2 + a - 2b - 2c = 0.6
    double a = 0.7, b = 0.45, c = 0.6;
    std::vector<Complex> up{a, b, c}, lo{1 + a - b, 1 + a - c};
    Complex dixon = cgamma(1 + a / 2) * cgamma(1 + a - b) * cgamma(1 + a - c) * cgamma(1 + a / 2 - b - c) /
                    (cgamma(1 + a) * cgamma(1 + a / 2 - b) * cgamma(1 + a / 2 - c) * cgamma(1 + a - b - c));
    CHECK(rel(series_pfq(up, lo).value, dixon) < 1e-9);
}
