#include "hyp321/series.hpp"

#include "hyp321/errors.hpp"
#include "hyp321/special.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>

namespace hyp321 {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr int kLevels = 6;
constexpr long kMaxTerms = 1L << 22;

std::optional<long> nonpositive_integer(Complex z) {
    double r = std::round(z.real());
    if (r <= 0 && std::abs(z - Complex(r, 0)) < kPoleTolerance) return long(-r);
    return std::nullopt;
}

// Neumaier compensated summation, per component
struct CompensatedSum {
    double re = 0, im = 0, cre = 0, cim = 0;
    double magnitude = 0;

    static void step(double& s, double& c, double x) {
        double t = s + x;
        if (std::abs(s) >= std::abs(x))
            c += (s - t) + x;
        else
            c += (x - t) + s;
        s = t;
    }
    void add(Complex x) {
        step(re, cre, x.real());
        step(im, cim, x.imag());
        magnitude += std::abs(x);
    }
    Complex value() const { return {re + cre, im + cim}; }
};

struct TermStream {
    const std::vector<Complex>& up;
    const std::vector<Complex>& lo;
    Complex term = 1;
    long k = 0;

    Complex next() {
        Complex r = term;
        Complex num = 1, den = double(k + 1);
        for (auto& u : up) num *= u + double(k);
        for (auto& l : lo) den *= l + double(k);
        term *= num / den;
        ++k;
        return r;
    }
};

Complex excess_of(const std::vector<Complex>& up, const std::vector<Complex>& lo) {
    Complex s = 0;
    for (auto& l : lo) s += l;
    for (auto& u : up) s -= u;
    return s;
}

void check_lower(const std::vector<Complex>& lo, std::optional<long> stop) {
    for (auto& l : lo)
        if (auto j = nonpositive_integer(l); j && (!stop || *j < *stop))
            throw LowerPole("lower parameter at non-positive integer " + std::to_string(-*j));
}

// Richardson elimination of the N^-(s+j) tail terms over partial sums at N_i = base*2^i
SeriesResult extrapolate(const std::vector<Complex>& sums, Complex s, double magnitude, long terms) {
    const int n = int(sums.size());
    std::vector<std::vector<Complex>> t(n);
    t[0] = sums;
    double amplification = 1;
    for (int j = 1; j < n; ++j) {
        Complex f = cpow(2.0, s + double(j - 1));
        amplification *= std::abs(f + 1.0) / std::abs(f - 1.0);
        for (int i = 0; i + j < n; ++i) t[j].push_back((f * t[j - 1][i + 1] - t[j - 1][i]) / (f - 1.0));
    }
    SeriesResult r;
    r.value = t[n - 1][0];
    r.abs_error_estimate = std::abs(t[n - 1][0] - t[n - 2][1]) + 4 * kEps * magnitude * amplification;
    r.terms_used = terms;
    return r;
}

}  // namespace

bool is_terminating(const ParamSet& p, const Assignment& a) {
    for (auto& u : p.upper)
        if (nonpositive_integer(u.eval(a))) return true;
    return false;
}

bool is_karlsson_minton(const ParamSet& p, const Assignment& a, int max_gap) {
    for (auto& u : p.upper) {
        for (auto& l : p.lower) {
            Complex d = u.eval(a) - l.eval(a);
            double r = std::round(d.real());
            if (r >= 1 && r <= max_gap && std::abs(d - Complex(r, 0)) < kPoleTolerance) return true;
        }
    }
    return false;
}

SeriesResult series_pfq(const ParamSet& p, const Assignment& a, double rel_tol) {
    std::vector<Complex> up, lo;
    for (auto& u : p.upper) up.push_back(u.eval(a));
    for (auto& l : p.lower) lo.push_back(l.eval(a));
    return series_pfq(up, lo, rel_tol);
}

SeriesResult series_window(const std::vector<Complex>& upper, const std::vector<Complex>& lower, long base) {
    check_lower(lower, std::nullopt);
    Complex s = excess_of(upper, lower);
    if (s.real() <= 0) throw DivergentSeries("parametric excess has non-positive real part");
    TermStream ts{upper, lower};
    CompensatedSum acc;
    std::vector<Complex> sums;
    long next = base;
    while (int(sums.size()) <= kLevels) {
        while (ts.k < next) acc.add(ts.next());
        sums.push_back(acc.value());
        next *= 2;
    }
    return extrapolate(sums, s, acc.magnitude, ts.k);
}

SeriesResult series_pfq(const std::vector<Complex>& upper, const std::vector<Complex>& lower, double rel_tol) {
    std::optional<long> stop;
    for (auto& u : upper)
        if (auto k = nonpositive_integer(u)) stop = stop ? std::min(*stop, *k) : *k;
    check_lower(lower, stop);

    if (stop) {
        std::vector<Complex> up = upper;
        for (auto& u : up)
            if (auto k = nonpositive_integer(u)) u = Complex(-double(*k), 0);
        TermStream ts{up, lower};
        CompensatedSum acc;
        for (long k = 0; k <= *stop; ++k) acc.add(ts.next());
        SeriesResult r;
        r.value = acc.value();
        r.abs_error_estimate = 2 * kEps * acc.magnitude;
        r.terms_used = *stop + 1;
        r.terminated = true;
        return r;
    }

    Complex s = excess_of(upper, lower);
    if (s.real() <= 0) throw DivergentSeries("parametric excess has non-positive real part");

    double scale = 0;
    for (auto& z : upper) scale = std::max(scale, std::abs(z));
    for (auto& z : lower) scale = std::max(scale, std::abs(z));
    long base = 16 + long(2 * scale);

    TermStream ts{upper, lower};
    CompensatedSum acc;
    std::vector<Complex> sums;
    std::optional<SeriesResult> best;
    long next = base;
    for (std::size_t start = 0;; start += 2) {
        while (sums.size() < start + kLevels + 1) {
            if (next > kMaxTerms) {
                if (best && best->abs_error_estimate <= rel_tol * std::abs(best->value)) return *best;
                throw NoConvergence("series did not reach the requested tolerance within " +
                                    std::to_string(kMaxTerms) + " terms");
            }
            while (ts.k < next) acc.add(ts.next());
            sums.push_back(acc.value());
            next *= 2;
        }
        std::vector<Complex> window(sums.begin() + long(start), sums.end());
        SeriesResult r = extrapolate(window, s, acc.magnitude, ts.k);
        if (!best || r.abs_error_estimate < best->abs_error_estimate) best = r;
        if (best->abs_error_estimate <= rel_tol * std::abs(best->value)) return *best;
    }
}

}  // namespace hyp321
