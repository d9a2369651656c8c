#include "hyp321/special.hpp"

#include "hyp321/errors.hpp"

#include <array>
#include <cmath>
#include <numbers>

namespace hyp321 {

namespace {

constexpr double kPi = std::numbers::pi;

bool near_nonpositive_integer(Complex z) {
    double r = std::round(z.real());
    return r <= 0 && std::abs(z - Complex(r, 0)) < kPoleTolerance;
}

Complex lanczos_gamma(Complex z) {
    static constexpr std::array<double, 9> c = {
        0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
        771.32342877765313,      -176.61502916214059,   12.507343278686905,
        -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};
    constexpr double g = 7;
    z -= 1.0;
    Complex x = c[0];
    for (int i = 1; i < 9; ++i) x += c[i] / (z + double(i));
    Complex t = z + g + 0.5;
    return std::sqrt(2 * kPi) * std::exp((z + 0.5) * std::log(t) - t) * x;
}

// B_{2j} for j = 1..10
constexpr std::array<double, 10> kBernoulli = {
    1.0 / 6,        -1.0 / 30,       1.0 / 42,          -1.0 / 30,        5.0 / 66,
    -691.0 / 2730,  7.0 / 6,         -3617.0 / 510,     43867.0 / 798,    -174611.0 / 330};

double factorial(int k) {
    double f = 1;
    for (int i = 2; i <= k; ++i) f *= i;
    return f;
}

}  // namespace

Complex sinpi(Complex z) {
    if (z.imag() == 0) {
        double x = std::fmod(z.real(), 2.0);
        if (x == std::floor(x)) return 0.0;
        if (x == 0.5 || x == -1.5) return 1.0;
        if (x == -0.5 || x == 1.5) return -1.0;
        return std::sin(kPi * x);
    }
    double r = std::round(z.real());
    Complex w = z - r;
    Complex s = std::sin(kPi * w);
    return std::fmod(r, 2.0) == 0 ? s : -s;
}

Complex cospi(Complex z) { return sinpi(z + 0.5); }

Complex cgamma(Complex z) {
    if (near_nonpositive_integer(z)) throw PoleError("Gamma pole at " + std::to_string(z.real()));
    if (z.imag() == 0 && z.real() == std::round(z.real()) && z.real() <= 171)
        return factorial(int(z.real()) - 1);
    if (z.real() < 0.5) return kPi / (sinpi(z) * lanczos_gamma(1.0 - z));
    return lanczos_gamma(z);
}

Complex polygamma(int order, Complex z) {
    if (order < 0) throw Error("negative polygamma order");
    if (near_nonpositive_integer(z)) throw PoleError("polygamma pole at " + std::to_string(z.real()));
    Complex acc = 0;
    double kf = factorial(order);
    double sign = order % 2 == 0 ? 1 : -1;  // (-1)^order
    // psi^(k)(z) = psi^(k)(z+1) - (-1)^k k! / z^(k+1)
    while (z.real() < 20 || std::abs(z) < 20) {
        acc -= sign * kf / std::pow(z, order + 1);
        z += 1.0;
    }
    Complex w = 1.0 / z, w2 = w * w;
    Complex s;
    if (order == 0) {
        s = std::log(z) - 0.5 * w;
        Complex p = w2;
        for (int j = 1; j <= 10; ++j, p *= w2) s -= kBernoulli[j - 1] / (2.0 * j) * p;
    } else {
        s = factorial(order - 1) * std::pow(w, order) + 0.5 * kf * std::pow(w, order + 1);
        Complex p = std::pow(w, order + 2);
        for (int j = 1; j <= 10; ++j, p *= w2)
            s += kBernoulli[j - 1] * factorial(2 * j + order - 1) / factorial(2 * j) * p;
        s *= -sign;  // (-1)^(k+1)
    }
    return s + acc;
}

Complex cpow(Complex base, Complex exponent) {
    if (exponent.imag() == 0 && exponent.real() == std::round(exponent.real()) &&
        std::abs(exponent.real()) <= 64) {
        long e = long(exponent.real());
        Complex r = 1, b = e < 0 ? 1.0 / base : base;
        for (long i = std::labs(e); i > 0; --i) r *= b;
        return r;
    }
    if (base.imag() == 0 && base.real() > 0)
        return std::exp(exponent * std::log(base.real()));
    return std::exp(exponent * std::log(base));
}

}  // namespace hyp321
