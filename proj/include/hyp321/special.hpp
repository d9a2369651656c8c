#pragma once

#include <complex>

namespace hyp321 {

using Complex = std::complex<double>;

inline constexpr double kPoleTolerance = 1e-12;

// sin(pi z) and cos(pi z) with exact zeros at the integers
Complex sinpi(Complex z);
Complex cospi(Complex z);

// throws PoleError within kPoleTolerance of a non-positive integer
Complex cgamma(Complex z);
Complex polygamma(int order, Complex z);

// exact-integer exponents use repeated multiplication
Complex cpow(Complex base, Complex exponent);

}  // namespace hyp321
