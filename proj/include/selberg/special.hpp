#pragma once

#include <complex>

namespace selberg::numerics {

using Complex = std::complex<double>;

inline constexpr double pi = 3.141592653589793238462643383279502884;
inline constexpr double euler_gamma = 0.577215664901532860606512090082402431;

// Error functions on the real line, absolute accuracy ~1e-15.
// erfcx(x) = exp(x^2) erfc(x) is the scaled form used for large arguments.
double erf(double x);
double erfc(double x);
double erfcx(double x);

// Principal branch of log Gamma, continuous on Re z > 0.
Complex log_gamma(Complex z);
Complex digamma(Complex z);

// Riemann zeta and its derivative by Euler-Maclaurin summation.
// Accurate to about 1e-12 for -2 <= Re s <= 3, |Im s| <= 200.
Complex zeta(Complex s);
Complex zeta_derivative(Complex s);
// zeta'/zeta; throws ZeroDivision where |zeta(s)| < 1e-13.
Complex zeta_log_deriv(Complex s);

struct ZetaPair {
    Complex value;
    Complex derivative;
};
ZetaPair zeta_with_derivative(Complex s);

// Coefficients c_k with zeta'/zeta(1+w) + 1/w = sum c_k w^k.
double zeta_logderiv_laurent(int k);
int zeta_logderiv_laurent_terms();

// w * zeta(1+w) as a power series, used to cancel the pole at s = 1.
Complex w_zeta_one_plus_w(Complex w);

}  // namespace selberg::numerics
