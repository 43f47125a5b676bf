#include "selberg/special.hpp"

#include <array>
#include <cmath>
#include <limits>

#include "selberg/errors.hpp"

namespace selberg::numerics {

namespace {

constexpr double sqrt_pi = 1.772453850905516027298167483341145182;
constexpr double two_over_sqrt_pi = 1.128379167095512573896158903121545172;

// B_{2k} for k = 1..13
constexpr std::array<double, 13> bernoulli_2k = {
    1.0 / 6.0,           -1.0 / 30.0,          1.0 / 42.0,
    -1.0 / 30.0,         5.0 / 66.0,           -691.0 / 2730.0,
    7.0 / 6.0,           -3617.0 / 510.0,      43867.0 / 798.0,
    -174611.0 / 330.0,   854513.0 / 138.0,     -236364091.0 / 2730.0,
    8553103.0 / 6.0};

// B_{2k} / (2k)! for k = 1..12
constexpr std::array<double, 12> bernoulli_over_factorial = {
    8.3333333333333333333e-2,  -1.3888888888888888889e-3,
    3.3068783068783068783e-5,  -8.2671957671957671958e-7,
    2.0876756987868098979e-8,  -5.2841901386874931848e-10,
    1.3382536530684678833e-11, -3.3896802963225828668e-13,
    8.5860620562778445641e-15, -2.174868698558061873e-16,
    5.5090028283602295152e-18, -1.3954464685812523341e-19};

// Taylor coefficients of zeta'/zeta(1+w) + 1/w at w = 0.
constexpr std::array<double, 12> logderiv_laurent = {
    0.57721566490153286061,    -0.1875462328403652246,
    0.051688632033192893802,   -0.014751658825453744065,
    0.0045244778884953787412,  -0.0014467952045251831402,
    0.00047154407818540505034, -0.00015518029416423025375,
    0.000051345212118144143377, -0.000017041357047110641032,
    5.6660509210404753723e-6,  -1.8858486118577272098e-6};

// w zeta(1+w) = 1 + sum_{n>=0} (-1)^n gamma_n w^{n+1} / n!
constexpr std::array<double, 14> w_zeta_series = {
    1.0,
    0.57721566490153286061,
    0.072815845483676724861,
    -0.0048451815964361592423,
    -0.00034230573671722431103,
    0.000096890419394470835728,
    -6.6110318108421891813e-6,
    -3.3162409087527723593e-7,
    1.0462094584479187422e-7,
    -8.7332181002737973612e-9,
    9.4782777827623589556e-11,
    5.6584219276087079664e-11,
    -6.7686898635136966559e-12,
    3.4921159366720318545e-13};

bool is_nonpositive_integer(Complex z) {
    return z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real());
}

// pi * cot(pi z) without overflow for large |Im z|.
Complex pi_cot_pi(Complex z) {
    const Complex i(0.0, 1.0);
    if (z.imag() >= 0.0) {
        const Complex q = std::exp(2.0 * pi * i * z);
        return pi * i * (q + 1.0) / (q - 1.0);
    }
    const Complex q = std::exp(-2.0 * pi * i * z);
    return -pi * i * (q + 1.0) / (q - 1.0);
}

}  // namespace

double erfc(double x);

double erf(double x) {
    if (std::isnan(x)) return x;
    const double ax = std::fabs(x);
    if (ax < 3.0) {
        // erf x = 2/sqrt(pi) e^{-x^2} sum 2^n x^{2n+1} / (1*3*...*(2n+1)),
        // all terms positive.
        double term = ax;
        double sum = ax;
        const double x2 = 2.0 * ax * ax;
        for (int n = 1; n < 200; ++n) {
            term *= x2 / (2 * n + 1);
            sum += term;
            if (term < sum * 1e-17) break;
        }
        const double v = two_over_sqrt_pi * std::exp(-ax * ax) * sum;
        return x < 0 ? -v : v;
    }
    const double v = 1.0 - erfc(ax);
    return x < 0 ? -v : v;
}

double erfcx(double x) {
    if (std::isnan(x)) return x;
    if (x < 0.0) {
        // erfcx(-x) = 2 e^{x^2} - erfcx(x)
        return 2.0 * std::exp(x * x) - erfcx(-x);
    }
    if (x < 3.0) return std::exp(x * x) * (1.0 - erf(x));
    // Continued fraction erfc x = e^{-x^2}/sqrt(pi) * 1/(x + (1/2)/(x + 1/(x + (3/2)/(x + ...))))
    // evaluated by the modified Lentz method.
    const double tiny = 1e-300;
    double f = x;
    double c = x;
    double d = 0.0;
    for (int n = 1; n < 500; ++n) {
        const double a = 0.5 * n;
        d = x + a * d;
        if (d == 0.0) d = tiny;
        c = x + a / c;
        if (c == 0.0) c = tiny;
        d = 1.0 / d;
        const double delta = c * d;
        f *= delta;
        if (std::fabs(delta - 1.0) < 1e-16) break;
    }
    return 1.0 / (sqrt_pi * f);
}

double erfc(double x) {
    if (std::isnan(x)) return x;
    if (x < 0.0) return 2.0 - erfc(-x);
    if (x < 3.0) return 1.0 - erf(x);
    if (x > 27.3) return 0.0;
    return std::exp(-x * x) * erfcx(x);
}

Complex log_gamma(Complex z) {
    if (is_nonpositive_integer(z)) throw PoleError("log_gamma pole at nonpositive integer");
    if (z.real() < 0.5) {
        // Reflection; branch chosen by principal logs.
        return std::log(pi) - std::log(std::sin(pi * z)) - log_gamma(1.0 - z);
    }
    Complex shift(0.0, 0.0);
    while (std::abs(z) < 15.0) {
        shift += std::log(z);
        z += 1.0;
    }
    const Complex zinv = 1.0 / z;
    const Complex zinv2 = zinv * zinv;
    Complex series(0.0, 0.0);
    Complex p = zinv;
    for (int k = 1; k <= 10; ++k) {
        series += bernoulli_2k[k - 1] / (2.0 * k * (2.0 * k - 1.0)) * p;
        p *= zinv2;
    }
    return (z - 0.5) * std::log(z) - z + 0.5 * std::log(2.0 * pi) + series - shift;
}

Complex digamma(Complex z) {
    if (is_nonpositive_integer(z)) throw PoleError("digamma pole at nonpositive integer");
    if (z.real() < 0.5) return digamma(1.0 - z) - pi_cot_pi(z);
    Complex acc(0.0, 0.0);
    while (std::abs(z) < 15.0) {
        acc -= 1.0 / z;
        z += 1.0;
    }
    const Complex zinv = 1.0 / z;
    const Complex zinv2 = zinv * zinv;
    Complex series(0.0, 0.0);
    Complex p = zinv2;
    for (int k = 1; k <= 9; ++k) {
        series += bernoulli_2k[k - 1] / (2.0 * k) * p;
        p *= zinv2;
    }
    return acc + std::log(z) - 0.5 * zinv - series;
}

ZetaPair zeta_with_derivative(Complex s_in) {
    if (s_in == Complex(1.0, 0.0)) throw PoleError("zeta pole at s = 1");
    // Evaluated in extended precision: for Re s < 0 the terms grow like
    // n^{-Re s} and the phases Im(s) ln n need the extra digits.
    using LC = std::complex<long double>;
    const LC s(s_in.real(), s_in.imag());
    // N grows with |s| so the Bernoulli tail stays below ~1e-16.
    const int n_terms = std::max(50, static_cast<int>(std::ceil(std::abs(s_in))));
    const auto npow = [&](long double ln) {
        const long double mag = std::exp(-s.real() * ln);
        const long double ph = -s.imag() * ln;
        return LC(mag * std::cos(ph), mag * std::sin(ph));
    };
    LC sum(1.0L, 0.0L);
    LC dsum(0.0L, 0.0L);
    for (int n = 2; n < n_terms; ++n) {
        const long double ln = std::log(static_cast<long double>(n));
        const LC t = npow(ln);
        sum += t;
        dsum -= ln * t;
    }
    const long double N = n_terms;
    const long double lnN = std::log(N);
    const LC Ns = npow(lnN);  // N^{-s}
    const LC s1 = s - 1.0L;
    const LC tail = N * Ns / s1;
    sum += tail + 0.5L * Ns;
    dsum += -lnN * tail - tail / s1 - 0.5L * lnN * Ns;
    // Bernoulli corrections: B_{2k}/(2k)! P_k(s) N^{-s-2k+1},
    // P_k(s) = s (s+1) ... (s+2k-2).
    LC P = s;
    LC dP(1.0L, 0.0L);
    LC Npow = Ns / N;  // N^{-s-1}
    const long double invN2 = 1.0L / (N * N);
    for (int k = 1; k <= 12; ++k) {
        const long double c = bernoulli_over_factorial[k - 1];
        sum += c * P * Npow;
        dsum += c * (dP - lnN * P) * Npow;
        for (int j = 2 * k - 1; j <= 2 * k; ++j) {
            const LC f = s + static_cast<long double>(j);
            dP = dP * f + P;
            P *= f;
        }
        Npow *= invN2;
    }
    return {Complex(static_cast<double>(sum.real()), static_cast<double>(sum.imag())),
            Complex(static_cast<double>(dsum.real()), static_cast<double>(dsum.imag()))};
}

Complex zeta(Complex s) { return zeta_with_derivative(s).value; }

Complex zeta_derivative(Complex s) { return zeta_with_derivative(s).derivative; }

Complex zeta_log_deriv(Complex s) {
    const auto zp = zeta_with_derivative(s);
    if (std::abs(zp.value) < 1e-13)
        throw ZeroDivision("zeta'/zeta evaluated at a zero of zeta");
    return zp.derivative / zp.value;
}

double zeta_logderiv_laurent(int k) { return logderiv_laurent.at(static_cast<std::size_t>(k)); }

int zeta_logderiv_laurent_terms() { return static_cast<int>(logderiv_laurent.size()); }

Complex w_zeta_one_plus_w(Complex w) {
    Complex acc(0.0, 0.0);
    for (auto it = w_zeta_series.rbegin(); it != w_zeta_series.rend(); ++it) acc = acc * w + *it;
    return acc;
}

}  // namespace selberg::numerics
