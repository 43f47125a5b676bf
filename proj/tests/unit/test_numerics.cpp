#include <cmath>
#include <random>

#include "doctest.h"
#include "selberg/quadrature.hpp"
#include "selberg/special.hpp"

using namespace selberg;
using namespace selberg::numerics;

namespace {
bool close(Complex a, Complex b, double tol) { return std::abs(a - b) <= tol; }
bool close_rel(Complex a, Complex b, double tol) { return std::abs(a - b) <= tol * std::abs(b); }
}  // namespace

TEST_CASE("erf and erfc agree with libm") {
    for (double x = -8.0; x <= 8.0; x += 0.01) {
        CHECK(std::abs(numerics::erf(x) - std::erf(x)) < 1e-14);
        CHECK(std::abs(numerics::erfc(x) - std::erfc(x)) < 1e-14);
        if (x > 0.0) CHECK(numerics::erfc(x) == doctest::Approx(std::erfc(x)).epsilon(1e-12));
    }
}

TEST_CASE("erfcx for large arguments") {
    // asymptotic series 1/(x sqrt(pi)) (1 - 1/(2x^2) + 3/(4x^4) - 15/(8x^6))
    for (double x : {30.0, 100.0, 1e3}) {
        const double x2 = x * x;
        const double approx =
            (1.0 - 0.5 / x2 + 0.75 / (x2 * x2) - 1.875 / (x2 * x2 * x2)) / (x * std::sqrt(pi));
        CHECK(numerics::erfcx(x) == doctest::Approx(approx).epsilon(1e-11));
    }
    CHECK(numerics::erfcx(5.0) == doctest::Approx(std::exp(25.0) * std::erfc(5.0)).epsilon(1e-13));
    CHECK(numerics::erfcx(-1.0) == doctest::Approx(std::exp(1.0) * std::erfc(-1.0)).epsilon(1e-14));
}

TEST_CASE("log_gamma reference values") {
    CHECK(close_rel(log_gamma({1, 4}), {-4.6710995934088876474, 2.3096980565725349601}, 1e-13));
    CHECK(close_rel(log_gamma({0.25, -7}), {-10.562953339040001933, -6.2301605005296513126}, 1e-13));
    CHECK(close_rel(log_gamma({2, 30}), {-41.10259995100697919, 74.356017063487634994}, 1e-13));
    CHECK(close(log_gamma({0.5, 1e-3}), {0.57236247552765851618, -0.0019635072212284117484}, 1e-14));
    // left half-plane agrees up to the choice of branch
    const Complex d = log_gamma({-2.5, 1}) - Complex(-2.3441906524655925559, -8.3041279866579258844);
    CHECK(std::abs(d.real()) < 1e-12);
    const double k = d.imag() / (2 * pi);
    CHECK(std::abs(k - std::round(k)) < 1e-12);
}

TEST_CASE("log_gamma matches tgamma on the real axis") {
    for (double x = 0.1; x < 30; x += 0.37)
        CHECK(log_gamma(x).real() == doctest::Approx(std::lgamma(x)).epsilon(1e-13));
}

TEST_CASE("log_gamma is continuous along vertical lines") {
    for (double re : {0.25, 0.5, 1.0, 2.0}) {
        Complex prev = log_gamma({re, 0.0});
        for (double im = 0.05; im <= 60.0; im += 0.05) {
            const Complex cur = log_gamma({re, im});
            CHECK(std::abs(cur.imag() - prev.imag()) < 1.0);
            prev = cur;
        }
    }
}

TEST_CASE("log_gamma recurrence, seeded") {
    std::mt19937 rng(12345);
    std::uniform_real_distribution<double> re(0.3, 5.0), im(-50.0, 50.0);
    for (int i = 0; i < 200; ++i) {
        const Complex z(re(rng), im(rng));
        const Complex lhs = log_gamma(z + 1.0);
        const Complex rhs = log_gamma(z) + std::log(z);
        CHECK(std::abs(std::exp(lhs - rhs) - 1.0) < 1e-12);
    }
}

TEST_CASE("digamma reference values and identities") {
    CHECK(close_rel(digamma({1, 4}), {1.3915362879216462068, 1.4457963268331032764}, 1e-13));
    CHECK(close_rel(digamma({0.25, -7}), {1.9456973736998503039, -1.6065564616259578587}, 1e-13));
    CHECK(close_rel(digamma({0.5, 100}), {4.60516601924850419, 1.5707963267948966192}, 1e-13));
    CHECK(close_rel(digamma({-3.3, 0.2}), {2.6923275850058860302, 2.2447232305190949383}, 1e-12));
    CHECK(close_rel(digamma({1e-3, 0}), {-1000.5755719318102797, 0}, 1e-13));
    CHECK(digamma(1.0).real() == doctest::Approx(-euler_gamma).epsilon(1e-15));
    CHECK_THROWS_AS(digamma(-2.0), PoleError);
    CHECK_THROWS_AS(log_gamma(0.0), PoleError);

    std::mt19937 rng(7);
    std::uniform_real_distribution<double> re(-5.0, 5.0), im(-80.0, 80.0);
    for (int i = 0; i < 200; ++i) {
        const Complex z(re(rng), im(rng));
        CHECK(close(digamma(z + 1.0), digamma(z) + 1.0 / z, 1e-11));
    }
}

TEST_CASE("zeta reference values") {
    CHECK(close_rel(zeta(2.0), {1.6449340668482264365, 0}, 1e-14));
    CHECK(close(zeta({0.5, 14.134725141734693790}), {0, 0}, 1e-13));
    CHECK(close_rel(zeta({0.5, 10}), {1.5448952202967527669, -0.11533646527127337544}, 1e-13));
    CHECK(close(zeta({-2, 200}), {2780.3037510479034656, -6113.0904724473102087}, 1e-9));
    CHECK(close_rel(zeta({3, -150}), {0.88803791335075516603, 0.0085000422439818845052}, 1e-13));
    CHECK(close_rel(zeta({0.1, 40}), {0.68065742683670883116, -2.0167767453299897548}, 1e-13));
    CHECK(close_rel(zeta({1.5, 1e-3}), {2.612367353939302682, -0.0039322237373294335544}, 1e-13));
    CHECK(close_rel(zeta({-1.5, 3}), {0.20132883054215032943, 0.097149743015620040868}, 1e-12));
    CHECK_THROWS_AS(zeta(1.0), PoleError);
}

TEST_CASE("zeta derivative reference values") {
    CHECK(close_rel(zeta_derivative(2.0), {-0.9375482543158437537, 0}, 1e-13));
    CHECK(close_rel(zeta_derivative({0.5, 14.134725141734693790}),
                    {0.78329651186703112183, 0.12469982974817057287}, 1e-12));
    CHECK(close_rel(zeta_derivative({-2, 200}),
                    {-9041.3219545099505826, 20423.634732623258761}, 1e-12));
    CHECK(close_rel(zeta_derivative({0.1, 40}), {0.41974148466183200201, 3.4419006956119778616}, 1e-12));
    CHECK(close_rel(zeta_derivative({1.5, 1e-3}), {-3.9321917372540963865, 0.015989428371675525785}, 1e-12));
}

TEST_CASE("zeta functional equation, seeded") {
    // zeta(s) = 2^s pi^{s-1} sin(pi s/2) Gamma(1-s) zeta(1-s)
    std::mt19937 rng(2024);
    std::uniform_real_distribution<double> re(-1.0, 0.4), im(-30.0, 30.0);
    for (int i = 0; i < 300; ++i) {
        const Complex s(re(rng), im(rng));
        const Complex chi = std::exp(s * std::log(2.0) + (s - 1.0) * std::log(pi) +
                                     log_gamma(1.0 - s)) *
                            std::sin(pi * s / 2.0);
        const Complex rhs = chi * zeta(1.0 - s);
        CHECK(std::abs(zeta(s) - rhs) <= 1e-9 * std::max(1.0, std::abs(rhs)));
    }
}

TEST_CASE("zeta log derivative near s = 1 matches its Laurent expansion") {
    for (double r : {1e-3, 5e-3, 1e-2}) {
        const Complex w(0.0, r);
        Complex series(0.0, 0.0);
        for (int k = zeta_logderiv_laurent_terms() - 1; k >= 0; --k)
            series = series * w + zeta_logderiv_laurent(k);
        CHECK(close(zeta_log_deriv(1.0 + w) + 1.0 / w, series, 1e-10));
        CHECK(close_rel(w_zeta_one_plus_w(w), w * zeta(1.0 + w), 1e-12));
    }
    CHECK_THROWS_AS(zeta_log_deriv({0.5, 14.134725141734693790}), ZeroDivision);
}

TEST_CASE("adaptive quadrature on known integrals") {
    auto r1 = integrate([](double x) { return std::sqrt(x); }, 0.0, 1.0);
    CHECK(r1.value == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
    CHECK(r1.error_estimate < 1e-10);

    auto r2 = integrate([](double x) { return std::log(x); }, 0.0, 1.0);
    CHECK(r2.value == doctest::Approx(-1.0).epsilon(1e-11));

    auto r3 = integrate_semi_infinite([](double x) { return std::exp(-x * x); }, 0.0,
                                      Decay::gaussian, 1e-13);
    CHECK(r3.value == doctest::Approx(std::sqrt(pi) / 2.0).epsilon(1e-13));

    auto r4 = integrate_semi_infinite([](double x) { return 1.0 / (1.0 + x * x); }, 0.0,
                                      Decay::algebraic, 1e-12);
    CHECK(r4.value == doctest::Approx(pi / 2.0).epsilon(1e-12));

    auto r5 = integrate_semi_infinite([](double x) { return std::exp(-2.0 * x); }, 1.0,
                                      Decay::exponential, 1e-14);
    CHECK(r5.value == doctest::Approx(std::exp(-2.0) / 2.0).epsilon(1e-12));

    // int_0^inf e^{-x} cos(50 x) dx = 1/(1+2500)
    const double gamma = 50.0;
    auto r6 = integrate_panels([&](double x) { return std::exp(-x) * std::cos(gamma * x); }, 0.0,
                               45.0, pi / gamma, {1e-13, 1e-13, 200});
    CHECK(r6.value == doctest::Approx(1.0 / 2501.0).epsilon(1e-10));

    auto r7 = integrate([](double x) { return Complex(std::cos(x), std::sin(x)); }, 0.0, pi);
    CHECK(close(r7.value, {0.0, 2.0}, 1e-13));
}

TEST_CASE("quadrature errors") {
    CHECK_THROWS_AS(integrate([](double x) { return 1.0 / x; }, 0.0, 1.0, {1e-14, 1e-14, 50}),
                    NonConvergence);
    CHECK_THROWS_AS(integrate([](double) { return std::nan(""); }, 0.0, 1.0), DomainError);
    CHECK_THROWS_AS(integrate_semi_infinite([](double) { return 1.0; }, 0.0,
                                            Decay::exponential, 1e-10),
                    NonConvergence);
}
