#include <cmath>

#include "selberg/errors.hpp"
#include "selberg/group.hpp"

namespace selberg::group {

namespace {

using numerics::pi;

constexpr double sqrt_pi = 1.772453850905516027298167483341145182;
// Below this |2s - 1| the pole-cancelling expansions are used.
constexpr double near_half = 2e-2;

void check_poles(Complex s) {
    if (std::abs(s - 1.0) < 1e-3) throw PoleError("phi has a pole at s = 1");
    // Gamma(s - 1/2) poles at s = 1/2 - m are removable but not evaluated directly.
    for (int m = 1; m <= 3; ++m)
        if (std::abs(s - (0.5 - m)) < 1e-3) throw PoleError("phi evaluated at a removable Gamma pole");
}

Complex zeta_2s_checked(Complex s) {
    const Complex z = numerics::zeta(2.0 * s);
    if (std::abs(z) < 1e-10) throw PoleError("phi evaluated too close to a zero of zeta(2s)");
    return z;
}

}  // namespace

Complex ModularScattering::phi(Complex s) const {
    check_poles(s);
    const Complex w = 2.0 * s - 1.0;
    if (std::abs(w) < near_half) {
        // Gamma(w/2)/zeta(1+w) = 2 Gamma(1+w/2) / (w zeta(1+w))
        const Complex g = std::exp(numerics::log_gamma(1.0 + 0.5 * w) - numerics::log_gamma(s));
        return 2.0 * sqrt_pi * g * numerics::zeta(w) / numerics::w_zeta_one_plus_w(w);
    }
    const Complex zden = zeta_2s_checked(s);
    const Complex g = std::exp(numerics::log_gamma(s - 0.5) - numerics::log_gamma(s));
    return sqrt_pi * g * numerics::zeta(w) / zden;
}

Complex ModularScattering::logderiv(Complex s) const {
    check_poles(s);
    const Complex w = 2.0 * s - 1.0;
    try {
        if (std::abs(w) < near_half) {
            // psi(w/2) = psi(1+w/2) - 2/w and -2 zeta'/zeta(1+w) = 2/w - 2 sum c_k w^k:
            // the poles cancel.
            Complex series(0.0, 0.0);
            for (int k = numerics::zeta_logderiv_laurent_terms() - 1; k >= 0; --k)
                series = series * w + numerics::zeta_logderiv_laurent(k);
            return numerics::digamma(1.0 + 0.5 * w) - numerics::digamma(s) +
                   2.0 * numerics::zeta_log_deriv(w) - 2.0 * series;
        }
        zeta_2s_checked(s);
        return numerics::digamma(s - 0.5) - numerics::digamma(s) + 2.0 * numerics::zeta_log_deriv(w) -
               2.0 * numerics::zeta_log_deriv(2.0 * s);
    } catch (const ZeroDivision& e) {
        throw PoleError(std::string("phi'/phi: ") + e.what());
    }
}

Complex completed_zeta(Complex s) {
    return std::exp(-0.5 * s * std::log(pi) + numerics::log_gamma(0.5 * s)) * numerics::zeta(s);
}

}  // namespace selberg::group
