#pragma once

// Independent reference computations shared by the unit and acceptance tests.

#include <cmath>

#include "selberg/quadrature.hpp"
#include "selberg/special.hpp"
#include "selberg/testfun.hpp"

namespace oracle {

// g(y) = (1/pi) int_0^inf h(r) cos(r y) dr by direct quadrature of h.
inline double fourier_g(const selberg::testfun::TestFunctionPair& pair, double y) {
    using namespace selberg::numerics;
    // h is Gaussian-damped: stop where e^{-t r^2} < 1e-20.
    const double rmax = std::sqrt(46.0 / pair.t);
    auto f = [&](double r) { return pair.h(r) * std::cos(r * y); };
    const double panel = y > 1.0 ? pi / y : pi;
    return integrate_panels(f, 0.0, rmax, panel, {1e-14, 1e-13, 400}).value / pi;
}

// h(r) = int g(y) e^{iry} dy = 2 int_0^inf g(y) cos(ry) dy.
inline double fourier_h(const selberg::testfun::TestFunctionPair& pair, double r, double ymax) {
    using namespace selberg::numerics;
    auto f = [&](double y) { return pair.g(y) * std::cos(r * y); };
    const double panel = r > 1.0 ? pi / r : pi;
    return 2.0 * integrate_panels(f, 0.0, ymax, panel, {1e-14, 1e-13, 400}).value;
}

inline double central_difference(const std::function<double(double)>& f, double x, double h) {
    return (f(x + h) - f(x - h)) / (2.0 * h);
}

}  // namespace oracle
