#pragma once

#include <functional>

#include "selberg/testfun.hpp"

namespace selberg::trace::detail {

// Sign of the (h(0)/4)(n - tr Phi(1/2)) term in the parabolic contribution.
inline constexpr double h0_sign = 1.0;

double half_line(const testfun::TestFunctionPair& pair, const std::function<double(double)>& f, double tol,
                 double* err);

// Point past which e^{growth y}(|g|+|g'|+|g''|+|g'''|) is negligible.
double y_cutoff(const testfun::TestFunctionPair& pair, double from, double growth);

// Integral over [a, b] on panels of length pi/freq.
double oscillatory(const std::function<double(double)>& f, double a, double b, double freq, double tol,
                   double* err);

}  // namespace selberg::trace::detail
