#pragma once

#include <functional>
#include <string>

#include "selberg/quadrature.hpp"

namespace selberg::testfun {

using RealFn = std::function<double(double)>;

enum class Kind { gauss_heat, cauchy_gauss, custom };

const char* to_string(Kind kind);

// An even test function h and its Fourier transform g = (1/2pi) int h(r) e^{-iry} dr,
// together with g', g'', g'''. h_imag(sigma) evaluates h(i sigma).
struct TestFunctionPair {
    Kind kind = Kind::custom;
    double t = 0.0;
    double p = 0.0;
    RealFn h;
    RealFn h_imag;
    RealFn g, g1, g2, g3;
    // How fast h decays in r; selects the semi-infinite quadrature strategy.
    numerics::Decay decay = numerics::Decay::algebraic;

    std::string describe() const;
};

TestFunctionPair make_gauss_heat(double t);
TestFunctionPair make_cauchy_gauss(double t, double p);
// The caller supplies every component; the pair is checked with
// check_admissibility against b0 and rejected with AdmissibilityError on failure.
TestFunctionPair make_custom(RealFn h, RealFn h_imag, RealFn g, RealFn g1, RealFn g2, RealFn g3,
                             numerics::Decay decay, double b0);

// f(y) = -g(y)/2 + g'(y)
RealFn f_aux(const TestFunctionPair& pair);

struct AdmissibilityReport {
    bool passes_hs = false;
    double c_gamma_g = 0.0;   // int_{b0}^inf e^{y/2} y (|g|+|g'|+|g''|) dy
    double g3_l1 = 0.0;       // int_{b0}^inf |g'''| dy
    double upper_limit = 0.0; // where the tail integrals were stopped
};

AdmissibilityReport check_admissibility(const TestFunctionPair& pair, double b0);

}  // namespace selberg::testfun
