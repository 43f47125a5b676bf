#pragma once

#include <vector>

#include "selberg/errors.hpp"
#include "selberg/group.hpp"
#include "selberg/testfun.hpp"

namespace selberg::explicit_formula {

using group::GroupDescriptor;
using group::HyperbolicClass;
using group::SpectralDataset;

// Psi(x) = sum of Lambda(P) over B0 <= N(P) <= x. The class list must be
// enumerated at least to x (pass its norm_limit); otherwise InsufficientEnumeration.
double psi_direct(const std::vector<HyperbolicClass>& classes, double enumerated_to, double x);
// Psi_1(x) = int_{B0}^x Psi, exact for the step function.
double psi1_direct(const std::vector<HyperbolicClass>& classes, double enumerated_to, double x);

struct PartialSums {
    double sigma_delta = 0.0;
    double sigma_phi = 0.0;
    double imag_delta = 0.0;  // leftover imaginary parts, should vanish
    double imag_phi = 0.0;
};

// x^{1+s}/(s(1+s)) summed with its conjugate over discrete s = 1/2 + i r_j (r_j <= R),
// exceptional s in (1/2, 1), the scattering poles in (1/2, 1], and resonances with gamma < R.
PartialSums partial_sums(const SpectralDataset& data, const GroupDescriptor& g, double x, double R);

struct ResidualRow {
    double x = 0.0, R = 0.0;
    double psi = 0.0, psi1 = 0.0, sigma_delta = 0.0, sigma_phi = 0.0;
    double residual = 0.0;             // Delta_R(x) after removing the fitted Psi_{1,0}
    double normalized_residual = 0.0;  // R |Delta_R| / (x^2 ln x)
};

struct ResidualFit {
    double R = 0.0;
    // Psi_{1,0}(x) ~ c_xlogx x ln x + c_x x + c_x32 x^{3/2} + c_1
    double c_xlogx = 0.0, c_x = 0.0, c_x32 = 0.0, c_1 = 0.0;
    double condition = 0.0;
    double median_normalized = 0.0;
};

struct ResidualTable {
    std::vector<ResidualRow> rows;  // grid order: R outer, x inner
    std::vector<ResidualFit> fits;  // one per R
    Warnings warnings;
};

ResidualTable explicit_formula_residual(const std::vector<HyperbolicClass>& classes, double enumerated_to,
                                        const SpectralDataset& data, const GroupDescriptor& g,
                                        const std::vector<double>& x_grid, const std::vector<double>& R_grid,
                                        bool include_resonances = true);

struct Lemma1Terms {
    double SP_inf = 0.0;
    double SP_inf_discrete = 0.0;
    double SP_inf_resonance = 0.0;
    double S_ex = 0.0;
    double S0 = 0.0;
    double SP_direct = 0.0;
    Warnings warnings;
};

// S_P = S_P^inf + S_ex + S_0 split at B = e^b; S_0 is what is left of the direct sum.
Lemma1Terms lemma1_decomposition(const testfun::TestFunctionPair& pair, const std::vector<HyperbolicClass>& classes,
                                 double norm_limit, const SpectralDataset& data, const GroupDescriptor& g, double B);

// Single discrete ordinate's contribution to S_P^inf:
// -(1/(r^2+1/4)) int_b^inf (cos ry + 2r sin ry) f(y) dy.
double sp_inf_discrete_term(const testfun::TestFunctionPair& pair, double r, double b);

}  // namespace selberg::explicit_formula
