#pragma once

#include <map>
#include <string>
#include <vector>

#include "selberg/errors.hpp"
#include "selberg/group.hpp"
#include "selberg/testfun.hpp"

namespace selberg::trace {

using group::GroupDescriptor;
using group::HyperbolicClass;
using group::SpectralDataset;
using testfun::TestFunctionPair;

struct TermValue {
    double value = 0.0;
    double error = 0.0;
};

struct SpectralSum {
    double value = 0.0;
    double tail_bound = 0.0;  // Weyl-density bound on sum_{r > r_cut} |h(r)|
    std::size_t count = 0;    // ordinates used, with multiplicity, plus exceptional
    double r_cut = 0.0;
};

// sum_{r_j <= r_cut} h(r_j) + sum over exceptional lambda of h(i sqrt(1/4 - lambda)).
SpectralSum spectral_side(const TestFunctionPair& pair, const SpectralDataset& data, double r_cut);

// (|F|/4pi) int r tanh(pi r) h(r) dr over the real line.
TermValue term_H(const TestFunctionPair& pair, const GroupDescriptor& g);

// One elliptic (order, k) integral int h(r) e^{-2pi k r/p} / (1 + e^{-2pi r}) dr over the real line.
TermValue elliptic_integral(const TestFunctionPair& pair, int order, int k);
TermValue term_SR(const TestFunctionPair& pair, const GroupDescriptor& g);

struct HyperbolicSum {
    double value = 0.0;
    double truncation = 0.0;  // size of the first omitted term (bound)
    std::size_t terms = 0;
    double norm_limit = 0.0;
    Warnings warnings;
};

// Norm beyond which ln N / sqrt N |g(ln N)| stays below rel times its value at B0.
double sp_norm_limit(const TestFunctionPair& pair, double B0, double rel = 1e-16,
                     double max_norm = 5e6);

double hyperbolic_weight(const HyperbolicClass& c);

HyperbolicSum term_SP_direct(const TestFunctionPair& pair, const std::vector<HyperbolicClass>& classes,
                             double norm_limit);

struct ParabolicTerm {
    double value = 0.0;
    double scattering_integral = 0.0;  // (1/4pi) int h phi'/phi(1/2+ir) dr
    double digamma_integral = 0.0;     // -(n/2pi) int h psi(1+ir) dr
    double h0_term = 0.0;
    double log2_term = 0.0;
    double error = 0.0;
};

ParabolicTerm term_P(const TestFunctionPair& pair, const GroupDescriptor& g);

// Simple fractions of phi'/phi on the critical line s = 1/2 + ir: a real pole
// 1/2 < s_mu <= 1 gives a positive term, a resonance (beta < 1/2) a negative one.
double pole_fraction(double s_mu, double r);
double resonance_fraction(const group::Resonance& res, double r);

// Contribution of one resonance pair (beta +- i gamma) to J1:
// -(1/pi) int h(r) c / ((r - gamma)^2 + c^2) dr, c = 1/2 - beta.
TermValue j1_resonance_term(const TestFunctionPair& pair, const group::Resonance& res);

// Smooth estimate of the J1 contribution of resonances above the loaded range,
// from a fitted counting function a x ln x + b x + c.
double resonance_tail_estimate(const TestFunctionPair& pair, const SpectralDataset& data);

struct ParabolicExplicit {
    double J0 = 0.0;
    double J1 = 0.0;
    double deltaP = 0.0;
    double J1_tail_estimate = 0.0;
    std::vector<std::pair<double, double>> J1_partial;  // (gamma cutoff, partial sum)
    double error = 0.0;
    Warnings warnings;
    double total() const { return J0 + J1 + deltaP; }
};

ParabolicExplicit term_P_explicit(const TestFunctionPair& pair, const GroupDescriptor& g,
                                  const SpectralDataset& data);

struct Theorem1Terms {
    double b = 0.0;
    double W = 0.0, SP1 = 0.0, SP2 = 0.0, SP3 = 0.0, G = 0.0, M = 0.0;
    // pieces of M
    double S_ex = 0.0, S_R = 0.0, S0 = 0.0, pole_term = 0.0, h0_term = 0.0, g0_term = 0.0;
    double zero_eigen_correction = 0.0;
    // Lemma 1 pieces behind S0
    double SP_direct = 0.0, SP_inf = 0.0;
    double H = 0.0;
    double lhs = 0.0, rhs = 0.0, residual = 0.0;
    double resonance_tail_estimate = 0.0;
    double r_cut = 0.0, gamma_cut = 0.0;
    Warnings warnings;
};

Theorem1Terms theorem1_terms(const TestFunctionPair& pair, const GroupDescriptor& g,
                             const SpectralDataset& data, const std::vector<HyperbolicClass>& classes,
                             double norm_limit, double b);

struct TraceBreakdown {
    double spectral_sum = 0.0;
    double identity_H = 0.0;
    double elliptic_SR = 0.0;
    double hyperbolic_SP = 0.0;
    double parabolic_P = 0.0;
    double residual = 0.0;
    std::map<std::string, double> term_errors;
    std::map<std::string, double> truncation_report;
    Warnings warnings;
};

TraceBreakdown verify_trace_identity(const TestFunctionPair& pair, const GroupDescriptor& g,
                                     const SpectralDataset& data,
                                     const std::vector<HyperbolicClass>& classes, double norm_limit);

// Enumerates classes for the modular group up to sp_norm_limit and runs verify_trace_identity.
TraceBreakdown verify_trace_identity(const TestFunctionPair& pair, const GroupDescriptor& g,
                                     const SpectralDataset& data);

}  // namespace selberg::trace
