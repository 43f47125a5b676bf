#pragma once

#include <map>
#include <string>
#include <vector>

#include "selberg/errors.hpp"
#include "selberg/group.hpp"

namespace selberg::asymptotics {

using group::GroupDescriptor;
using group::SpectralDataset;

struct IntegralValue {
    double value = 0.0;
    double error = 0.0;
};

// I(t,p) = int_0^inf e^{-t r^2} ln r / (r^2 + p^2) dr by quadrature split at r = 1.
IntegralValue integral_I(double t, double p);

// The same integral from its closed form through erfc and a convergent series (t p^2 <= 30).
double integral_I_closed(double t, double p);

// Small-t expansion of I(t,p) with the three series taken to n = orders (orders <= 4).
// Adds a range warning when t p^2 >= 1.
double expansion_I(double t, double p, int orders, Warnings* warnings = nullptr);

// Coefficients of p^{2n} t^{n+1/2} and p^{2n} t^{n+1/2} ln(1/t) in the expansion.
double coefficient_d(int n);
double coefficient_d_prime(int n);

// S(t) = sum over resonances of gamma^{-4} e^{-t gamma^2}.
double resonance_S(const SpectralDataset& data, double t);

struct LinearFit {
    std::vector<std::string> basis;
    std::vector<double> coefficients;
    std::vector<double> std_errors;  // ordinary least squares standard errors
    double rms_residual = 0.0;
    double condition = 0.0;
};

// Least squares with column scaling; basis values are columns of the design matrix.
LinearFit least_squares(const std::vector<std::string>& names, const std::vector<std::vector<double>>& columns,
                        const std::vector<double>& y, Warnings* warnings = nullptr);

struct ExpansionCoefficientFit {
    std::vector<double> d, d_prime;  // n = 0 .. orders-1
    std::vector<double> d_sigma, d_prime_sigma;
    LinearFit fit;
};

// d_n and d_n' fitted against integral_I(t, 1), where the expansion is a pure
// half-integer ladder, at count log-spaced t in [t_lo, t_hi].
ExpansionCoefficientFit fit_expansion_coefficients(double t_lo = 1e-6, double t_hi = 0.1, int count = 30,
                                                   int orders = 6);

struct AsymptoticScan {
    std::vector<double> t_grid;
    std::vector<double> p_values;
    // [t index][p index]
    std::vector<std::vector<double>> lhs, known_terms, remainder;
    std::vector<std::vector<bool>> skipped;
    // per p: remainder e^{-t p^2} B ~ C0 + C1 sqrt t
    std::map<std::string, double> fitted_coefficients;
    double max_abs_remainder = 0.0;
    double worst_fit_fraction = 0.0;  // max residual of the sqrt-t fit over the remainder range, worst p
    Warnings warnings;
};

// Lemma 5 identity: lhs sum of h over the discrete spectrum plus gamma^{-2} e^{-t gamma^2},
// known terms (|F|/4pi) e^{tp^2} ln(1/t) - (n/pi) I + p^2 e^{tp^2} S, remainder B.
AsymptoticScan eq62_scan(const SpectralDataset& data, const GroupDescriptor& g, const std::vector<double>& t_grid,
                         const std::vector<double>& p_values);

struct DifferenceRow {
    double t = 0.0;
    double lhs = 0.0;
    double S = 0.0, log_term = 0.0, I_term = 0.0, B_term = 0.0;
    double rhs = 0.0;
    double gap = 0.0;
    double implied_B = 0.0;  // lhs minus the analytic terms (S, log, I)
};

struct DifferenceTable {
    double p1 = 0.0, p2 = 0.0;
    std::vector<DifferenceRow> rows;
    double max_gap = 0.0;
    // implied_B against the discrete sum plus powers t^{k/2} (k <= 9) and t^{k/2} ln(1/t) (2 <= k <= 9),
    // solved in 50-digit arithmetic; needs >= 30 rows, all with t p2^2 <= 0.01
    LinearFit ladder_fit;
    double log52_coefficient = 0.0;
    double log52_sigma = 0.0;  // larger of the OLS error and the truncation shift
    double log52_truncation_shift = 0.0;  // change when the ladder is extended to t^{11/2}
    double log52_predicted = 0.0;  // (n/pi)(p1^2 + p2^2)(d2 - d1)
    Warnings warnings;
};

// Difference of the Lemma 5 identity at p1 < p2 divided through by p1^2 e^{tp1^2} - p2^2 e^{tp2^2}.
// B(t,p_i) comes from the same scan, so gap measures consistency only.
DifferenceTable eq643_difference(const SpectralDataset& data, const GroupDescriptor& g,
                                 const std::vector<double>& t_grid, double p1, double p2);

struct HeatTraceFit {
    std::vector<double> t_grid;
    std::vector<double> lhs;
    double a_inv_t = 0.0, a_logsqrt = 0.0, a_invsqrt = 0.0, a_const = 0.0, a_sqrt = 0.0;
    LinearFit fit;  // same numbers with standard errors
    Warnings warnings;
};

// sum e^{-t r_n^2} + sum e^{-t gamma^2} fitted on {1/t, ln t / sqrt t, 1/sqrt t, 1, sqrt t}.
HeatTraceFit eq646_heat_trace(const SpectralDataset& data, const GroupDescriptor& g,
                              const std::vector<double>& t_grid, bool include_resonances = true);

// The first n discrete ordinates declared to be the whole spectrum (complete
// everywhere, no resonances): the hypothesis the difference table refutes.
SpectralDataset finite_spectrum(const SpectralDataset& data, std::size_t n);

std::vector<double> default_t_grid();

}  // namespace selberg::asymptotics
