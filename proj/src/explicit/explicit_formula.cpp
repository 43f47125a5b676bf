#include <algorithm>
#include <cmath>
#include <complex>
#include <string>

#include <Eigen/Dense>

#include "../trace/trace_internal.hpp"
#include "selberg/explicit_formula.hpp"
#include "selberg/quadrature.hpp"
#include "selberg/trace_terms.hpp"

namespace selberg::explicit_formula {

using numerics::Complex;

namespace {

void require_enumerated(double enumerated_to, double x) {
    if (x > enumerated_to)
        throw InsufficientEnumeration("class list stops at norm " + std::to_string(enumerated_to) +
                                      ", needed up to " + std::to_string(x));
}

// x^{1+s}/(s(1+s))
Complex kernel(double lx, Complex s) { return std::exp((1.0 + s) * lx) / (s * (1.0 + s)); }

bool is_pole(const GroupDescriptor& g, double s) {
    for (double p : g.scattering_poles)
        if (std::abs(p - s) < 1e-12) return true;
    return false;
}

double median(std::vector<double> v) {
    if (v.empty()) return 0.0;
    std::sort(v.begin(), v.end());
    const std::size_t n = v.size();
    return n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

}  // namespace

double psi_direct(const std::vector<HyperbolicClass>& classes, double enumerated_to, double x) {
    require_enumerated(enumerated_to, x);
    double s = 0.0;
    for (const auto& c : classes)
        if (c.norm <= x) s += c.multiplicity * group::lambda_mangoldt(c);
    return s;
}

double psi1_direct(const std::vector<HyperbolicClass>& classes, double enumerated_to, double x) {
    require_enumerated(enumerated_to, x);
    double s = 0.0;
    for (const auto& c : classes)
        if (c.norm <= x) s += c.multiplicity * group::lambda_mangoldt(c) * (x - c.norm);
    return s;
}

PartialSums partial_sums(const SpectralDataset& data, const GroupDescriptor& g, double x, double R) {
    if (R > data.completeness_bound)
        throw IncompleteData("R = " + std::to_string(R) + " exceeds the eigenvalue completeness bound " +
                             std::to_string(data.completeness_bound));
    const double reach = std::max(data.resonance_bound, data.resonances.empty() ? 0.0 : data.resonances.back().gamma);
    if (R > reach)
        throw IncompleteData("R = " + std::to_string(R) + " exceeds the loaded resonances (gamma <= " +
                             std::to_string(reach) + ")");
    const double lx = std::log(x);
    PartialSums out;
    Complex d(0.0, 0.0), p(0.0, 0.0);
    for (std::size_t i = 0; i < data.discrete_r.size() && data.discrete_r[i] <= R; ++i) {
        const Complex s(0.5, data.discrete_r[i]);
        d += static_cast<double>(data.multiplicity[i]) * (kernel(lx, s) + kernel(lx, std::conj(s)));
    }
    // exceptional eigenvalues 0 < lambda < 1/4: s and 1 - s; lambda = 0 is the pole at 1
    for (double lam : data.exceptional) {
        const double s = 0.5 + std::sqrt(0.25 - lam);
        if (is_pole(g, s)) continue;
        if (lam > 0.0) d += kernel(lx, s) + kernel(lx, 1.0 - s);
    }
    for (double sp : g.scattering_poles) d += kernel(lx, sp);
    for (const auto& res : data.resonances) {
        if (!(res.gamma < R)) break;
        const Complex s(res.beta, res.gamma);
        p += kernel(lx, s) + kernel(lx, std::conj(s));
    }
    out.sigma_delta = d.real();
    out.imag_delta = d.imag();
    out.sigma_phi = p.real();
    out.imag_phi = p.imag();
    return out;
}

ResidualTable explicit_formula_residual(const std::vector<HyperbolicClass>& classes, double enumerated_to,
                                        const SpectralDataset& data, const GroupDescriptor& g,
                                        const std::vector<double>& x_grid, const std::vector<double>& R_grid,
                                        bool include_resonances) {
    ResidualTable out;
    if (x_grid.size() < 5) throw DomainError("the residual fit needs at least 5 x values");
    for (double x : x_grid)
        if (x < g.B0) throw DomainError("x = " + std::to_string(x) + " lies below B0");
    const auto nx = static_cast<Eigen::Index>(x_grid.size());

    std::vector<double> psi(x_grid.size()), psi1(x_grid.size());
    for (std::size_t i = 0; i < x_grid.size(); ++i) {
        psi[i] = psi_direct(classes, enumerated_to, x_grid[i]);
        psi1[i] = psi1_direct(classes, enumerated_to, x_grid[i]);
    }

    for (double R : R_grid) {
        std::vector<ResidualRow> rows(x_grid.size());
        Eigen::MatrixXd A(nx, 4);
        Eigen::VectorXd y(nx);
        for (Eigen::Index i = 0; i < nx; ++i) {
            const double x = x_grid[i];
            auto ps = partial_sums(data, g, x, R);
            auto& row = rows[i];
            row.x = x;
            row.R = R;
            row.psi = psi[i];
            row.psi1 = psi1[i];
            row.sigma_delta = ps.sigma_delta;
            row.sigma_phi = include_resonances ? ps.sigma_phi : 0.0;
            // Delta_R is of size x^{3/2}/(R ln x); weight rows to that scale
            const double w = std::pow(x, -1.5);
            A(i, 0) = w * x * std::log(x);
            A(i, 1) = w * x;
            A(i, 2) = w * std::pow(x, 1.5);
            A(i, 3) = w;
            y(i) = w * (row.psi1 - row.sigma_delta - row.sigma_phi);
        }
        // column scaling before the solve
        Eigen::Vector4d scale;
        for (int j = 0; j < 4; ++j) {
            scale(j) = A.col(j).norm();
            A.col(j) /= scale(j);
        }
        Eigen::JacobiSVD<Eigen::MatrixXd> svd(A, Eigen::ComputeThinU | Eigen::ComputeThinV);
        const Eigen::Vector4d c = svd.solve(y).cwiseQuotient(scale);
        const auto& sv = svd.singularValues();
        ResidualFit fit;
        fit.R = R;
        fit.c_xlogx = c(0);
        fit.c_x = c(1);
        fit.c_x32 = c(2);
        fit.c_1 = c(3);
        fit.condition = sv(sv.size() - 1) > 0 ? sv(0) / sv(sv.size() - 1) : INFINITY;
        if (!(fit.condition < 1e10))
            out.warnings.push_back({WarningKind::fit, "Psi_{1,0} regression at R = " + std::to_string(R) +
                                                          " is poorly conditioned (" + std::to_string(fit.condition) +
                                                          ")"});
        std::vector<double> normalized;
        for (auto& row : rows) {
            const double x = row.x, lx = std::log(x);
            const double model = c(0) * x * lx + c(1) * x + c(2) * std::pow(x, 1.5) + c(3);
            row.residual = row.psi1 - row.sigma_delta - row.sigma_phi - model;
            row.normalized_residual = R * std::abs(row.residual) / (x * x * lx);
            normalized.push_back(row.normalized_residual);
            out.rows.push_back(row);
        }
        fit.median_normalized = median(normalized);
        out.fits.push_back(fit);
    }
    return out;
}

double sp_inf_discrete_term(const testfun::TestFunctionPair& pair, double r, double b) {
    const auto f = testfun::f_aux(pair);
    const double ycut = trace::detail::y_cutoff(pair, b, 0.5);
    auto integrand = [&](double y) { return (std::cos(r * y) + 2.0 * r * std::sin(r * y)) * f(y); };
    return -trace::detail::oscillatory(integrand, b, ycut, r, 1e-14, nullptr) / (r * r + 0.25);
}

Lemma1Terms lemma1_decomposition(const testfun::TestFunctionPair& pair, const std::vector<HyperbolicClass>& classes,
                                 double norm_limit, const SpectralDataset& data, const GroupDescriptor& g, double B) {
    if (B < g.B0 * (1.0 - 1e-12)) throw DomainError("B must be at least B0");
    const double b = std::log(B);
    const auto f = testfun::f_aux(pair);
    const double ycut = trace::detail::y_cutoff(pair, b, 0.5);
    const double tol = 1e-14;
    Lemma1Terms out;

    for (std::size_t i = 0; i < data.discrete_r.size(); ++i) {
        const double r = data.discrete_r[i];
        if (r > data.completeness_bound) break;
        auto term = [&](double y) { return (std::cos(r * y) + 2.0 * r * std::sin(r * y)) * f(y); };
        out.SP_inf_discrete +=
            -data.multiplicity[i] / (r * r + 0.25) * trace::detail::oscillatory(term, b, ycut, r, tol, nullptr);
    }
    for (const auto& res : data.resonances) {
        const Complex s(res.beta, res.gamma);
        auto term = [&](double y) { return 2.0 * (std::exp(s * y) / s).real() * std::exp(-0.5 * y) * f(y); };
        out.SP_inf_resonance += -trace::detail::oscillatory(term, b, ycut, res.gamma, tol, nullptr);
    }
    out.SP_inf = out.SP_inf_discrete + out.SP_inf_resonance;

    // exceptional eigenvalues: a scattering pole enters once, anything else with its reflection
    for (double lam : data.exceptional) {
        const double s = 0.5 + std::sqrt(0.25 - lam);
        auto one = [&](double y, double z) { return std::exp((z - 0.5) * y) / z * f(y); };
        auto fe = [&](double y) {
            double v = one(y, s);
            if (!is_pole(g, s)) v += one(y, 1.0 - s);
            return v;
        };
        numerics::QuadratureOptions opt{tol, tol, 4000};
        out.S_ex -= numerics::integrate(fe, b, ycut, opt).value;
    }

    auto sp = trace::term_SP_direct(pair, classes, norm_limit);
    out.SP_direct = sp.value;
    out.warnings = sp.warnings;
    out.S0 = out.SP_direct - out.SP_inf - out.S_ex;
    return out;
}

}  // namespace selberg::explicit_formula
