#include <cmath>
#include <complex>

#include "selberg/explicit_formula.hpp"
#include "selberg/quadrature.hpp"
#include "selberg/trace_terms.hpp"
#include "trace_internal.hpp"

namespace selberg::trace {

using numerics::pi;

Theorem1Terms theorem1_terms(const TestFunctionPair& pair, const GroupDescriptor& g, const SpectralDataset& data,
                             const std::vector<HyperbolicClass>& classes, double norm_limit, double b) {
    g.validate();
    if (b < g.b0() - 1e-12) throw DomainError("b must be at least b0 = ln B0");
    auto adm = testfun::check_admissibility(pair, g.b0());
    if (!adm.passes_hs) throw AdmissibilityError("test function fails the integrability condition at b0");

    Theorem1Terms out;
    out.b = b;
    out.r_cut = data.completeness_bound;
    out.gamma_cut = data.resonances.empty() ? 0.0 : data.resonances.back().gamma;

    const auto f = testfun::f_aux(pair);
    const double fb = f(b), gb = pair.g(b), g0 = pair.g(0.0);
    const double ycut = detail::y_cutoff(pair, b, 0.5);
    const double tol = 1e-14;
    double err = 0.0;

    // discrete spectrum r_j >= 0
    double w_discrete = 0.0;
    for (std::size_t i = 0; i < data.discrete_r.size(); ++i) {
        const double r = data.discrete_r[i];
        if (r > out.r_cut) break;
        const int k = data.multiplicity[i];
        const double q = r * r + 0.25;
        w_discrete += k * std::cos(r * b) / q;
        if (r > 0.0) {
            auto tail = [&](double y) { return std::sin(r * y) * (-0.5 * pair.g1(y) + 2.0 * pair.g3(y)); };
            const double inner = std::sin(r * b) * (-0.5 * gb + 2.0 * pair.g2(b)) +
                                 detail::oscillatory(tail, b, ycut, r, tol, &err);
            out.SP1 += k * inner / (q * r);
        } else {
            auto fz = [&](double y) { return -0.5 * pair.g(y) + 2.0 * pair.g2(y); };
            out.zero_eigen_correction += -4.0 * k * detail::oscillatory(fz, b, ycut, 0.0, tol, &err);
        }
    }

    // resonances, one conjugate pair per entry
    double w_res = 0.0;
    for (const auto& res : data.resonances) {
        const double be = res.beta, ga = res.gamma, c = be - 0.5;
        const double ecb = std::exp(c * b);
        w_res += std::cos(b * ga) / (ga * ga) * ecb;

        const double q = be * be + ga * ga;
        out.SP2 += 2.0 * (gb * ecb * std::sin(ga * b) * (ga / q - 1.0 / ga) + c / (ga * ga) * g0 -
                          gb * be * be * be * std::cos(b * ga) / (ga * ga * q) * ecb);

        auto second = [&](double y) {
            return std::exp(c * y) * (c * c * pair.g(y) + 2.0 * c * pair.g1(y) + pair.g2(y)) * std::cos(ga * y);
        };
        out.SP3 += 2.0 / (ga * ga) * detail::oscillatory(second, 0.0, b, ga, tol, &err);
    }
    out.W = -2.0 * fb * (w_discrete + w_res);

    auto lemma1 = explicit_formula::lemma1_decomposition(pair, classes, norm_limit, data, g, std::exp(b));
    out.SP_inf = lemma1.SP_inf;
    out.S_ex = lemma1.S_ex;
    out.SP_direct = lemma1.SP_direct;
    out.S0 = lemma1.S0;
    out.warnings.insert(out.warnings.end(), lemma1.warnings.begin(), lemma1.warnings.end());

    out.S_R = term_SR(pair, g).value;
    for (double sm : g.scattering_poles) {
        const double d = sm - 0.5;
        auto fp = [&](double r) { return pair.h(r) / (r * r + d * d); };
        out.pole_term += -(1.0 - 2.0 * sm) / (2.0 * pi) * detail::half_line(pair, fp, 1e-13, &err);
    }
    out.h0_term = detail::h0_sign * (g.cusp_count - g.tr_phi_half) * pair.h(0.0) / 4.0;
    out.g0_term = -g0 * (g.cusp_count * std::log(2.0) + 2.0 * std::log(g.b1));
    out.M = out.W + out.S_ex + out.S_R + out.S0 + out.pole_term + out.h0_term + out.g0_term +
            out.zero_eigen_correction;

    auto fd = [&](double r) { return pair.h(r) * numerics::digamma({1.0, r}).real(); };
    out.G = -g.cusp_count / pi * detail::half_line(pair, fd, 1e-11, &err);
    out.H = term_H(pair, g).value;

    out.lhs = spectral_side(pair, data, out.r_cut).value;
    out.rhs = out.H + out.G + out.SP1 + out.SP2 + out.SP3 + out.M;
    out.residual = out.lhs - out.rhs;
    out.resonance_tail_estimate = resonance_tail_estimate(pair, data);
    return out;
}

TraceBreakdown verify_trace_identity(const TestFunctionPair& pair, const GroupDescriptor& g,
                                     const SpectralDataset& data, const std::vector<HyperbolicClass>& classes,
                                     double norm_limit) {
    if (g.cusp_count < 1) throw UnsupportedGroup("cocompact groups are not supported");
    g.validate();
    TraceBreakdown out;
    auto lhs = spectral_side(pair, data, data.completeness_bound);
    auto H = term_H(pair, g);
    auto SR = term_SR(pair, g);
    auto SP = term_SP_direct(pair, classes, norm_limit);
    auto P = term_P(pair, g);
    out.spectral_sum = lhs.value;
    out.identity_H = H.value;
    out.elliptic_SR = SR.value;
    out.hyperbolic_SP = SP.value;
    out.parabolic_P = P.value;
    out.residual = out.spectral_sum - (out.identity_H + out.elliptic_SR + out.hyperbolic_SP + out.parabolic_P);
    out.term_errors = {{"spectral", lhs.tail_bound},
                       {"H", H.error},
                       {"S_R", SR.error},
                       {"S_P", SP.truncation},
                       {"P", P.error}};
    out.truncation_report = {{"r_cut", lhs.r_cut},
                             {"norm_limit", norm_limit},
                             {"hyperbolic_terms", static_cast<double>(SP.terms)},
                             {"spectral_terms", static_cast<double>(lhs.count)}};
    out.warnings = SP.warnings;
    return out;
}

TraceBreakdown verify_trace_identity(const TestFunctionPair& pair, const GroupDescriptor& g,
                                     const SpectralDataset& data) {
    if (g.cusp_count < 1) throw UnsupportedGroup("cocompact groups are not supported");
    const double limit = sp_norm_limit(pair, g.B0);
    auto spectrum = group::enumerate_hyperbolic(g, limit);
    return verify_trace_identity(pair, g, data, spectrum.classes, limit);
}

}  // namespace selberg::trace
