#include <algorithm>
#include <cmath>

#include <Eigen/Dense>

#include "selberg/quadrature.hpp"
#include "selberg/trace_terms.hpp"
#include "trace_internal.hpp"

namespace selberg::trace {

using numerics::pi;

namespace detail {

double half_line(const TestFunctionPair& pair, const std::function<double(double)>& f, double tol,
                 double* err) {
    auto q = numerics::integrate_semi_infinite(f, 0.0, pair.decay, tol, 20000);
    if (err) *err += q.error_estimate;
    return q.value;
}

double y_cutoff(const TestFunctionPair& pair, double from, double growth) {
    auto env = [&](double y) {
        return std::exp(growth * y) *
               (std::abs(pair.g(y)) + std::abs(pair.g1(y)) + std::abs(pair.g2(y)) + std::abs(pair.g3(y)));
    };
    double ref = 0.0;
    for (double y = 0.0; y <= from; y += 0.25) ref = std::max(ref, env(y));
    ref = std::max({ref, env(from), 1e-300});
    int quiet = 0;
    for (double y = from; y < 400.0; y += 0.25) {
        quiet = env(y) < 1e-20 * ref ? quiet + 1 : 0;
        if (quiet >= 8) return y;
    }
    throw NonConvergence("g does not decay fast enough to truncate the y integrals");
}

double oscillatory(const std::function<double(double)>& f, double a, double b, double freq, double tol,
                   double* err) {
    if (b <= a) return 0.0;
    const double panel = freq > 1.0 ? pi / freq : b - a;
    numerics::QuadratureOptions opt{tol, 1e-14, 4000};
    auto q = numerics::integrate_panels(f, a, b, panel, opt);
    if (err) *err += q.error_estimate;
    return q.value;
}

}  // namespace detail

SpectralSum spectral_side(const TestFunctionPair& pair, const SpectralDataset& data, double r_cut) {
    if (r_cut > data.completeness_bound)
        throw IncompleteData("spectral cutoff " + std::to_string(r_cut) + " exceeds the dataset completeness bound " +
                             std::to_string(data.completeness_bound));
    SpectralSum out;
    out.r_cut = r_cut;
    for (double lam : data.exceptional) {
        out.value += pair.h_imag(std::sqrt(0.25 - lam));
        ++out.count;
    }
    // sum small terms first
    std::vector<double> terms;
    for (std::size_t i = 0; i < data.discrete_r.size() && data.discrete_r[i] <= r_cut; ++i) {
        terms.push_back(data.multiplicity[i] * pair.h(data.discrete_r[i]));
        out.count += data.multiplicity[i];
    }
    for (auto it = terms.rbegin(); it != terms.rend(); ++it) out.value += *it;
    // Weyl density |F| r / (2 pi) with |F| = pi/3 as a generous envelope
    auto tail = [&](double r) { return (r + 1.0) / 6.0 * std::abs(pair.h(r)); };
    out.tail_bound = numerics::integrate_semi_infinite(tail, r_cut, pair.decay, 1e-30 + 1e-3 * std::abs(tail(r_cut)))
                         .value;
    return out;
}

TermValue term_H(const TestFunctionPair& pair, const GroupDescriptor& g) {
    TermValue out;
    auto f = [&](double r) { return r * std::tanh(pi * r) * pair.h(r); };
    out.value = g.area / (2.0 * pi) * detail::half_line(pair, f, 1e-12, &out.error);
    out.error *= g.area / (2.0 * pi);
    return out;
}

TermValue elliptic_integral(const TestFunctionPair& pair, int order, int k) {
    const double a = 2.0 * pi * k / order;
    const double c = 2.0 * pi * (1.0 - static_cast<double>(k) / order);
    // r and -r folded onto the half line; both exponents are nonpositive there
    auto f = [&](double r) {
        const double den = 1.0 + std::exp(-2.0 * pi * r);
        return pair.h(r) * (std::exp(-a * r) + std::exp(-c * r)) / den;
    };
    TermValue out;
    out.value = detail::half_line(pair, f, 1e-13, &out.error);
    return out;
}

TermValue term_SR(const TestFunctionPair& pair, const GroupDescriptor& g) {
    TermValue out;
    for (const auto& cls : g.elliptic) {
        for (int k = 1; k < cls.order; ++k) {
            // one fixed point of order p carries weight 1/(2p sin(pi k/p)) against this kernel
            const double coef = cls.count / (2.0 * cls.order * std::sin(pi * k / cls.order));
            auto term = elliptic_integral(pair, cls.order, k);
            out.value += coef * term.value;
            out.error += std::abs(coef) * term.error;
        }
    }
    return out;
}

double hyperbolic_weight(const HyperbolicClass& c) {
    const double l = std::log(c.primitive_norm);
    const double half = 0.5 * c.power * l;
    return l / (2.0 * std::sinh(half));
}

double sp_norm_limit(const TestFunctionPair& pair, double B0, double rel, double max_norm) {
    auto w = [&](double y) { return std::abs(pair.g(y)) * std::exp(-0.5 * y) * y; };
    const double b0 = std::log(B0);
    const double lead = std::max(w(b0), 1e-300);
    const double ymax = std::log(max_norm);
    for (double y = b0; y < ymax; y += 0.05) {
        if (w(y) < rel * lead && w(y + 0.5) < rel * lead && w(y + 1.0) < rel * lead) return std::max(std::exp(y), B0);
    }
    return max_norm;
}

HyperbolicSum term_SP_direct(const TestFunctionPair& pair, const std::vector<HyperbolicClass>& classes,
                             double norm_limit) {
    HyperbolicSum out;
    out.norm_limit = norm_limit;
    std::vector<double> terms;
    terms.reserve(classes.size());
    for (const auto& c : classes) {
        if (c.norm > norm_limit) continue;
        terms.push_back(c.multiplicity * hyperbolic_weight(c) * pair.g(c.power * std::log(c.primitive_norm)));
    }
    std::sort(terms.begin(), terms.end(), [](double a, double b) { return std::abs(a) < std::abs(b); });
    for (double v : terms) out.value += v;
    out.terms = terms.size();
    const double y = std::log(norm_limit);
    out.truncation = y * std::exp(-0.5 * y) * std::abs(pair.g(y));
    if (out.truncation > 1e-12 * std::abs(out.value) && out.truncation > 1e-300)
        out.warnings.push_back({WarningKind::truncation,
                                "hyperbolic sum: first omitted term " + std::to_string(out.truncation) +
                                    " exceeds 1e-12 of the running sum"});
    return out;
}

ParabolicTerm term_P(const TestFunctionPair& pair, const GroupDescriptor& g) {
    if (!g.scattering) throw ValidationError("group has no scattering function");
    ParabolicTerm out;
    const auto& sc = *g.scattering;
    auto fs = [&](double r) { return pair.h(r) * sc.logderiv({0.5, r}).real(); };
    auto fd = [&](double r) { return pair.h(r) * numerics::digamma({1.0, r}).real(); };
    double e1 = 0.0, e2 = 0.0;
    out.scattering_integral = detail::half_line(pair, fs, 1e-11, &e1) / (2.0 * pi);
    out.digamma_integral = -g.cusp_count / pi * detail::half_line(pair, fd, 1e-11, &e2);
    out.h0_term = detail::h0_sign * pair.h(0.0) / 4.0 * (g.cusp_count - g.tr_phi_half);
    out.log2_term = -g.cusp_count * pair.g(0.0) * std::log(2.0);
    out.value = out.scattering_integral + out.digamma_integral + out.h0_term + out.log2_term;
    out.error = e1 / (2.0 * pi) + g.cusp_count / pi * e2;
    return out;
}

double pole_fraction(double s_mu, double r) {
    const double d = s_mu - 0.5;
    return -(1.0 - 2.0 * s_mu) / (r * r + d * d);
}

double resonance_fraction(const group::Resonance& res, double r) {
    const double u = r - res.gamma, c = res.beta - 0.5;
    return -(1.0 - 2.0 * res.beta) / (u * u + c * c);
}

TermValue j1_resonance_term(const TestFunctionPair& pair, const group::Resonance& res) {
    const double gam = res.gamma;
    // the fraction at r and -r, folded onto the half line
    auto f = [&](double r) { return -0.5 * pair.h(r) * (resonance_fraction(res, r) + resonance_fraction(res, -r)); };
    numerics::QuadratureOptions opt{1e-14, 1e-13, 4000};
    TermValue out;
    auto a = numerics::integrate(f, 0.0, gam, opt);
    auto b = numerics::integrate_semi_infinite(f, gam, pair.decay, 1e-14, 4000);
    out.value = -(a.value + b.value) / pi;
    out.error = (a.error_estimate + b.error_estimate) / pi;
    return out;
}

double resonance_tail_estimate(const TestFunctionPair& pair, const SpectralDataset& data) {
    const auto& res = data.resonances;
    if (res.size() < 10) return 0.0;
    // counting function k = a x ln x + b x + c at x = gamma_k
    const auto n = static_cast<Eigen::Index>(res.size());
    Eigen::MatrixXd A(n, 3);
    Eigen::VectorXd y(n);
    double cmean = 0.0;
    for (Eigen::Index i = 0; i < n; ++i) {
        const double x = res[i].gamma;
        A(i, 0) = x * std::log(x);
        A(i, 1) = x;
        A(i, 2) = 1.0;
        y(i) = static_cast<double>(i) + 0.5;
        cmean += 0.5 - res[i].beta;
    }
    cmean /= static_cast<double>(n);
    const Eigen::Vector3d coef = A.colPivHouseholderQr().solve(y);
    const double G = data.resonance_bound > 0 ? std::max(data.resonance_bound, res.back().gamma) : res.back().gamma;
    // far terms behave like -2 c g(0) / gamma^2; integrate against the density a(ln x + 1) + b
    const double density_integral = (coef(0) * std::log(G) + 2.0 * coef(0) + coef(1)) / G;
    return -2.0 * cmean * pair.g(0.0) * density_integral;
}

ParabolicExplicit term_P_explicit(const TestFunctionPair& pair, const GroupDescriptor& g,
                                  const SpectralDataset& data) {
    ParabolicExplicit out;
    double err = 0.0;
    for (double s : g.scattering_poles) {
        auto f = [&](double r) { return pair.h(r) * pole_fraction(s, r); };
        out.J0 += detail::half_line(pair, f, 1e-13, &err) / (2.0 * pi);
    }
    out.J0 += -2.0 * pair.g(0.0) * std::log(g.b1);

    const double cuts[] = {50.0, 100.0, 200.0};
    std::size_t next_cut = 0;
    std::vector<double> terms;
    double running = 0.0;
    for (const auto& res : data.resonances) {
        while (next_cut < 3 && res.gamma > cuts[next_cut]) out.J1_partial.emplace_back(cuts[next_cut++], running);
        auto t = j1_resonance_term(pair, res);
        running += t.value;
        err += t.error;
    }
    while (next_cut < 3 && !data.resonances.empty() && data.resonances.back().gamma >= cuts[next_cut])
        out.J1_partial.emplace_back(cuts[next_cut++], running);
    out.J1 = running;
    for (std::size_t i = 1; i < out.J1_partial.size(); ++i) {
        if (std::abs(out.J1_partial[i].second - out.J1_partial[i - 1].second) > 1e-3)
            out.warnings.push_back({WarningKind::convergence,
                                    "J1 partial sums at gamma cutoffs " + std::to_string(out.J1_partial[i - 1].first) +
                                        " and " + std::to_string(out.J1_partial[i].first) + " differ by more than 1e-3"});
    }
    out.J1_tail_estimate = resonance_tail_estimate(pair, data);

    auto fd = [&](double r) { return pair.h(r) * numerics::digamma({1.0, r}).real(); };
    out.deltaP = -g.cusp_count / pi * detail::half_line(pair, fd, 1e-11, &err) +
                 detail::h0_sign * pair.h(0.0) / 4.0 * (g.cusp_count - g.tr_phi_half) -
                 g.cusp_count * pair.g(0.0) * std::log(2.0);
    out.error = err;
    return out;
}

}  // namespace selberg::trace
