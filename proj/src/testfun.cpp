#include "selberg/testfun.hpp"

#include <cmath>
#include <sstream>

#include "selberg/errors.hpp"
#include "selberg/special.hpp"

namespace selberg::testfun {

using numerics::pi;

const char* to_string(Kind kind) {
    switch (kind) {
        case Kind::gauss_heat: return "gauss_heat";
        case Kind::cauchy_gauss: return "cauchy_gauss";
        case Kind::custom: return "custom";
    }
    return "custom";
}

std::string TestFunctionPair::describe() const {
    std::ostringstream os;
    os << to_string(kind);
    if (kind != Kind::custom) os << "(t=" << t;
    if (kind == Kind::cauchy_gauss) os << ", p=" << p;
    if (kind != Kind::custom) os << ")";
    return os.str();
}

TestFunctionPair make_gauss_heat(double t) {
    if (!(t > 0.0) || !std::isfinite(t)) throw DomainError("gauss_heat requires t > 0");
    TestFunctionPair pr;
    pr.kind = Kind::gauss_heat;
    pr.t = t;
    pr.decay = numerics::Decay::gaussian;
    const double norm = 1.0 / std::sqrt(4.0 * pi * t);
    pr.h = [t](double r) { return std::exp(-t * r * r); };
    pr.h_imag = [t](double s) { return std::exp(t * s * s); };
    pr.g = [t, norm](double y) { return norm * std::exp(-y * y / (4.0 * t)); };
    pr.g1 = [t, norm](double y) { return -y / (2.0 * t) * norm * std::exp(-y * y / (4.0 * t)); };
    pr.g2 = [t, norm](double y) {
        return (y * y / (4.0 * t * t) - 1.0 / (2.0 * t)) * norm * std::exp(-y * y / (4.0 * t));
    };
    pr.g3 = [t, norm](double y) {
        return (-y * y * y / (8.0 * t * t * t) + 3.0 * y / (4.0 * t * t)) * norm *
               std::exp(-y * y / (4.0 * t));
    };
    return pr;
}

namespace {

// e^{tp^2 - yp} erfc(p sqrt t - y/(2 sqrt t)) for y >= 0, without overflow.
double cg_first(double t, double p, double y) {
    const double st = std::sqrt(t);
    const double b = p * st - y / (2.0 * st);
    if (b >= 0.0) return numerics::erfcx(b) * std::exp(-y * y / (4.0 * t));
    // erfc(b) = 2 - erfc(-b)
    return 2.0 * std::exp(t * p * p - y * p) - numerics::erfcx(-b) * std::exp(-y * y / (4.0 * t));
}

// e^{tp^2 + yp} erfc(p sqrt t + y/(2 sqrt t)) for y >= 0.
double cg_second(double t, double p, double y) {
    const double st = std::sqrt(t);
    const double a = p * st + y / (2.0 * st);
    return numerics::erfcx(a) * std::exp(-y * y / (4.0 * t));
}

}  // namespace

TestFunctionPair make_cauchy_gauss(double t, double p) {
    if (!(t > 0.0) || !std::isfinite(t)) throw DomainError("cauchy_gauss requires t > 0");
    if (!(p > 0.5) || !std::isfinite(p))
        throw DomainError("cauchy_gauss requires p > 1/2 (strip holomorphy)");
    TestFunctionPair pr;
    pr.kind = Kind::cauchy_gauss;
    pr.t = t;
    pr.p = p;
    pr.decay = numerics::Decay::gaussian;
    const double norm = 1.0 / std::sqrt(4.0 * pi * t);
    pr.h = [t, p](double r) { return std::exp(-t * r * r) / (r * r + p * p); };
    pr.h_imag = [t, p](double s) { return std::exp(t * s * s) / (p * p - s * s); };
    auto g = [t, p](double y) {
        y = std::fabs(y);
        return (cg_first(t, p, y) + cg_second(t, p, y)) / (4.0 * p);
    };
    auto g1 = [t, p](double y) {
        const double s = y < 0 ? -1.0 : 1.0;
        y = std::fabs(y);
        return s * 0.25 * (cg_second(t, p, y) - cg_first(t, p, y));
    };
    pr.g = g;
    pr.g1 = g1;
    pr.g2 = [g, t, p, norm](double y) {
        return p * p * g(y) - norm * std::exp(-y * y / (4.0 * t));
    };
    pr.g3 = [g1, t, p, norm](double y) {
        return p * p * g1(y) + y / (2.0 * t) * norm * std::exp(-y * y / (4.0 * t));
    };
    return pr;
}

TestFunctionPair make_custom(RealFn h, RealFn h_imag, RealFn g, RealFn g1, RealFn g2, RealFn g3,
                             numerics::Decay decay, double b0) {
    if (!h || !h_imag || !g || !g1 || !g2 || !g3)
        throw DomainError("custom test function needs h, h(i.), g, g', g'', g'''");
    TestFunctionPair pr;
    pr.kind = Kind::custom;
    pr.h = std::move(h);
    pr.h_imag = std::move(h_imag);
    pr.g = std::move(g);
    pr.g1 = std::move(g1);
    pr.g2 = std::move(g2);
    pr.g3 = std::move(g3);
    pr.decay = decay;
    AdmissibilityReport rep;
    try {
        rep = check_admissibility(pr, b0);
    } catch (const NonConvergence& e) {
        throw AdmissibilityError(std::string("custom test function rejected: ") + e.what());
    }
    if (!rep.passes_hs) throw AdmissibilityError("custom test function fails the decay conditions");
    return pr;
}

RealFn f_aux(const TestFunctionPair& pair) {
    auto g = pair.g;
    auto g1 = pair.g1;
    return [g, g1](double y) { return -0.5 * g(y) + g1(y); };
}

AdmissibilityReport check_admissibility(const TestFunctionPair& pair, double b0) {
    if (!(b0 > 0.0)) throw DomainError("check_admissibility requires b0 > 0");
    auto weight = [&](double y) {
        // e^{y/2} y (|g|+|g'|+|g''|); the exponential is applied last so that
        // underflowed g values give 0 rather than inf * 0.
        const double s = std::fabs(pair.g(y)) + std::fabs(pair.g1(y)) + std::fabs(pair.g2(y));
        return s == 0.0 ? 0.0 : y * s * std::exp(0.5 * y);
    };
    auto third = [&](double y) { return std::fabs(pair.g3(y)); };

    AdmissibilityReport rep;
    numerics::QuadratureOptions opt{1e-12, 1e-10, 4000};
    double lo = b0;
    double hi = std::max(2.0 * b0, b0 + 8.0);
    double c_total = 0.0, g3_total = 0.0;
    double prev = -1.0;
    int growth = 0;
    // Double the window [lo, hi) until the increments are negligible.
    for (int k = 0; k < 12; ++k) {
        const double dc = numerics::integrate(weight, lo, hi, opt).value;
        const double d3 = numerics::integrate(third, lo, hi, opt).value;
        c_total += dc;
        g3_total += d3;
        const double inc = dc + d3;
        if (inc <= 1e-12 * (c_total + g3_total) || inc == 0.0) {
            rep.passes_hs = std::isfinite(c_total) && std::isfinite(g3_total);
            rep.c_gamma_g = c_total;
            rep.g3_l1 = g3_total;
            rep.upper_limit = hi;
            return rep;
        }
        growth = (prev >= 0.0 && inc >= prev) ? growth + 1 : 0;
        if (growth >= 3) throw NonConvergence("admissibility integral grows across 3 doublings");
        prev = inc;
        lo = hi;
        hi = std::min(2.0 * hi, 1400.0);
        if (lo >= 1400.0) break;
    }
    throw NonConvergence("admissibility integral did not settle before y = 1400");
}

}  // namespace selberg::testfun
