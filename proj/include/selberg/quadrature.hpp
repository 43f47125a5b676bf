#pragma once

// Adaptive Gauss-Kronrod (7,15) integration with global bisection, plus
// semi-infinite and panel-wise variants.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <queue>
#include <string>
#include <type_traits>
#include <vector>

#include "selberg/errors.hpp"

namespace selberg::numerics {

template <class T>
struct QuadratureResult {
    T value{};
    double error_estimate = 0.0;
    std::size_t evaluations = 0;
};

struct QuadratureOptions {
    double abs_tol = 1e-12;
    double rel_tol = 1e-12;
    int max_intervals = 4000;
};

enum class Decay { gaussian, exponential, algebraic };

namespace detail {

inline constexpr double xgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr double wgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr double wg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

inline double magnitude(double v) { return std::abs(v); }
inline double magnitude(const std::complex<double>& v) { return std::abs(v); }
inline bool finite(double v) { return std::isfinite(v); }
inline bool finite(const std::complex<double>& v) {
    return std::isfinite(v.real()) && std::isfinite(v.imag());
}

template <class T>
struct Segment {
    double a, b;
    T value;
    double error;
    double floor;  // roundoff level of this segment
    bool operator<(const Segment& o) const { return error < o.error; }
};

template <class T, class F>
Segment<T> gk15(F& f, double a, double b) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    const T fc = f(c);
    if (!finite(fc)) throw DomainError("integrand is not finite at " + std::to_string(c));
    T kron = fc * wgk[7];
    T gauss = fc * wg[3];
    double resabs = magnitude(fc) * wgk[7];
    T fv1[7], fv2[7];
    for (int j = 0; j < 7; ++j) {
        const double dx = h * xgk[j];
        fv1[j] = f(c - dx);
        fv2[j] = f(c + dx);
        if (!finite(fv1[j]) || !finite(fv2[j]))
            throw DomainError("integrand is not finite near " + std::to_string(c));
        kron += (fv1[j] + fv2[j]) * wgk[j];
        resabs += (magnitude(fv1[j]) + magnitude(fv2[j])) * wgk[j];
        if (j % 2 == 1) gauss += (fv1[j] + fv2[j]) * wg[j / 2];
    }
    const T mean = kron * 0.5;
    double resasc = wgk[7] * magnitude(fc - mean);
    for (int j = 0; j < 7; ++j)
        resasc += wgk[j] * (magnitude(fv1[j] - mean) + magnitude(fv2[j] - mean));
    resasc *= std::abs(h);
    resabs *= std::abs(h);
    double err = magnitude((kron - gauss) * h);
    if (resasc != 0.0 && err != 0.0)
        err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
    const double eps = std::numeric_limits<double>::epsilon();
    const double floor = 50 * eps * resabs;
    if (resabs > std::numeric_limits<double>::min() / (50 * eps)) err = std::max(floor, err);
    return {a, b, kron * h, err, floor};
}

}  // namespace detail

// Global adaptive integration over [a, b]. Throws NonConvergence when the
// interval budget is exhausted before the tolerance is met.
template <class F>
auto integrate(F&& f, double a, double b, const QuadratureOptions& opt = {})
    -> QuadratureResult<std::decay_t<decltype(f(0.0))>> {
    using T = std::decay_t<decltype(f(0.0))>;
    QuadratureResult<T> out;
    if (a == b) return out;
    std::priority_queue<detail::Segment<T>> heap;
    auto first = detail::gk15<T>(f, a, b);
    out.evaluations = 15;
    T total = first.value;
    double err = first.error;
    heap.push(first);
    int intervals = 1;
    while (err > std::max(opt.abs_tol, opt.rel_tol * detail::magnitude(total))) {
        if (intervals >= opt.max_intervals)
            throw NonConvergence("quadrature did not reach tolerance (error " +
                                 std::to_string(err) + ")");
        auto worst = heap.top();
        // The largest remaining error is already at roundoff level.
        if (worst.error <= worst.floor) break;
        heap.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        if (mid <= std::min(worst.a, worst.b) || mid >= std::max(worst.a, worst.b)) {
            // Interval can no longer be split; accept what we have.
            heap.push(worst);
            break;
        }
        auto left = detail::gk15<T>(f, worst.a, mid);
        auto right = detail::gk15<T>(f, mid, worst.b);
        out.evaluations += 30;
        total += left.value + right.value - worst.value;
        err += left.error + right.error - worst.error;
        heap.push(left);
        heap.push(right);
        ++intervals;
    }
    // Re-sum to avoid drift from the running updates.
    total = T{};
    err = 0.0;
    while (!heap.empty()) {
        total += heap.top().value;
        err += heap.top().error;
        heap.pop();
    }
    out.value = total;
    out.error_estimate = err;
    return out;
}

// Integrates [a, b] as consecutive panels of the given length, each refined
// adaptively. Used for oscillatory integrands with known period.
template <class F>
auto integrate_panels(F&& f, double a, double b, double panel,
                      const QuadratureOptions& opt = {})
    -> QuadratureResult<std::decay_t<decltype(f(0.0))>> {
    using T = std::decay_t<decltype(f(0.0))>;
    QuadratureResult<T> out;
    if (!(panel > 0)) throw DomainError("panel length must be positive");
    const auto n = static_cast<std::size_t>(std::ceil((b - a) / panel));
    QuadratureOptions local = opt;
    local.abs_tol = opt.abs_tol / std::max<std::size_t>(n, 1);
    for (std::size_t k = 0; k < n; ++k) {
        const double lo = a + k * panel;
        const double hi = std::min(b, lo + panel);
        auto r = integrate(f, lo, hi, local);
        out.value += r.value;
        out.error_estimate += r.error_estimate;
        out.evaluations += r.evaluations;
    }
    return out;
}

// Integrates over [a, inf). For gaussian/exponential decay the range is cut
// where the integrand stays below tol/100; algebraic decay uses the map
// x = a + u/(1-u).
template <class F>
auto integrate_semi_infinite(F&& f, double a, Decay decay, double tol,
                             int max_intervals = 4000)
    -> QuadratureResult<std::decay_t<decltype(f(0.0))>> {
    using T = std::decay_t<decltype(f(0.0))>;
    QuadratureOptions opt{tol, 1e-14, max_intervals};
    if (decay == Decay::algebraic) {
        auto mapped = [&](double u) -> T {
            const double w = 1.0 - u;
            return f(a + u / w) / (w * w);
        };
        return integrate(mapped, 0.0, 1.0, opt);
    }
    // Dyadic shells [a+len, a+2len] are sampled densely out to at least a+1024 so
    // that mass away from a is seen; the range ends two shells past the last
    // significant one and is split into panels.
    const double cutoff = tol / 100.0;
    double last = 0.0;
    int quiet = 0;
    double len = 1.0;
    for (int k = 0; k < 60; ++k, len *= 2.0) {
        double m = 0.0;
        for (int j = 0; j <= 64; ++j) m = std::max(m, detail::magnitude(f(a + len * (1.0 + j / 64.0))));
        if (m * len >= cutoff) {
            last = len;
            quiet = 0;
        } else {
            ++quiet;
        }
        if (quiet >= 2 && len >= 1024.0) break;
        if (k == 59) throw NonConvergence("integrand does not decay");
    }
    const double end = a + 2.0 * std::max(2.0 * last, 1.0);
    return integrate_panels(f, a, end, std::max(1.0, (end - a) / 32.0), opt);
}

}  // namespace selberg::numerics
