#pragma once

// K_{iR}(x) for real R > 0, x > 0, up to a positive factor depending only on R.
// Solves K'' = (e^{2t} - R^2) K in t = ln x downward from the decaying region
// with a Taylor-series method (the Taylor coefficients of e^{2t} are explicit);
// the decaying solution dominates in that direction, so the start error dies out.

#include <algorithm>
#include <array>
#include <cmath>
#include <vector>

namespace maass {

inline std::vector<double> kbessel_scaled(double R, const std::vector<double>& xs) {
    constexpr int order = 28;
    std::vector<double> out(xs.size(), 0.0);
    if (xs.empty()) return out;
    const double R2 = R * R;
    const double x_start = std::max(xs.back(), R) + 30.0;
    double t = std::log(x_start);
    double y = 1.0, yp;
    {
        const double E = std::exp(2.0 * t), qq = E - R2;
        yp = -std::sqrt(qq) - 2.0 * E / (4.0 * qq);
    }
    std::vector<int> expo(xs.size(), 0);
    int scale = 0;
    const double big = 1e150;
    std::array<double, order + 1> c{}, q{};
    std::array<double, order + 1> inv_fact{};
    inv_fact[0] = 1.0;
    for (int j = 1; j <= order; ++j) inv_fact[j] = inv_fact[j - 1] / j;

    std::ptrdiff_t k = static_cast<std::ptrdiff_t>(xs.size()) - 1;
    const double t_end = std::log(xs.front());
    while (k >= 0) {
        const double E = std::exp(2.0 * t);
        const double rate = std::sqrt(std::abs(E - R2) + E);
        double h = -std::min(0.25, 0.9 / rate);
        if (t + h < t_end) h = t_end - t;
        // Taylor coefficients at t
        q[0] = E - R2;
        double p2 = 1.0;
        for (int j = 1; j <= order; ++j) {
            p2 *= 2.0;
            q[j] = E * p2 * inv_fact[j];
        }
        c[0] = y;
        c[1] = yp;
        for (int m = 0; m + 2 <= order; ++m) {
            double s = 0.0;
            for (int j = 0; j <= m; ++j) s += q[j] * c[m - j];
            c[m + 2] = s / ((m + 2.0) * (m + 1.0));
        }
        // dense output for targets inside this step
        while (k >= 0) {
            const double tk = std::log(xs[k]);
            if (tk < t + h - 1e-15) break;
            const double d = tk - t;
            double v = c[order];
            for (int j = order - 1; j >= 0; --j) v = v * d + c[j];
            out[k] = v;
            expo[k] = scale;
            --k;
        }
        double v = c[order], dv = order * c[order];
        for (int j = order - 1; j >= 0; --j) {
            v = v * h + c[j];
            if (j >= 1) dv = dv * h + j * c[j];
        }
        y = v;
        yp = dv;
        t += h;
        if (std::abs(y) > big) {
            y /= big;
            yp /= big;
            ++scale;
        }
    }
    const int top = *std::max_element(expo.begin(), expo.end());
    for (std::size_t i = 0; i < out.size(); ++i) {
        const int d = top - expo[i];
        out[i] = d > 2 ? 0.0 : out[i] * std::pow(big, -d);
    }
    return out;
}

}  // namespace maass
