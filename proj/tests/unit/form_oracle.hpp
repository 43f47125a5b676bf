#pragma once

// Brute-force hyperbolic class oracle for PSL(2,Z), independent of the
// library's Gauss-cycle enumerator:
//  * class counts use Zagier reduction (a > 0, c > 0, b > a + c) and its cycle map;
//  * a class of trace tau with form u*f0 (f0 primitive of discriminant d,
//    d u^2 = tau^2 - 4) is primitive iff (tau, u) is the fundamental solution
//    of t^2 - d u^2 = 4, found by direct search over smaller t.

#include <cmath>
#include <cstdint>
#include <numeric>
#include <set>
#include <tuple>
#include <vector>

namespace oracle {

using i64 = std::int64_t;

inline i64 isqrt(i64 n) {
    i64 r = static_cast<i64>(std::sqrt(static_cast<double>(n)));
    while (r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

inline int zagier_cycles(i64 D, bool primitive_only) {
    const i64 s = isqrt(D);
    std::set<std::tuple<i64, i64, i64>> reduced;
    for (i64 m = -s; m <= s; ++m) {
        const i64 E = D - m * m;
        if (E <= 0) continue;
        for (i64 u = 1; u * u < E; ++u) {
            if (E % u) continue;
            const i64 v = E / u;
            if ((u + v) % 2) continue;
            const i64 b = (u + v) / 2;
            const i64 q = (v - u) / 2 + m;
            if (q <= 0 || q % 2) continue;
            const i64 a = q / 2, c = a - m;
            if (c <= 0) continue;
            if (primitive_only && std::gcd(std::gcd(a, b), c) != 1) continue;
            reduced.insert({a, b, c});
        }
    }
    std::set<std::tuple<i64, i64, i64>> seen;
    int cycles = 0;
    for (const auto& f : reduced) {
        if (seen.count(f)) continue;
        ++cycles;
        auto cur = f;
        for (int guard = 0; guard < 1000000; ++guard) {
            seen.insert(cur);
            auto [a, b, c] = cur;
            const i64 n = (b + s) / (2 * c) + 1;
            cur = {c, 2 * c * n - b, a - b * n + c * n * n};
            if (cur == f) break;
        }
    }
    return cycles;
}

struct OracleClass {
    double norm;
    int multiplicity;
};

// Primitive multiplicity at trace tau.
inline int primitive_multiplicity(i64 tau) {
    const i64 N = tau * tau - 4;
    int total = 0;
    for (i64 u = 1; u * u <= N; ++u) {
        if (N % (u * u)) continue;
        const i64 d = N / (u * u);
        if (d % 4 != 0 && d % 4 != 1) continue;
        bool fundamental = true;
        for (i64 t = 3; t < tau && fundamental; ++t) {
            const i64 r = t * t - 4;
            if (r % d) continue;
            const i64 q = r / d;
            const i64 w = isqrt(q);
            if (w * w == q) fundamental = false;
        }
        if (fundamental) total += zagier_cycles(d, true);
    }
    return total;
}

inline std::vector<OracleClass> brute_force_classes(double norm_limit) {
    std::vector<OracleClass> out;
    for (i64 tau = 3;; ++tau) {
        const double t = static_cast<double>(tau);
        const double eps = 0.5 * (t + std::sqrt(t * t - 4.0));
        const double n0 = eps * eps;
        if (n0 > norm_limit) break;
        const int m = primitive_multiplicity(tau);
        if (m == 0) continue;
        for (double n = n0; n <= norm_limit; n *= n0) out.push_back({n, m});
    }
    return out;
}

}  // namespace oracle
