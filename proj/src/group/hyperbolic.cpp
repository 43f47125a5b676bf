#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <tuple>

#include "selberg/errors.hpp"
#include "selberg/group.hpp"

namespace selberg::group {

namespace {

using i64 = std::int64_t;

i64 isqrt(i64 n) {
    i64 r = static_cast<i64>(std::sqrt(static_cast<double>(n)));
    while (r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

struct Form {
    i64 a, b, c;
    auto operator<=>(const Form&) const = default;
};

}  // namespace

int count_form_cycles(i64 D) {
    if (D <= 0) throw DomainError("discriminant must be positive");
    const i64 s = isqrt(D);
    if (s * s == D) throw DomainError("discriminant must not be a square");
    if (D % 4 != 0 && D % 4 != 1) return 0;

    // Reduced: 0 < b < sqrt D, sqrt D - b < 2|a| < sqrt D + b.
    std::set<Form> reduced;
    for (i64 b = (D % 2 == 0) ? 2 : 1; b <= s; b += 2) {
        const i64 n = (D - b * b) / 4;  // = -ac > 0
        const i64 lo = (s - b + 2) / 2;  // 2a >= s - b + 1
        const i64 hi = (s + b) / 2;      // 2a <= s + b
        for (i64 a = std::max<i64>(lo, 1); a <= hi; ++a) {
            if (n % a != 0) continue;
            reduced.insert({a, b, -n / a});
            reduced.insert({-a, b, n / a});
        }
    }
    // rho(a, b, c) = (c, b', (b'^2 - D)/(4c)), b' = -b mod 2|c| in (sqrt D - 2|c|, sqrt D)
    auto rho = [&](const Form& f) {
        const i64 m = 2 * std::abs(f.c);
        const i64 r = ((s + f.b) % m + m) % m;
        const i64 bp = s - r;
        return Form{f.c, bp, (bp * bp - D) / (4 * f.c)};
    };
    std::set<Form> seen;
    int cycles = 0;
    for (const auto& f : reduced) {
        if (seen.count(f)) continue;
        ++cycles;
        Form cur = f;
        do {
            seen.insert(cur);
            cur = rho(cur);
            if (!reduced.count(cur)) throw DomainError("reduction cycle left the reduced set");
        } while (!(cur == f));
    }
    return cycles;
}

double norm_from_trace(i64 tau) {
    const double t = static_cast<double>(tau);
    const double eps = 0.5 * (t + std::sqrt(t * t - 4.0));
    return eps * eps;
}

double lambda_mangoldt(const HyperbolicClass& c) {
    return std::log(c.primitive_norm) / (1.0 - 1.0 / c.norm);
}

HyperbolicSpectrum expand_powers(const std::vector<std::pair<double, int>>& primitive,
                                 double norm_limit) {
    HyperbolicSpectrum out;
    out.norm_limit = norm_limit;
    for (const auto& [n0, mult] : primitive) {
        if (!(n0 > 1.0) || mult < 1) throw ValidationError("primitive classes need norm > 1, multiplicity >= 1");
        double n = n0;
        for (int k = 1; n <= norm_limit; ++k, n *= n0)
            out.classes.push_back({n0, k, std::pow(n0, k), mult, 0});
    }
    std::sort(out.classes.begin(), out.classes.end(),
              [](const HyperbolicClass& x, const HyperbolicClass& y) { return x.norm < y.norm; });
    return out;
}

HyperbolicSpectrum enumerate_hyperbolic(const GroupDescriptor& g, double norm_limit) {
    if (!g.modular) throw UnsupportedGroup("class enumeration is only available for the modular group");
    if (norm_limit < g.B0) throw DomainError("norm_limit must be at least B0");

    // Total class count per trace, then remove powers of smaller primitive classes.
    std::map<i64, int> primitive;  // trace -> primitive multiplicity
    std::map<i64, int> power_count;
    for (i64 tau = 3; norm_from_trace(tau) <= norm_limit * (1 + 1e-12); ++tau) {
        const int total = count_form_cycles(tau * tau - 4);
        const int prim = total - power_count[tau];
        if (prim < 0) throw DomainError("inconsistent power bookkeeping");
        if (prim == 0) continue;
        primitive[tau] = prim;
        // traces of powers: t_k = tau t_{k-1} - t_{k-2}
        i64 prev = 2, cur = tau;
        for (int k = 2;; ++k) {
            const i64 next = tau * cur - prev;
            prev = cur;
            cur = next;
            if (norm_from_trace(cur) > norm_limit * (1 + 1e-12)) break;
            power_count[cur] += prim;
        }
    }

    HyperbolicSpectrum out;
    out.norm_limit = norm_limit;
    for (const auto& [tau, mult] : primitive) {
        const double n0 = norm_from_trace(tau);
        i64 prev = 2, cur = tau;
        for (int k = 1;; ++k) {
            const double n = std::pow(n0, k);
            if (n > norm_limit) break;
            out.classes.push_back({n0, k, n, mult, cur});
            const i64 next = tau * cur - prev;
            prev = cur;
            cur = next;
        }
    }
    std::sort(out.classes.begin(), out.classes.end(),
              [](const HyperbolicClass& x, const HyperbolicClass& y) { return x.norm < y.norm; });
    return out;
}

}  // namespace selberg::group
