#include <algorithm>
#include <cmath>
#include <limits>

#include "doctest.h"
#include "selberg/asymptotics.hpp"
#include "selberg/errors.hpp"

using namespace selberg;
using namespace selberg::asymptotics;
using numerics::pi;

namespace {

const double known_r[] = {9.53369526135, 12.17300832468, 13.77975135189,
                          14.35850951826, 16.13807317152, 16.64425920190};

SpectralDataset six_forms() {
    SpectralDataset d;
    d.discrete_r.assign(std::begin(known_r), std::end(known_r));
    d.multiplicity.assign(d.discrete_r.size(), 1);
    d.completeness_bound = 17.0;
    return d;
}

const SpectralDataset& bundled() {
    static auto d = group::load_spectral_dataset(SELBERG_DATA_DIR "/maass_eigenvalues.txt",
                                                 SELBERG_DATA_DIR "/riemann_zeros.txt",
                                                 group::ResonanceMode::riemann_half);
    return d;
}

std::vector<double> log_grid(double a, double b, int n) {
    std::vector<double> v;
    for (int i = 0; i < n; ++i) v.push_back(a * std::pow(b / a, i / (n - 1.0)));
    return v;
}

// I(t,p) by composite Simpson after r = u^2, which removes the log singularity
double simpson_I(double t, double p, double umax, int n) {
    auto f = [&](double u) {
        if (u == 0.0) return 0.0;
        const double r = u * u;
        return 2.0 * u * std::exp(-t * r * r) * std::log(r) / (r * r + p * p);
    };
    const double h = umax / n;
    double s = f(0.0) + f(umax);
    for (int i = 1; i < n; ++i) s += (i % 2 ? 4.0 : 2.0) * f(i * h);
    return s * h / 3.0;
}

}  // namespace

TEST_CASE("I(t,p) against 40-digit references") {
    // mpmath quad at 40 digits
    CHECK(integral_I(1e-3, 1.0).value == doctest::Approx(-0.19475442510415724008).epsilon(1e-12));
    CHECK(integral_I(1e-6, 2.0).value == doctest::Approx(0.53212265001193914055).epsilon(1e-12));
    CHECK(integral_I(1e-6, 1.0).value == doctest::Approx(-0.012276024420686402115).epsilon(1e-11));
    CHECK(integral_I(0.1, 2.0).value == doctest::Approx(-0.11429143813486772416).epsilon(1e-12));
    CHECK(integral_I(0.1, 2.0).error < 1e-12);

    // refinement: Simpson on a 10x finer mesh agrees to 1e-9
    const double coarse = simpson_I(0.1, 2.0, 6.0, 40000), fine = simpson_I(0.1, 2.0, 6.0, 400000);
    CHECK(std::abs(fine - coarse) < 1e-6);
    CHECK(integral_I(0.1, 2.0).value == doctest::Approx(fine).epsilon(1e-9));

    CHECK_THROWS_AS(integral_I(0.0, 1.0), DomainError);
    CHECK_THROWS_AS(integral_I(0.1, -1.0), DomainError);
}

TEST_CASE("closed form of I matches quadrature") {
    for (double t : {1e-8, 1e-5, 1e-3, 0.1, 1.0, 5.0})
        for (double p : {0.6, 1.0, 2.0, 4.0}) {
            if (t * p * p > 30.0) continue;
            const double q = integral_I(t, p).value, c = integral_I_closed(t, p);
            CHECK(c == doctest::Approx(q).epsilon(1e-12).scale(1.0));
        }
    CHECK_THROWS_AS(integral_I_closed(10.0, 4.0), DomainError);
}

TEST_CASE("small-t limits of I") {
    // I -> (pi / 2p) ln p; the first correction sqrt(t)(d0' + d0 ln(1/t)) does not depend on p
    for (double p : {1.0, 2.0}) {
        const double limit = pi / (2.0 * p) * std::log(p);
        CHECK(std::abs(integral_I(1e-10, p).value - limit) < 1e-3);
        const double t = 1e-6;
        const double first = std::sqrt(t) * (coefficient_d_prime(0) + coefficient_d(0) * std::log(1.0 / t));
        CHECK(std::abs(integral_I(t, p).value - limit - first) < 1e-5);
    }
    CHECK(std::abs(integral_I(1e-10, 1.0).value) < 1e-3);
}

TEST_CASE("expansion coefficients") {
    // closed forms: d0 = -sqrt(pi)/2, d1 = -sqrt(pi)/3, d2 = -(2/15) sqrt(pi)
    const double sp = std::sqrt(pi);
    CHECK(coefficient_d(0) == doctest::Approx(-sp / 2).epsilon(1e-15));
    CHECK(coefficient_d(1) == doctest::Approx(-sp / 3).epsilon(1e-15));
    CHECK(coefficient_d(2) == doctest::Approx(-2.0 * sp / 15.0).epsilon(1e-15));
    CHECK(coefficient_d(2) > coefficient_d(1));
    // d0' = -sqrt(pi)(psi(1/2)/2 + 1) with psi(1/2) = -gamma - 2 ln 2
    const double psi_half = -0.57721566490153286 - 2.0 * std::log(2.0);
    CHECK(coefficient_d_prime(0) == doctest::Approx(-sp * (psi_half / 2 + 1)).epsilon(1e-14));

    auto fit = fit_expansion_coefficients();
    for (int n = 0; n < 3; ++n) {
        CHECK(fit.d[n] == doctest::Approx(coefficient_d(n)).epsilon(1e-5));
        CHECK(fit.d_prime[n] == doctest::Approx(coefficient_d_prime(n)).epsilon(1e-5));
        CHECK(std::abs(fit.d[n] - coefficient_d(n)) < 5.0 * fit.d_sigma[n] + 1e-8);
    }
    CHECK(fit.d[2] - fit.d[1] > 3.0 * std::hypot(fit.d_sigma[1], fit.d_sigma[2]));
    CHECK_THROWS_AS(fit_expansion_coefficients(1e-3, 1e-4), DomainError);
}

TEST_CASE("expansion of I") {
    // the order-2 remainder is O(t^{5/2} ln(1/t))
    for (double p : {1.0, 2.0}) {
        double worst = 0.0;
        for (double t : log_grid(1e-4, 1e-2, 25)) {
            const double diff = std::abs(integral_I(t, p).value - expansion_I(t, p, 2));
            worst = std::max(worst, diff / (std::pow(t, 2.5) * std::log(1.0 / t)));
        }
        CHECK(worst < 1.0);
    }
    // p = 1 leaves only the half-integer ladder
    for (double t : {1e-4, 1e-3}) {
        double ladder = 0.0;
        for (int n = 0; n <= 2; ++n)
            ladder += std::pow(t, n + 0.5) * (coefficient_d_prime(n) + std::log(1.0 / t) * coefficient_d(n));
        CHECK(expansion_I(t, 1.0, 2) == doctest::Approx(ladder).epsilon(1e-14));
    }
    Warnings w;
    expansion_I(0.5, 2.0, 2, &w);
    CHECK(w.size() == 1);
    expansion_I(0.01, 2.0, 2, &w);
    CHECK(w.size() == 1);
    CHECK_THROWS_AS(expansion_I(0.01, 1.0, 5), DomainError);
}

TEST_CASE("resonance sum S(t)") {
    const auto& d = bundled();
    double prev = std::numeric_limits<double>::infinity();
    for (double t : log_grid(1e-4, 1.0, 40)) {
        const double s = resonance_S(d, t);
        CHECK(s > 0.0);
        CHECK(s < prev);
        prev = s;
    }
    double full = 0.0;
    for (const auto& r : d.resonances) full += std::pow(r.gamma, -4);
    CHECK(resonance_S(d, 1e-9) == doctest::Approx(full).epsilon(1e-9));
}

TEST_CASE("remainder scan") {
    auto g = group::modular_group();
    // lambda_0 alone: lhs = e^{t/4}/(p^2 - 1/4)
    SpectralDataset empty;
    empty.completeness_bound = std::numeric_limits<double>::infinity();
    auto e = eq62_scan(empty, g, {0.05, 0.2}, {0.75, 2.0});
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) {
            const double t = e.t_grid[i], p = e.p_values[j];
            CHECK(e.lhs[i][j] == doctest::Approx(std::exp(t / 4) / (p * p - 0.25)).epsilon(1e-15));
            const double known = std::exp(t * p * p) * std::log(1 / t) / 12.0 - integral_I(t, p).value / pi;
            CHECK(e.known_terms[i][j] == doctest::Approx(known).epsilon(1e-13));
            CHECK(e.remainder[i][j] == doctest::Approx(e.lhs[i][j] - e.known_terms[i][j]).epsilon(1e-15));
        }
    CHECK_THROWS_AS(eq62_scan(empty, g, {0.1}, {0.5}), DomainError);

    // incomplete cells are skipped and flagged: e^{-t 17^2} < 1e-12 needs t > 0.0956
    auto six = eq62_scan(six_forms(), g, {0.05, 0.2}, {1.0});
    CHECK(six.skipped[0][0]);
    CHECK(!six.skipped[1][0]);
    CHECK(!six.warnings.empty());

    const auto& d = bundled();
    auto s = eq62_scan(d, g, default_t_grid(), {0.75, 1.0, 2.0});
    CHECK(std::isfinite(s.max_abs_remainder));
    CHECK(s.max_abs_remainder < 10.0);
    for (const auto& row : s.skipped)
        for (bool k : row) CHECK(!k);
    // the C0 + C1 sqrt(t) model only describes B once t is small
    auto small = eq62_scan(d, g, log_grid(0.002, 0.02, 25), {0.75, 1.0, 2.0});
    CHECK(small.worst_fit_fraction < 0.1);
    CHECK(s.worst_fit_fraction > small.worst_fit_fraction);
}

TEST_CASE("resonance cutoff tail") {
    auto g = group::modular_group();
    const auto& d = bundled();
    auto half = d;
    const std::size_t keep = d.resonances.size() / 2;
    half.resonances.resize(keep);
    half.resonance_bound = half.resonances.back().gamma;
    const double gcut = half.resonance_bound;
    for (double t : {0.02, 0.05, 0.2}) {
        auto a = eq62_scan(d, g, {t}, {1.0});
        auto b = eq62_scan(half, g, {t}, {1.0});
        const double bound = std::exp(-t * gcut * gcut) * static_cast<double>(d.resonances.size() - keep);
        CHECK(std::abs(a.lhs[0][0] - b.lhs[0][0]) <= bound);
    }
}

TEST_CASE("discrete and resonance ordinates enter the same way") {
    auto g = group::modular_group();
    const auto& d = bundled();
    // a synthetic ordinate entered once as a cusp form and once as a resonance
    const double r = 3.0;
    auto as_form = d, as_resonance = d;
    as_form.discrete_r.insert(as_form.discrete_r.begin(), r);
    as_form.multiplicity.insert(as_form.multiplicity.begin(), 1);
    as_resonance.resonances.insert(as_resonance.resonances.begin(), {0.25, r});
    for (double t : {0.05, 0.1})
        for (double p : {0.75, 2.0}) {
            auto a = eq62_scan(as_form, g, {t}, {p});
            auto b = eq62_scan(as_resonance, g, {t}, {p});
            const double e = std::exp(-t * r * r);
            CHECK(b.lhs[0][0] - a.lhs[0][0] == doctest::Approx(e / (r * r) - e / (r * r + p * p)).epsilon(1e-12));
            CHECK(b.known_terms[0][0] - a.known_terms[0][0] ==
                  doctest::Approx(p * p * std::exp(t * p * p) * e / std::pow(r, 4)).epsilon(1e-12));
        }
}

TEST_CASE("difference table") {
    auto g = group::modular_group();
    const auto& d = bundled();
    auto tab = eq643_difference(d, g, log_grid(0.01, 0.3, 25), 1.0, 2.0);
    CHECK(tab.rows.size() == 25);
    CHECK(tab.max_gap < 1e-3);
    for (const auto& row : tab.rows) CHECK(row.implied_B == doctest::Approx(row.B_term).epsilon(1e-9).scale(1.0));
    CHECK(tab.log52_predicted == doctest::Approx(0.56418958354775628695).epsilon(1e-14));
    // this grid is too coarse in t for the ladder fit
    CHECK(std::any_of(tab.warnings.begin(), tab.warnings.end(),
                      [](const Warning& w) { return w.kind == WarningKind::fit; }));

    CHECK_THROWS_AS(eq643_difference(d, g, {0.1}, 1.0, 1.0), DomainError);
    CHECK_THROWS_AS(eq643_difference(d, g, {0.1}, 0.4, 1.0), DomainError);
}

TEST_CASE("finite spectrum forces a t^{5/2} ln(1/t) term") {
    auto g = group::modular_group();
    auto sim = finite_spectrum(six_forms(), 5);
    CHECK(sim.discrete_r.size() == 5);
    CHECK(sim.resonances.empty());
    auto tab = eq643_difference(sim, g, log_grid(1e-6, 1e-3, 60), 1.0, 2.0);
    REQUIRE(tab.rows.size() == 60);
    CHECK(tab.log52_coefficient > 3.0 * tab.log52_sigma);
    CHECK(tab.log52_coefficient == doctest::Approx(tab.log52_predicted).epsilon(1e-4));
    CHECK(tab.log52_truncation_shift < 1e-4);
    // the Weyl term shows up one rung lower as -t ln(1/t)/12
    const auto& b = tab.ladder_fit.basis;
    const auto i = static_cast<std::size_t>(std::find(b.begin(), b.end(), "t ln") - b.begin());
    REQUIRE(i < b.size());
    CHECK(tab.ladder_fit.coefficients[i] == doctest::Approx(-1.0 / 12.0).epsilon(1e-8));

    // deterministic
    auto again = eq643_difference(sim, g, log_grid(1e-6, 1e-3, 60), 1.0, 2.0);
    CHECK(again.log52_coefficient == tab.log52_coefficient);

    CHECK_THROWS_AS(finite_spectrum(six_forms(), 7), DomainError);
}

TEST_CASE("heat trace coefficients") {
    auto g = group::modular_group();
    const auto& d = bundled();
    auto grid = log_grid(0.005, 0.05, 25);
    auto with = eq646_heat_trace(d, g, grid);
    CHECK(with.a_inv_t == doctest::Approx(1.0 / 12.0).epsilon(0.02));
    CHECK(with.a_logsqrt == doctest::Approx(1.0 / (4.0 * std::sqrt(pi))).epsilon(0.1));
    auto without = eq646_heat_trace(d, g, grid, false);
    CHECK(std::abs(without.a_logsqrt - with.a_logsqrt) > 3.0 * with.fit.std_errors[1]);
    CHECK(with.t_grid.size() == grid.size());
}
