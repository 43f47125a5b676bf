#include <algorithm>
#include <cmath>
#include <random>

#include "doctest.h"
#include "selberg/errors.hpp"
#include "selberg/group.hpp"
#include "selberg/trace_terms.hpp"

using namespace selberg;
using namespace selberg::trace;
using numerics::pi;

namespace {

// First cusp form ordinates for PSL(2,Z) (Hejhal; Then), complete below 17.
const double known_r[] = {9.53369526135, 12.17300832468, 13.77975135189,
                          14.35850951826, 16.13807317152, 16.64425920190};

SpectralDataset small_dataset(bool with_zeros) {
    SpectralDataset d;
    if (with_zeros) {
        d = group::load_spectral_dataset(SELBERG_DATA_DIR "/maass_eigenvalues.txt",
                                         SELBERG_DATA_DIR "/riemann_zeros.txt", group::ResonanceMode::riemann_half);
    }
    d.discrete_r.assign(std::begin(known_r), std::end(known_r));
    d.multiplicity.assign(d.discrete_r.size(), 1);
    d.completeness_bound = 17.0;
    return d;
}

const std::vector<HyperbolicClass>& classes_to(double limit) {
    static double cached_limit = 0.0;
    static std::vector<HyperbolicClass> cached;
    if (limit > cached_limit) {
        cached = group::enumerate_hyperbolic(group::modular_group(), limit).classes;
        cached_limit = limit;
    }
    static std::vector<HyperbolicClass> out;
    out.clear();
    for (const auto& c : cached)
        if (c.norm <= limit) out.push_back(c);
    return out;
}

// composite Simpson on [a, b]
template <class F>
double simpson(F f, double a, double b, int n) {
    if (n % 2) ++n;
    const double h = (b - a) / n;
    double s = f(a) + f(b);
    for (int i = 1; i < n; ++i) s += (i % 2 ? 4.0 : 2.0) * f(a + i * h);
    return s * h / 3.0;
}

double expint_E1(double x) { return -std::expint(-x); }

}  // namespace

TEST_CASE("spectral side sums h over the data plus lambda = 0") {
    auto d = small_dataset(false);
    for (double t : {0.05, 0.1, 0.3}) {
        auto p = testfun::make_gauss_heat(t);
        auto s = spectral_side(p, d, 17.0);
        double want = std::exp(t / 4);
        for (double r : known_r) want += std::exp(-t * r * r);
        CHECK(s.value == doctest::Approx(want).epsilon(1e-14));
        CHECK(s.count == 7);
    }
    auto pc = testfun::make_cauchy_gauss(0.1, 2.0);
    CHECK(spectral_side(pc, SpectralDataset{}, 0.0).value == doctest::Approx(std::exp(0.025) / 3.75).epsilon(1e-15));

    auto p = testfun::make_gauss_heat(0.1);
    CHECK_THROWS_AS(spectral_side(p, d, 18.0), IncompleteData);
    auto part = spectral_side(p, d, 13.0);
    CHECK(part.count == 3);
    // dropped ordinates lie inside the tail bound
    const double dropped = spectral_side(p, d, 17.0).value - part.value;
    CHECK(dropped <= part.tail_bound);
}

TEST_CASE("identity term against its closed-form split") {
    auto g = group::modular_group();
    // tanh = 1 - 2/(e^{2 pi r} + 1); the first piece is elementary
    auto fermi = [](double r) { return r / (std::exp(2 * pi * r) + 1.0); };
    for (double t : {0.01, 0.1, 1.0}) {
        auto p = testfun::make_gauss_heat(t);
        const double corr = simpson([&](double r) { return fermi(r) * std::exp(-t * r * r); }, 0.0, 12.0, 20000);
        const double want = (1.0 / 6.0) * (1.0 / (2 * t) - 2 * corr);
        CHECK(term_H(p, g).value == doctest::Approx(want).epsilon(1e-10));
    }
    // small t: t H -> |F| / (4 pi) = 1/12
    CHECK(0.01 * term_H(testfun::make_gauss_heat(0.01), g).value == doctest::Approx(1.0 / 12).epsilon(0.02));

    for (double p0 : {1.0, 2.5}) {
        const double t = 0.1;
        auto p = testfun::make_cauchy_gauss(t, p0);
        const double head = 0.5 * std::exp(t * p0 * p0) * expint_E1(t * p0 * p0);
        const double corr = simpson([&](double r) { return fermi(r) * std::exp(-t * r * r) / (r * r + p0 * p0); },
                                    0.0, 12.0, 20000);
        CHECK(term_H(p, g).value == doctest::Approx((head - 2 * corr) / 6.0).epsilon(1e-10));
    }
}

TEST_CASE("elliptic term") {
    auto g = group::modular_group();
    // unfolded whole-line integrand as oracle
    for (double t : {0.05, 0.5}) {
        auto p = testfun::make_gauss_heat(t);
        double want = 0.0;
        for (auto [order, k] : {std::pair{2, 1}, std::pair{3, 1}, std::pair{3, 2}}) {
            auto f = [&](double r) { return std::exp(-t * r * r) * std::exp(-2 * pi * k * r / order) / (1 + std::exp(-2 * pi * r)); };
            const double L = std::sqrt(40.0 / t);
            const double integral = simpson(f, -L, L, 40000);
            want += integral / (2.0 * order * std::sin(pi * k / order));
            CHECK(elliptic_integral(p, order, k).value == doctest::Approx(integral).epsilon(1e-10));
        }
        CHECK(term_SR(p, g).value == doctest::Approx(want).epsilon(1e-10));
    }
    // h -> 1: each fixed point of order p gives (p^2 - 1)/(12 p)
    CHECK(term_SR(testfun::make_gauss_heat(1e-9), g).value == doctest::Approx(25.0 / 72.0).epsilon(1e-6));
}

TEST_CASE("hyperbolic term") {
    auto p = testfun::make_gauss_heat(0.5);
    HyperbolicClass c;
    c.trace = 3;
    c.primitive_norm = c.norm = std::pow((3 + std::sqrt(5.0)) / 2, 2);
    c.power = 1;
    c.multiplicity = 1;
    // sqrt N - 1/sqrt N = sqrt 5 for trace 3
    const double l = std::log(c.norm);
    CHECK(hyperbolic_weight(c) == doctest::Approx(l / std::sqrt(5.0)).epsilon(1e-15));
    auto one = term_SP_direct(p, {c}, 10.0);
    CHECK(one.value == doctest::Approx(l / std::sqrt(5.0) * std::exp(-l * l / 2) / std::sqrt(2 * pi)).epsilon(1e-14));
    CHECK(one.terms == 1);

    // order of the class list does not matter
    auto cls = classes_to(1e4);
    auto q = testfun::make_gauss_heat(1.0);
    const double ref = term_SP_direct(q, cls, 1e4).value;
    std::mt19937 rng(20240611);
    for (int trial = 0; trial < 5; ++trial) {
        std::shuffle(cls.begin(), cls.end(), rng);
        CHECK(term_SP_direct(q, cls, 1e4).value == doctest::Approx(ref).epsilon(1e-15));
    }

    // far classes are negligible when g is tiny there
    auto r = testfun::make_gauss_heat(0.05);
    const double a = term_SP_direct(r, cls, 1e3).value, b = term_SP_direct(r, cls, 1e4).value;
    CHECK(std::abs(a - b) <= 1e-15 * std::abs(a));
    CHECK(term_SP_direct(r, cls, 1e3).warnings.empty());
    CHECK_FALSE(term_SP_direct(testfun::make_gauss_heat(10.0), cls, 1e2).warnings.empty());

    const double lim = sp_norm_limit(r, group::modular_group().B0);
    CHECK(lim >= group::modular_group().B0);
    CHECK(lim < 1e3);
}

TEST_CASE("parabolic term") {
    auto g = group::modular_group();
    auto zero = [](double) { return 0.0; };
    testfun::TestFunctionPair z;
    z.h = z.h_imag = z.g = z.g1 = z.g2 = z.g3 = zero;
    z.decay = numerics::Decay::gaussian;
    CHECK(term_P(z, g).value == 0.0);

    for (double p0 : {1.0, 2.0}) {
        auto p = testfun::make_cauchy_gauss(0.2, p0);
        auto P = term_P(p, g);
        CHECK(P.h0_term == doctest::Approx(0.5 / (p0 * p0)).epsilon(1e-15));
        CHECK(P.value == doctest::Approx(P.scattering_integral + P.digamma_integral + P.h0_term + P.log2_term));
        CHECK(P.log2_term == doctest::Approx(-p.g(0.0) * std::log(2.0)));
    }
}

TEST_CASE("trace identity closes at large t with an empty cusp spectrum contribution") {
    auto g = group::modular_group();
    for (double t : {0.3, 0.5, 1.0, 2.0}) {
        auto p = testfun::make_gauss_heat(t);
        auto b = verify_trace_identity(p, g, SpectralDataset{});
        CHECK(std::abs(b.residual) < 1e-9);
    }
}

TEST_CASE("trace identity with the first six cusp forms") {
    auto g = group::modular_group();
    auto d = small_dataset(false);
    for (double t : {0.1, 0.15, 0.2}) {
        auto p = testfun::make_gauss_heat(t);
        auto b = verify_trace_identity(p, g, d);
        CHECK(std::abs(b.residual) < 1e-10);
        // without the six forms the identity fails by their contribution
        auto e = verify_trace_identity(p, g, SpectralDataset{});
        double six = 0.0;
        for (double r : known_r) six += std::exp(-t * r * r);
        CHECK(e.residual == doctest::Approx(b.residual - six).epsilon(1e-9));
    }
    auto pc = testfun::make_cauchy_gauss(0.1, 3.0);
    CHECK(std::abs(verify_trace_identity(pc, g, d).residual) < 1e-10);
}

TEST_CASE("cocompact groups are rejected") {
    auto g = group::modular_group();
    g.cusp_count = 0;
    g.scattering.reset();
    auto p = testfun::make_gauss_heat(0.5);
    CHECK_THROWS_AS(verify_trace_identity(p, g, SpectralDataset{}), UnsupportedGroup);
    CHECK_THROWS_AS(verify_trace_identity(p, g, SpectralDataset{}, {}, 10.0), UnsupportedGroup);
}

TEST_CASE("single resonance term: Poisson kernel against the Fourier side") {
    // -2 int_0^inf g(y) e^{-c y} cos(gamma y) dy
    for (auto [beta, gamma, t] : {std::tuple{0.25, 5.0, 0.1}, std::tuple{0.25, 14.134725, 0.2},
                                  std::tuple{0.1, 30.0, 0.05}}) {
        auto p = testfun::make_gauss_heat(t);
        const double c = 0.5 - beta;
        const double Y = std::sqrt(4 * t * 40.0);
        const double want =
            -2.0 * simpson([&](double y) { return p.g(y) * std::exp(-c * y) * std::cos(gamma * y); }, 0.0, Y, 200000);
        group::Resonance res{beta, gamma};
        CHECK(j1_resonance_term(p, res).value == doctest::Approx(want).epsilon(1e-10).scale(1e-12));
    }
}

TEST_CASE("partial fractions of the scattering term") {
    auto g = group::modular_group();
    auto d = small_dataset(true);
    for (double t : {0.1, 0.2}) {
        auto p = testfun::make_gauss_heat(t);
        auto P = term_P(p, g);
        auto E = term_P_explicit(p, g, d);
        // 2000 zeros leave a visible tail
        CHECK(std::abs(E.total() - P.value) < 2e-3);
        CHECK(std::abs(E.total() + E.J1_tail_estimate - P.value) < 1e-5);
        REQUIRE(E.J1_partial.size() == 3);
        CHECK(E.J1_partial[0].first == 50.0);
        CHECK(E.J1_partial[2].first == 200.0);
        // tail has the sign of the missing terms
        CHECK(E.J1_tail_estimate < 0.0);
    }
    // the partial sums move by more than 1e-3 between cutoffs at small t
    auto E = term_P_explicit(testfun::make_gauss_heat(0.05), g, d);
    CHECK_FALSE(E.warnings.empty());
}

TEST_CASE("Theorem 1 rearrangement") {
    auto g = group::modular_group();
    auto d = small_dataset(true);
    auto p = testfun::make_gauss_heat(0.1);
    const auto& cls = classes_to(1e4);
    auto a = theorem1_terms(p, g, d, cls, 1e4, g.b0());
    // closes up to the zeros beyond the loaded range
    CHECK(std::abs(a.residual - a.resonance_tail_estimate) < 1e-5);
    CHECK(a.M == doctest::Approx(a.W + a.S_ex + a.S_R + a.S0 + a.pole_term + a.h0_term + a.g0_term +
                                 a.zero_eigen_correction));
    CHECK(a.rhs == doctest::Approx(a.H + a.G + a.SP1 + a.SP2 + a.SP3 + a.M));

    // the split point b only moves mass between pieces
    auto b = theorem1_terms(p, g, d, cls, 1e4, g.b0() + 0.5);
    CHECK(b.rhs == doctest::Approx(a.rhs).epsilon(1e-9));
    CHECK(b.W != doctest::Approx(a.W));

    // without resonances the resonance pieces vanish
    auto nores = d;
    nores.resonances.clear();
    auto c = theorem1_terms(p, g, nores, cls, 1e4, g.b0());
    CHECK(c.SP2 == 0.0);
    CHECK(c.SP3 == 0.0);

    CHECK_THROWS_AS(theorem1_terms(p, g, d, cls, 1e4, g.b0() - 0.1), DomainError);
}
