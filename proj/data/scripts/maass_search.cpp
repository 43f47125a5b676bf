// Finds Maass cusp form ordinates R for PSL(2,Z) with Hejhal's method and
// checks completeness against the trace formula.
//
//   maass_search scan <Rmin> <Rmax> <out>      candidates with Hecke checks
//   maass_search window <eigen file> <Tmin> <Tmax> <step>
//                                                spectral sums of e^{-(r-T)^2} vs trace formula
//   maass_search local <Rmin> <Rmax> <step>      fine rescan of one interval

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>
#include <vector>

#include "hejhal.hpp"
#include "selberg/group.hpp"
#include "selberg/trace_terms.hpp"

namespace {

constexpr double Y1 = 0.84;
constexpr double Y2 = 0.78;

struct Found {
    double R;
    int parity;
    double a2, hecke1, hecke2, cross;
};

double refine(const maass::HejhalSystem& sys, double a, double b, double fa, double fb) {
    int side = 0;
    for (int it = 0; it < 100 && b - a > 1e-13 * b; ++it) {
        const double c = (a * fb - b * fa) / (fb - fa);
        const double fc = sys.solve(c).residual;
        if ((fc > 0) == (fb > 0)) {
            b = c;
            fb = fc;
            if (side == -1) fa /= 2;
            side = -1;
        } else {
            a = c;
            fa = fc;
            if (side == 1) fb /= 2;
            side = 1;
        }
        if (fc == 0.0) return c;
    }
    return 0.5 * (a + b);
}

bool accept(double R, int parity, Found& f) {
    maass::HejhalSystem s1(parity, Y1, maass::truncation_M(R + 1, Y1));
    maass::HejhalSystem s2(parity, Y2, maass::truncation_M(R + 1, Y2));
    auto r1 = s1.solve(R);
    auto r2 = s2.solve(R);
    const auto& c = r1.coefficients;
    const auto& d = r2.coefficients;
    f.R = R;
    f.parity = parity;
    f.a2 = c(1);
    f.hecke1 = std::abs(c(1) * c(2) - c(5)) / (1 + std::abs(c(1) * c(2)));
    f.hecke2 = std::abs(c(1) * c(1) - 1 - c(3)) / (1 + c(1) * c(1));
    f.cross = 0.0;
    for (int k = 1; k < 4; ++k) f.cross = std::max(f.cross, std::abs(c(k) - d(k)) / (1 + std::abs(c(k))));
    return f.hecke1 < 1e-4 && f.hecke2 < 1e-4 && f.cross < 1e-4;
}

void scan(double Rmin, double Rmax, double step_scale, std::vector<Found>& out, bool verbose) {
    // A root lying next to a pole of the residual at one height shows no sign
    // change there, so brackets are collected at both heights.
    for (int parity : {1, -1})
    for (double Y : {Y1, Y2}) {
        double block = Rmin;
        while (block < Rmax) {
            const double block_end = std::min(Rmax, block + 2.0);
            maass::HejhalSystem sys(parity, Y, maass::truncation_M(block_end + 0.5, Y));
            std::vector<double> Rs, vs;
            for (double R = block; R <= block_end + 1e-12;) {
                Rs.push_back(R);
                vs.push_back(sys.solve(R).residual);
                R += step_scale / std::max(R, 5.0);
            }
            std::vector<std::pair<double, double>> brackets;
            for (std::size_t i = 1; i < Rs.size(); ++i)
                if ((vs[i] > 0) != (vs[i - 1] > 0)) brackets.emplace_back(Rs[i - 1], Rs[i]);
            // two roots between samples: a quadratic through three samples changes sign twice
            for (std::size_t i = 1; i + 1 < Rs.size(); ++i) {
                const double y0 = vs[i - 1], y1 = vs[i], y2 = vs[i + 1];
                if ((y0 > 0) != (y1 > 0) || (y1 > 0) != (y2 > 0)) continue;
                if (std::abs(y1) > std::min(std::abs(y0), std::abs(y2))) continue;
                const double x0 = Rs[i - 1], x1 = Rs[i], x2 = Rs[i + 1];
                const double d01 = (y1 - y0) / (x1 - x0), d12 = (y2 - y1) / (x2 - x1);
                const double A = (d12 - d01) / (x2 - x0);
                if (A == 0.0) continue;
                const double B = d01 - A * (x0 + x1);
                const double xv = -B / (2 * A);
                if (xv <= x0 || xv >= x2) continue;
                const double fv = sys.solve(xv).residual;
                if ((fv > 0) != (y1 > 0)) {
                    brackets.emplace_back(x0, xv);
                    brackets.emplace_back(xv, x2);
                    if (verbose) std::fprintf(stderr, "close pair near %.6f\n", xv);
                }
            }
            for (auto [a, b] : brackets) {
                const double fa = sys.solve(a).residual, fb = sys.solve(b).residual;
                if ((fa > 0) == (fb > 0)) continue;
                const double R = refine(sys, a, b, fa, fb);
                Found f;
                const bool ok = accept(R, parity, f);
                if (verbose && !ok && f.hecke1 < 1e-2)
                    std::fprintf(stderr, "reject R=%.10f %+d h=%.1e,%.1e cross=%.1e\n", R, parity, f.hecke1, f.hecke2, f.cross);
                if (ok) {
                    out.push_back(f);
                    if (verbose)
                        std::fprintf(stderr, "R=%.12f parity=%+d a2=%+.8f hecke=%.1e,%.1e cross=%.1e\n", f.R, f.parity,
                                     f.a2, f.hecke1, f.hecke2, f.cross);
                }
            }
            block = block_end;
        }
    }
    std::sort(out.begin(), out.end(), [](const Found& a, const Found& b) { return a.R < b.R; });
    // a root exactly on a block boundary can be found twice
    out.erase(std::unique(out.begin(), out.end(),
                          [](const Found& a, const Found& b) {
                              return a.parity == b.parity && std::abs(a.R - b.R) < 1e-8;
                          }),
              out.end());
}

// Trace formula for h(r) = e^{-(r-T)^2} + e^{-(r+T)^2}, g(y) = e^{-y^2/4} cos(Ty)/sqrt(pi).
selberg::testfun::TestFunctionPair window(double T) {
    using namespace selberg;
    testfun::TestFunctionPair p;
    p.kind = testfun::Kind::custom;
    p.h = [T](double r) { return std::exp(-(r - T) * (r - T)) + std::exp(-(r + T) * (r + T)); };
    p.h_imag = [T](double s) { return 2.0 * std::exp(s * s - T * T) * std::cos(2.0 * s * T); };
    p.g = [T](double y) { return std::exp(-0.25 * y * y) * std::cos(T * y) / std::sqrt(numerics::pi); };
    p.g1 = p.g2 = p.g3 = [](double) { return 0.0; };
    p.decay = numerics::Decay::gaussian;
    return p;
}

std::vector<double> read_ordinates(const std::string& path) {
    std::ifstream in(path);
    std::vector<double> r;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        r.push_back(std::stod(line));
    }
    return r;
}

void window_check(const std::string& path, double Tmin, double Tmax, double step) {
    using namespace selberg;
    auto g = group::modular_group();
    auto rs = read_ordinates(path);
    auto classes = group::enumerate_hyperbolic(g, std::exp(13.0));
    group::SpectralDataset empty;
    for (double T = Tmin; T <= Tmax + 1e-9; T += step) {
        auto p = window(T);
        auto b = trace::verify_trace_identity(p, g, empty, classes.classes, std::exp(13.0));
        const double predicted = -b.residual;  // sum over discrete r_j only, lambda_0 included in b
        double have = 0.0;
        for (double r : rs) have += p.h(r);
        std::printf("%.3f %.10f %.10f %+.3e\n", T, predicted, have, predicted - have);
    }
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::fprintf(stderr, "usage: maass_search scan|window|local ...\n");
        return 2;
    }
    const std::string cmd = argv[1];
    if (cmd == "scan" && argc == 5) {
        std::vector<Found> found;
        scan(std::atof(argv[2]), std::atof(argv[3]), 0.1, found, true);
        std::ofstream out(argv[4]);
        out.precision(13);
        for (const auto& f : found)
            out << f.R << ' ' << f.parity << ' ' << f.a2 << ' ' << f.hecke1 << ' ' << f.hecke2 << ' ' << f.cross << '\n';
        return 0;
    }
    if (cmd == "local" && argc == 5) {
        std::vector<Found> found;
        scan(std::atof(argv[2]), std::atof(argv[3]), std::atof(argv[4]), found, true);
        for (const auto& f : found) std::printf("%.13f %+d %.8f\n", f.R, f.parity, f.a2);
        return 0;
    }
    if (cmd == "window" && argc == 6) {
        window_check(argv[2], std::atof(argv[3]), std::atof(argv[4]), std::atof(argv[5]));
        return 0;
    }
    std::fprintf(stderr, "bad arguments\n");
    return 2;
}
