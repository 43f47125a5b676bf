#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include <Eigen/Dense>

#include "asymptotics_internal.hpp"
#include "selberg/asymptotics.hpp"
#include "selberg/quadrature.hpp"
#include "selberg/special.hpp"

namespace selberg::asymptotics {

using numerics::pi;

namespace {

constexpr double euler_gamma = 0.57721566490153286060651209008240243;

double factorial(int n) {
    double f = 1.0;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

// the discrete data must be complete, and the loaded resonances must reach far enough
bool complete_for(const SpectralDataset& data, double t) {
    const double R = data.completeness_bound;
    if (!(std::exp(-t * R * R) < 1e-12)) return false;
    if (data.resonances.empty()) return true;
    const double G = std::max(data.resonance_bound, data.resonances.back().gamma);
    return std::exp(-t * G * G) < 1e-12;
}

double sum_small_first(std::vector<double> v) {
    std::sort(v.begin(), v.end(), [](double a, double b) { return std::abs(a) < std::abs(b); });
    double s = 0.0;
    for (double x : v) s += x;
    return s;
}

}  // namespace

namespace detail {

std::vector<double> discrete_r2(const SpectralDataset& data) {
    std::vector<double> out;
    for (double lam : data.exceptional) out.push_back(lam - 0.25);
    for (std::size_t i = 0; i < data.discrete_r.size(); ++i)
        for (int k = 0; k < data.multiplicity[i]; ++k) out.push_back(data.discrete_r[i] * data.discrete_r[i]);
    return out;
}

}  // namespace detail

IntegralValue integral_I(double t, double p) {
    if (!(t > 0.0) || !(p > 0.0)) throw DomainError("integral_I needs t > 0 and p > 0");
    auto f = [t, p](double r) { return r > 0.0 ? std::exp(-t * r * r) * std::log(r) / (r * r + p * p) : 0.0; };
    numerics::QuadratureOptions opt{1e-15, 1e-14, 4000};
    auto head = numerics::integrate(f, 0.0, 1.0, opt);
    auto tail = numerics::integrate_semi_infinite(f, 1.0, numerics::Decay::gaussian, 1e-15, 8000);
    return {head.value + tail.value, head.error_estimate + tail.error_estimate};
}

double coefficient_d(int n) {
    double s = 0.0;
    for (int k = 0; k <= n; ++k) s += (k % 2 ? -1.0 : 1.0) / (factorial(k) * factorial(n - k) * (k + 0.5));
    return -0.25 * std::sqrt(pi) * s;
}

double coefficient_d_prime(int n) {
    const double half_psi = 0.5 * (-euler_gamma - 2.0 * std::log(2.0));
    double s = 0.0;
    for (int k = 0; k <= n; ++k)
        s += (k % 2 ? -1.0 : 1.0) / (factorial(k) * factorial(n - k) * (k + 0.5)) * (half_psi + 1.0 / (2 * k + 1));
    return -0.5 * std::sqrt(pi) * s;
}

double expansion_I(double t, double p, int orders, Warnings* warnings) {
    if (orders < 0 || orders > 4) throw DomainError("expansion_I supports orders 0..4");
    if (!(t > 0.0) || !(p > 0.0)) throw DomainError("expansion_I needs t > 0 and p > 0");
    if (t * p * p >= 1.0 && warnings)
        warnings->push_back({WarningKind::range, "expansion of I used with t p^2 >= 1"});
    const double L = std::log(1.0 / t);
    double s = 0.0;
    for (int n = 0; n <= orders; ++n) {
        const double p2n = std::pow(p, 2 * n);
        s += 0.5 * pi * std::log(p) * std::pow(p, 2 * n - 1) / factorial(n) * std::pow(t, n);
        s += p2n * std::pow(t, n + 0.5) * (coefficient_d_prime(n) + L * coefficient_d(n));
    }
    return s;
}

ExpansionCoefficientFit fit_expansion_coefficients(double t_lo, double t_hi, int count, int orders) {
    if (!(t_lo > 0.0) || !(t_hi > t_lo) || orders < 1 || count <= 2 * orders)
        throw DomainError("fit_expansion_coefficients: bad range, count or order");
    std::vector<std::string> names;
    std::vector<std::vector<double>> cols(2 * orders);
    std::vector<double> y;
    for (int i = 0; i < count; ++i) {
        const double t = t_lo * std::pow(t_hi / t_lo, i / (count - 1.0));
        y.push_back(integral_I(t, 1.0).value);
        for (int k = 0; k < orders; ++k) {
            cols[2 * k].push_back(std::pow(t, k + 0.5));
            cols[2 * k + 1].push_back(std::pow(t, k + 0.5) * std::log(1.0 / t));
        }
    }
    for (int k = 0; k < orders; ++k) {
        names.push_back("d'" + std::to_string(k));
        names.push_back("d" + std::to_string(k));
    }
    ExpansionCoefficientFit out;
    out.fit = least_squares(names, cols, y);
    for (int k = 0; k < orders; ++k) {
        out.d_prime.push_back(out.fit.coefficients[2 * k]);
        out.d_prime_sigma.push_back(out.fit.std_errors[2 * k]);
        out.d.push_back(out.fit.coefficients[2 * k + 1]);
        out.d_sigma.push_back(out.fit.std_errors[2 * k + 1]);
    }
    return out;
}

double resonance_S(const SpectralDataset& data, double t) {
    std::vector<double> v;
    for (const auto& r : data.resonances) v.push_back(std::exp(-t * r.gamma * r.gamma) / std::pow(r.gamma, 4));
    return sum_small_first(std::move(v));
}

LinearFit least_squares(const std::vector<std::string>& names, const std::vector<std::vector<double>>& columns,
                        const std::vector<double>& y, Warnings* warnings) {
    const auto m = static_cast<Eigen::Index>(y.size());
    const auto k = static_cast<Eigen::Index>(columns.size());
    if (m <= k) throw DomainError("least squares needs more rows than basis functions");
    Eigen::MatrixXd A(m, k);
    Eigen::VectorXd b(m);
    for (Eigen::Index i = 0; i < m; ++i) {
        b(i) = y[i];
        for (Eigen::Index j = 0; j < k; ++j) A(i, j) = columns[j][i];
    }
    Eigen::VectorXd scale(k);
    for (Eigen::Index j = 0; j < k; ++j) {
        scale(j) = A.col(j).norm();
        if (scale(j) == 0.0) scale(j) = 1.0;
        A.col(j) /= scale(j);
    }
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(A, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const Eigen::VectorXd c = svd.solve(b);
    const auto& sv = svd.singularValues();
    LinearFit out;
    out.basis = names;
    out.condition = sv(k - 1) > 0 ? sv(0) / sv(k - 1) : std::numeric_limits<double>::infinity();
    const Eigen::VectorXd res = b - A * c;
    const double rss = res.squaredNorm();
    out.rms_residual = std::sqrt(rss / static_cast<double>(m));
    const double sigma2 = rss / static_cast<double>(m - k);
    // (A^T A)^{-1} = V S^{-2} V^T
    const Eigen::MatrixXd V = svd.matrixV();
    Eigen::VectorXd inv_s2 = sv.cwiseInverse().cwiseAbs2();
    for (Eigen::Index j = 0; j < k; ++j) {
        const double var = sigma2 * (V.row(j).cwiseAbs2().dot(inv_s2));
        out.coefficients.push_back(c(j) / scale(j));
        out.std_errors.push_back(std::sqrt(var) / scale(j));
    }
    if (warnings && !(out.condition < 1e12))
        warnings->push_back({WarningKind::fit, "least-squares design is poorly conditioned (" +
                                                   std::to_string(out.condition) + ")"});
    return out;
}

AsymptoticScan eq62_scan(const SpectralDataset& data, const GroupDescriptor& g, const std::vector<double>& t_grid,
                         const std::vector<double>& p_values) {
    for (double p : p_values)
        if (!(p > 0.5)) throw DomainError("eq62_scan needs p > 1/2");
    AsymptoticScan out;
    out.t_grid = t_grid;
    out.p_values = p_values;
    const std::size_t nt = t_grid.size(), np = p_values.size();
    out.lhs.assign(nt, std::vector<double>(np, 0.0));
    out.known_terms = out.remainder = out.lhs;
    out.skipped.assign(nt, std::vector<bool>(np, false));
    const auto r2 = detail::discrete_r2(data);
    const double weyl = g.area / (4.0 * pi);

    for (std::size_t i = 0; i < nt; ++i) {
        const double t = t_grid[i];
        if (!complete_for(data, t)) {
            for (std::size_t j = 0; j < np; ++j) out.skipped[i][j] = true;
            out.warnings.push_back({WarningKind::truncation, "t = " + std::to_string(t) +
                                                                 ": eigenvalue data not complete enough, cell skipped"});
            continue;
        }
        std::vector<double> res_terms;
        for (const auto& r : data.resonances) res_terms.push_back(std::exp(-t * r.gamma * r.gamma) / (r.gamma * r.gamma));
        const double res_sum = sum_small_first(res_terms);
        const double S = resonance_S(data, t);
        for (std::size_t j = 0; j < np; ++j) {
            const double p = p_values[j];
            std::vector<double> terms;
            for (double q : r2) terms.push_back(std::exp(-t * q) / (q + p * p));
            const double lhs = sum_small_first(terms) + res_sum;
            const double e = std::exp(t * p * p);
            const double known = weyl * e * std::log(1.0 / t) - g.cusp_count / pi * integral_I(t, p).value + p * p * e * S;
            out.lhs[i][j] = lhs;
            out.known_terms[i][j] = known;
            out.remainder[i][j] = lhs - known;
            out.max_abs_remainder = std::max(out.max_abs_remainder, std::abs(lhs - known));
        }
    }

    // e^{-tp^2} B against C0 + C1 sqrt t, per p
    for (std::size_t j = 0; j < np; ++j) {
        std::vector<double> one, st, y;
        for (std::size_t i = 0; i < nt; ++i) {
            if (out.skipped[i][j]) continue;
            const double t = t_grid[i];
            one.push_back(1.0);
            st.push_back(std::sqrt(t));
            y.push_back(out.remainder[i][j] * std::exp(-t * p_values[j] * p_values[j]));
        }
        if (y.size() < 3) continue;
        auto fit = least_squares({"1", "sqrt_t"}, {one, st}, y, &out.warnings);
        const std::string tag = "p=" + std::to_string(p_values[j]);
        out.fitted_coefficients["C0(" + tag + ")"] = fit.coefficients[0];
        out.fitted_coefficients["C1(" + tag + ")"] = fit.coefficients[1];
        const auto [lo, hi] = std::minmax_element(y.begin(), y.end());
        double worst = 0.0;
        for (std::size_t i = 0; i < y.size(); ++i)
            worst = std::max(worst, std::abs(y[i] - fit.coefficients[0] - fit.coefficients[1] * st[i]));
        const double range = *hi - *lo;
        out.worst_fit_fraction = std::max(out.worst_fit_fraction, range > 0 ? worst / range : 0.0);
    }
    return out;
}

DifferenceTable eq643_difference(const SpectralDataset& data, const GroupDescriptor& g,
                                 const std::vector<double>& t_grid, double p1, double p2) {
    if (!(p2 > p1) || !(p1 > 0.5)) throw DomainError("eq643_difference needs p2 > p1 > 1/2");
    DifferenceTable out;
    out.p1 = p1;
    out.p2 = p2;
    auto scan = eq62_scan(data, g, t_grid, {p1, p2});
    out.warnings = scan.warnings;
    const auto r2 = detail::discrete_r2(data);
    const double weyl = g.area / (4.0 * pi);
    const double n = g.cusp_count;

    std::vector<double> ts;
    for (std::size_t i = 0; i < t_grid.size(); ++i) {
        if (scan.skipped[i][0]) continue;
        const double t = t_grid[i];
        const double e1 = std::exp(t * p1 * p1), e2 = std::exp(t * p2 * p2);
        const double D = p1 * p1 * e1 - p2 * p2 * e2;
        std::vector<double> terms;
        for (double q : r2) terms.push_back(std::exp(-t * q) / ((q + p1 * p1) * (q + p2 * p2)));
        DifferenceRow row;
        row.t = t;
        row.lhs = (p2 * p2 - p1 * p1) / D * sum_small_first(terms);
        row.S = resonance_S(data, t);
        row.log_term = (e1 - e2) / D * weyl * std::log(1.0 / t);
        row.I_term = -n / pi * (integral_I(t, p1).value - integral_I(t, p2).value) / D;
        row.B_term = (scan.remainder[i][0] - scan.remainder[i][1]) / D;
        row.rhs = row.S + row.log_term + row.I_term + row.B_term;
        row.gap = row.lhs - row.rhs;
        row.implied_B = row.lhs - row.S - row.log_term - row.I_term;
        out.max_gap = std::max(out.max_gap, std::abs(row.gap));
        out.rows.push_back(row);
        ts.push_back(t);
    }

    out.log52_predicted = n / pi * (p1 * p1 + p2 * p2) * (coefficient_d(2) - coefficient_d(1));
    const bool small_t = !ts.empty() && ts.back() * p2 * p2 <= 0.01;
    if (ts.size() >= 30 && small_t)
        detail::extended_ladder_fit(data, g, ts, out);
    else
        out.warnings.push_back({WarningKind::fit, "ladder fit skipped: needs at least 30 complete rows with t p2^2 <= 0.01"});
    return out;
}

HeatTraceFit eq646_heat_trace(const SpectralDataset& data, const GroupDescriptor& g,
                              const std::vector<double>& t_grid, bool include_resonances) {
    (void)g;
    HeatTraceFit out;
    const auto r2 = detail::discrete_r2(data);
    std::vector<std::vector<double>> cols(5);
    std::vector<double> y;
    for (double t : t_grid) {
        if (!complete_for(data, t)) {
            out.warnings.push_back({WarningKind::truncation, "t = " + std::to_string(t) + " skipped: data incomplete"});
            continue;
        }
        std::vector<double> terms;
        for (double q : r2) terms.push_back(std::exp(-t * q));
        if (include_resonances)
            for (const auto& r : data.resonances) terms.push_back(std::exp(-t * r.gamma * r.gamma));
        const double v = sum_small_first(terms);
        out.t_grid.push_back(t);
        out.lhs.push_back(v);
        y.push_back(v);
        const double st = std::sqrt(t);
        cols[0].push_back(1.0 / t);
        cols[1].push_back(std::log(t) / st);
        cols[2].push_back(1.0 / st);
        cols[3].push_back(1.0);
        cols[4].push_back(st);
    }
    out.fit = least_squares({"1/t", "ln t/sqrt t", "1/sqrt t", "1", "sqrt t"}, cols, y, &out.warnings);
    out.a_inv_t = out.fit.coefficients[0];
    out.a_logsqrt = out.fit.coefficients[1];
    out.a_invsqrt = out.fit.coefficients[2];
    out.a_const = out.fit.coefficients[3];
    out.a_sqrt = out.fit.coefficients[4];
    return out;
}

SpectralDataset finite_spectrum(const SpectralDataset& data, std::size_t n) {
    if (n > data.discrete_r.size()) throw DomainError("finite_spectrum: dataset has fewer ordinates than requested");
    auto d = data.truncated(n, false);
    d.completeness_bound = std::numeric_limits<double>::infinity();
    return d;
}

std::vector<double> default_t_grid() {
    std::vector<double> v;
    for (int i = 0; i < 25; ++i) v.push_back(0.02 * std::pow(25.0, i / 24.0));
    return v;
}

}  // namespace selberg::asymptotics
