// Extended-precision pieces of the small-t analysis. The t^{5/2} ln(1/t)
// component sits about twelve orders below the leading terms at t ~ 1e-3 and
// is nearly collinear with its neighbours in the ladder, so separating it takes
// roughly 26 significant digits in the data; double precision cannot do it.

#include <algorithm>
#include <cmath>
#include <string>

#include <boost/math/constants/constants.hpp>
#include <boost/math/special_functions/erf.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Dense>

#include "asymptotics_internal.hpp"
#include "selberg/asymptotics.hpp"

namespace selberg::asymptotics {

namespace {

using Real = boost::multiprecision::cpp_bin_float_50;

// int_0^s ln v e^{-v^2} dv by termwise integration of the exponential series
template <class T>
T log_gauss_integral(T s) {
    using std::log;
    const T ls = log(s), s2 = s * s;
    T power = s, fact = 1, sum = 0;
    const T eps = std::numeric_limits<T>::epsilon();
    for (int k = 0; k < 400; ++k) {
        if (k > 0) {
            power *= s2;
            fact *= k;
        }
        const T m = 2 * k + 1;
        const T term = power / fact * (ls / m - 1 / (m * m));
        sum += (k % 2 ? -term : term);
        if (k > 2 && abs(term) < eps * abs(sum)) break;
    }
    return sum;
}

template <class T>
T closed_I(T t, T p) {
    using std::exp;
    using std::log;
    using std::sqrt;
    namespace c = boost::math::constants;
    const T x = t * p * p, s = sqrt(x);
    const T psi_half = -c::euler<T>() - 2 * c::ln_two<T>();
    const T sq = c::root_pi<T>();
    const T K = sq * psi_half - 4 * log_gauss_integral(s);
    return sq * exp(x) / (2 * p) * ((psi_half / 2 + log(p)) * sq * boost::math::erfc(s) - K / 2);
}

struct Column {
    std::string name;
    double power;
    bool log;
};

// integer and half-integer powers up to top, logarithmic companions from t^1 on
std::vector<Column> ladder(double top) {
    std::vector<Column> out;
    for (double k = 0.0; k <= top + 1e-9; k += 0.5) {
        const std::string base = k == 0.0 ? "1" : k == 1.0 ? "t" : "t^" + detail::power_label(k);
        out.push_back({base, k, false});
        if (k >= 1.0) out.push_back({base + " ln", k, true});
    }
    return out;
}

struct ExtendedFit {
    LinearFit fit;
    double log52 = 0.0, log52_sigma = 0.0;
};

ExtendedFit solve(const std::vector<Real>& ts, const std::vector<Real>& lhs, const std::vector<Real>& y, double top) {
    using Matrix = Eigen::Matrix<Real, Eigen::Dynamic, Eigen::Dynamic>;
    using Vector = Eigen::Matrix<Real, Eigen::Dynamic, 1>;
    const auto cols = ladder(top);
    const auto m = static_cast<Eigen::Index>(ts.size());
    const auto k = static_cast<Eigen::Index>(cols.size()) + 1;
    Matrix A(m, k);
    Vector b(m);
    for (Eigen::Index i = 0; i < m; ++i) {
        const Real t = ts[i], L = log(1 / t);
        A(i, 0) = lhs[i];
        for (Eigen::Index j = 1; j < k; ++j) {
            const auto& c = cols[j - 1];
            A(i, j) = pow(t, Real(c.power)) * (c.log ? L : Real(1));
        }
        b(i) = y[i];
    }
    Vector scale(k);
    for (Eigen::Index j = 0; j < k; ++j) {
        scale(j) = A.col(j).norm();
        A.col(j) /= scale(j);
    }
    Eigen::JacobiSVD<Matrix> svd(A, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const Vector c = svd.solve(b);
    const Vector res = b - A * c;
    const Real sigma2 = res.squaredNorm() / Real(m - k);
    const auto& sv = svd.singularValues();
    const Matrix V = svd.matrixV();

    ExtendedFit out;
    out.fit.basis.push_back("discrete sum");
    for (const auto& col : cols) out.fit.basis.push_back(col.name);
    out.fit.condition = static_cast<double>(sv(0) / sv(k - 1));
    out.fit.rms_residual = static_cast<double>(sqrt(res.squaredNorm() / Real(m)));
    for (Eigen::Index j = 0; j < k; ++j) {
        Real var = 0;
        for (Eigen::Index l = 0; l < k; ++l) var += V(j, l) * V(j, l) / (sv(l) * sv(l));
        out.fit.coefficients.push_back(static_cast<double>(c(j) / scale(j)));
        out.fit.std_errors.push_back(static_cast<double>(sqrt(sigma2 * var) / scale(j)));
    }
    const auto idx = static_cast<std::size_t>(
        std::find(out.fit.basis.begin(), out.fit.basis.end(), "t^5/2 ln") - out.fit.basis.begin());
    out.log52 = out.fit.coefficients[idx];
    out.log52_sigma = out.fit.std_errors[idx];
    return out;
}

}  // namespace

double integral_I_closed(double t, double p) {
    if (!(t > 0.0) || !(p > 0.0)) throw DomainError("integral_I_closed needs t > 0 and p > 0");
    if (t * p * p > 30.0) throw DomainError("integral_I_closed: series loses accuracy for t p^2 > 30");
    return static_cast<double>(closed_I(Real(t), Real(p)));
}

namespace detail {

std::string power_label(double k) {
    const int twice = static_cast<int>(std::lround(2.0 * k));
    return twice % 2 ? std::to_string(twice) + "/2" : std::to_string(twice / 2);
}

void extended_ladder_fit(const SpectralDataset& data, const GroupDescriptor& g, const std::vector<double>& ts,
                         DifferenceTable& out) {
    const Real p1 = out.p1, p2 = out.p2, P1 = p1 * p1, P2 = p2 * p2;
    const Real weyl = Real(g.area) / (4 * boost::math::constants::pi<Real>());
    const Real n = g.cusp_count;
    std::vector<Real> q;
    for (double v : discrete_r2(data)) q.push_back(v);
    std::vector<Real> T, lhs, y;
    for (double tv : ts) {
        const Real t = tv, e1 = exp(t * P1), e2 = exp(t * P2), D = P1 * e1 - P2 * e2;
        Real sum = 0, S = 0;
        for (const Real& v : q) sum += exp(-t * v) / ((v + P1) * (v + P2));
        for (const auto& r : data.resonances) {
            const Real gm = r.gamma;
            S += exp(-t * gm * gm) / pow(gm, 4);
        }
        const Real l = (P2 - P1) / D * sum;
        const Real log_term = (e1 - e2) / D * weyl * log(1 / t);
        const Real I_term = -n / boost::math::constants::pi<Real>() * (closed_I(t, p1) - closed_I(t, p2)) / D;
        T.push_back(t);
        lhs.push_back(l);
        y.push_back(l - S - log_term - I_term);
    }
    // ladder to t^{9/2}; a second fit to t^{11/2} measures truncation
    auto main = solve(T, lhs, y, 4.5);
    auto wide = solve(T, lhs, y, 5.5);
    out.ladder_fit = main.fit;
    out.log52_coefficient = main.log52;
    out.log52_truncation_shift = std::abs(wide.log52 - main.log52);
    out.log52_sigma = std::max(main.log52_sigma, out.log52_truncation_shift);
}

}  // namespace detail

}  // namespace selberg::asymptotics
