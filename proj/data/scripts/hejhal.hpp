#pragma once

// Hejhal's collocation method for Maass cusp forms on PSL(2,Z).
// f(z) = sum_{n>=1} a_n sqrt(y) K_{iR}(2 pi n y) cs(2 pi n x), cs = cos (even) or sin (odd).
// Points z_m = x_m + iY below the fundamental domain are pulled back to z_m^*;
// invariance f(z_m) = f(z_m^*) gives a linear system in a_1..a_M.

#include <cmath>
#include <numeric>
#include <vector>

#include <Eigen/Dense>

#include "kbessel.hpp"

namespace maass {

constexpr double two_pi = 6.283185307179586476925286766559;

struct Pullback {
    double x, y;
};

inline Pullback pullback(double x, double y) {
    for (int it = 0; it < 1000; ++it) {
        x -= std::round(x);
        const double r2 = x * x + y * y;
        if (r2 >= 1.0 - 1e-15) break;
        x = -x / r2;
        y = y / r2;
    }
    return {x, y};
}

inline int truncation_M(double R, double Y) {
    const double need = R + 14.0 * std::cbrt(0.5 * R) + 12.0;
    return std::max(12, static_cast<int>(std::ceil(need / (two_pi * Y))));
}

struct HejhalResult {
    double residual = 0.0;        // dropped n = 1 equation with a_1 = 1
    Eigen::VectorXd coefficients; // a_1..a_M
};

class HejhalSystem {
public:
    HejhalSystem(int parity, double Y, int M) : parity_(parity), Y_(Y), M_(M), Q_(M + 10) {
        xm_.resize(Q_);
        star_.resize(Q_);
        for (int m = 0; m < Q_; ++m) {
            xm_[m] = (m + 0.5) / (2.0 * Q_);
            star_[m] = pullback(xm_[m], Y_);
        }
        // argument list: diagonal heights then pulled-back heights
        for (int n = 1; n <= M_; ++n) args_.push_back(two_pi * n * Y_);
        for (int m = 0; m < Q_; ++m)
            for (int l = 1; l <= M_; ++l) args_.push_back(two_pi * l * star_[m].y);
        order_.resize(args_.size());
        std::iota(order_.begin(), order_.end(), 0);
        std::sort(order_.begin(), order_.end(), [&](std::size_t a, std::size_t b) { return args_[a] < args_[b]; });
        sorted_.resize(args_.size());
        for (std::size_t i = 0; i < order_.size(); ++i) sorted_[i] = args_[order_[i]];
        cs_n_.resize(M_, Q_);
        cs_l_.resize(Q_, M_);
        for (int m = 0; m < Q_; ++m) {
            for (int n = 1; n <= M_; ++n) {
                cs_n_(n - 1, m) = parity_ > 0 ? std::cos(two_pi * n * xm_[m]) : std::sin(two_pi * n * xm_[m]);
                cs_l_(m, n - 1) = parity_ > 0 ? std::cos(two_pi * n * star_[m].x) : std::sin(two_pi * n * star_[m].x);
            }
        }
    }

    int M() const { return M_; }

    Eigen::MatrixXd matrix(double R) const {
        auto ks = kbessel_scaled(R, sorted_);
        std::vector<double> k(args_.size());
        for (std::size_t i = 0; i < order_.size(); ++i) k[order_[i]] = ks[i];
        // B(m, l) = sqrt(y*_m) K(2 pi l y*_m) cs(2 pi l x*_m)
        Eigen::MatrixXd B(Q_, M_);
        for (int m = 0; m < Q_; ++m) {
            const double sy = std::sqrt(star_[m].y);
            for (int l = 0; l < M_; ++l) B(m, l) = sy * k[M_ + m * M_ + l] * cs_l_(m, l);
        }
        Eigen::MatrixXd V = (2.0 / Q_) * (cs_n_ * B);
        const double sY = std::sqrt(Y_);
        for (int n = 0; n < M_; ++n) V(n, n) -= sY * k[n];
        return V;
    }

    HejhalResult solve(double R) const {
        Eigen::MatrixXd V = matrix(R);
        // row scaling keeps rows comparable
        for (int n = 0; n < M_; ++n) {
            const double s = V.row(n).cwiseAbs().maxCoeff();
            if (s > 0) V.row(n) /= s;
        }
        const int m = M_ - 1;
        Eigen::MatrixXd A = V.block(1, 1, m, m);
        Eigen::VectorXd rhs = -V.block(1, 0, m, 1);
        Eigen::VectorXd a = A.partialPivLu().solve(rhs);
        HejhalResult out;
        out.coefficients.resize(M_);
        out.coefficients(0) = 1.0;
        out.coefficients.tail(m) = a;
        out.residual = V.row(0).dot(out.coefficients);
        return out;
    }

private:
    int parity_;
    double Y_;
    int M_, Q_;
    std::vector<double> xm_;
    std::vector<Pullback> star_;
    std::vector<double> args_, sorted_;
    std::vector<std::size_t> order_;
    Eigen::MatrixXd cs_n_, cs_l_;
};

}  // namespace maass
