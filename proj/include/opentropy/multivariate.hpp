#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "opentropy/basis.hpp"

namespace opentropy {

// Point of the canonical triangle x >= 0, y >= 0, x + y <= 1.
struct SimplexPoint {
    double x = 0.0;
    double y = 0.0;

    SimplexPoint() = default;
    SimplexPoint(double x_, double y_) : x(x_), y(y_) {
        if (!(x >= 0.0 && y >= 0.0 && x + y <= 1.0 + 1e-15))
            throw std::domain_error("SimplexPoint: (x,y) outside the canonical simplex");
    }
    double slack() const { return 1.0 - x - y; }
};

// R_n(x,y) = sum_{i+j<=n} (n! / (i! j! (n-i-j)!))^2 x^{2i} y^{2j} (1-x-y)^{2(n-i-j)}.
inline double r_n(int n, const SimplexPoint& p) {
    if (n < 1) throw std::domain_error("r_n: n must be >= 1");
    const double z = p.slack() < 0.0 ? 0.0 : p.slack();
    double sum = 0.0;
    for (int j = 0; j <= n; ++j) {
        const double cj = detail::binomial(n, j);
        for (int i = 0; i <= n - j; ++i) {
            const double m = cj * detail::binomial(n - j, i);  // multinomial n!/(i! j! (n-i-j)!)
            const double term = m * std::pow(p.x, i) * std::pow(p.y, j) * std::pow(z, n - i - j);
            sum += term * term;
        }
    }
    return sum;
}

// Univariate reduction for fixed y < 1:
//   R_n(x,y) = sum_j C(n,j)^2 y^{2j} (1-y)^{2(n-j)} F_{n-j}(x/(1-y)).
inline double r_n_reduction(int n, const SimplexPoint& p) {
    if (n < 1) throw std::domain_error("r_n_reduction: n must be >= 1");
    if (!(p.y < 1.0)) throw std::domain_error("r_n_reduction: y must be < 1");
    const double u = p.x / (1.0 - p.y);
    double sum = 0.0;
    for (int j = 0; j <= n; ++j) {
        const double w = detail::binomial(n, j) * std::pow(p.y, j) * std::pow(1.0 - p.y, n - j);
        const double f = n - j == 0 ? 1.0 : s_series(OperatorParams(n - j, -1.0), std::min(u, 1.0));
        sum += w * w * f;
    }
    return sum;
}

// Q_n(x,y) = F_n(x) F_n(y) on the unit square.
inline double q_n(int n, double x, double y) {
    if (!(x >= 0.0 && x <= 1.0 && y >= 0.0 && y <= 1.0))
        throw std::domain_error("q_n: (x,y) outside the unit square");
    const OperatorParams p(n, -1.0);
    return s_series(p, x) * s_series(p, y);
}

// Q_n as the expanded double sum, used only to cross-check the product form.
inline double q_n_double_sum(int n, double x, double y) {
    double sum = 0.0;
    for (int i = 0; i <= n; ++i) {
        const double bi = detail::binomial(n, i) * std::pow(x, i) * std::pow(1.0 - x, n - i);
        for (int j = 0; j <= n; ++j) {
            const double bj = detail::binomial(n, j) * std::pow(y, j) * std::pow(1.0 - y, n - j);
            sum += bi * bi * bj * bj;
        }
    }
    return sum;
}

// One negative second difference found by a grid scan.
struct ConvexityViolation {
    int n = 0;
    std::string direction;
    double x = 0.0;
    double y = 0.0;
    double second_difference = 0.0;
};

// Checks second differences of R_n along every grid segment parallel to Ox,
// Oy and the hypotenuse. Segments shorter than three points are skipped.
inline std::vector<ConvexityViolation> axial_convexity_scan(int n, double step, double tol = 1e-9) {
    if (!(step > 0.0 && step <= 0.125 + 1e-15))
        throw std::domain_error("axial_convexity_scan: step must lie in (0, 1/8]");
    const int m = static_cast<int>(std::lround(1.0 / step));
    std::vector<ConvexityViolation> out;
    auto value = [&](int i, int j) { return r_n(n, SimplexPoint(i * step, j * step)); };
    auto record = [&](const char* dir, int i, int j, double d2) {
        if (d2 < -tol) out.push_back({n, dir, i * step, j * step, d2});
    };
    // parallel to Ox: fixed j, i in [0, m-j]
    for (int j = 0; j <= m; ++j)
        for (int i = 1; i + j + 1 <= m; ++i)
            record("Ox", i, j, value(i - 1, j) - 2.0 * value(i, j) + value(i + 1, j));
    // parallel to Oy: fixed i, j in [0, m-i]
    for (int i = 0; i <= m; ++i)
        for (int j = 1; j + i + 1 <= m; ++j)
            record("Oy", i, j, value(i, j - 1) - 2.0 * value(i, j) + value(i, j + 1));
    // parallel to the hypotenuse: direction (1,-1), fixed i+j
    for (int s = 1; s <= m; ++s)
        for (int i = 1; i + 1 <= s; ++i)
            record("hyp", i, s - i, value(i - 1, s - i + 1) - 2.0 * value(i, s - i) + value(i + 1, s - i - 1));
    return out;
}

// Grid verdicts of the three equivalent convexity statements:
//   i)   log F_n convex on [0,1]
//   ii)  Q_n convex on [0,1]^2 (discrete Hessian PSD at interior points)
//   iii) log Q_n convex on [0,1]^2 (second differences along grid directions)
struct EquivalenceReport {
    int n = 0;
    bool log_f_convex = true;
    bool q_convex = true;
    bool log_q_convex = true;
    bool consistent() const { return log_f_convex == q_convex && q_convex == log_q_convex; }
};

inline EquivalenceReport equivalence_check(int n, double step, double tol = 1e-7) {
    if (!(step > 0.0 && step <= 0.0625 + 1e-15))
        throw std::domain_error("equivalence_check: step must lie in (0, 1/16]");
    const int m = static_cast<int>(std::lround(1.0 / step));
    const OperatorParams p(n, -1.0);
    EquivalenceReport rep;
    rep.n = n;

    std::vector<double> logf(static_cast<size_t>(m) + 1);
    for (int i = 0; i <= m; ++i) logf[static_cast<size_t>(i)] = std::log(s_series(p, i * step));
    for (int i = 1; i < m; ++i)
        if (logf[i - 1] - 2.0 * logf[i] + logf[i + 1] < -tol) rep.log_f_convex = false;

    // ii) finite-difference Hessian of Q_n; second differences lose about
    // half the significant digits, hence the looser -1e-7 style threshold.
    const double h = 1e-4;
    auto q = [&](double x, double y) { return q_n(n, x, y); };
    for (int i = 1; i < m; ++i) {
        for (int j = 1; j < m; ++j) {
            const double x = i * step, y = j * step;
            const double qxx = (q(x + h, y) - 2.0 * q(x, y) + q(x - h, y)) / (h * h);
            const double qyy = (q(x, y + h) - 2.0 * q(x, y) + q(x, y - h)) / (h * h);
            const double qxy =
                (q(x + h, y + h) - q(x + h, y - h) - q(x - h, y + h) + q(x - h, y - h)) / (4.0 * h * h);
            if (qxx < -tol || qyy < -tol || qxx * qyy - qxy * qxy < -tol) rep.q_convex = false;
        }
    }

    // iii) second differences of log Q_n along the four grid directions
    auto lq = [&](int i, int j) { return logf[static_cast<size_t>(i)] + logf[static_cast<size_t>(j)]; };
    for (int i = 1; i < m; ++i) {
        for (int j = 0; j <= m; ++j) {
            if (lq(i - 1, j) - 2.0 * lq(i, j) + lq(i + 1, j) < -tol) rep.log_q_convex = false;  // x-dir
            if (lq(j, i - 1) - 2.0 * lq(j, i) + lq(j, i + 1) < -tol) rep.log_q_convex = false;  // y-dir
        }
        for (int j = 1; j < m; ++j) {
            if (lq(i - 1, j - 1) - 2.0 * lq(i, j) + lq(i + 1, j + 1) < -tol) rep.log_q_convex = false;
            if (lq(i - 1, j + 1) - 2.0 * lq(i, j) + lq(i + 1, j - 1) < -tol) rep.log_q_convex = false;
        }
    }
    return rep;
}

}  // namespace opentropy
