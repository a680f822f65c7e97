#pragma once

#include <array>
#include <cmath>
#include <stdexcept>

#include "opentropy/quadrature.hpp"

namespace opentropy {

// S and its first two x-derivatives at one point, plus the logarithmic
// derivative A = S'/S and the log-convexity margin (log S)''.
struct SDerivatives {
    double x = 0.0;
    double S = 1.0;
    double dS = 0.0;
    double d2S = 0.0;

    double A() const { return dS / S; }
    double logconv_margin() const { return (d2S * S - dS * dS) / (S * S); }
};

// Exact derivatives of F_n = sum_k B_k^2 for the Bernstein case, from the
// polynomial derivatives of B_k = C(n,k) x^k (1-x)^{n-k}.
inline SDerivatives bernstein_derivatives_exact(int n, double x) {
    const OperatorParams p(n, -1.0);
    p.require_in_domain(x);
    SDerivatives out;
    out.x = x;
    double S = 0.0, dS = 0.0, d2S = 0.0;
    for (int k = 0; k <= n; ++k) {
        const double c = detail::binomial(n, k);
        const int m = n - k;
        // powers with the 0^0 = 1 convention; negative exponents never
        // carry a nonzero coefficient below
        auto xp = [&](int e) { return e == 0 ? 1.0 : std::pow(x, e); };
        auto yp = [&](int e) { return e == 0 ? 1.0 : std::pow(1.0 - x, e); };
        const double b = c * xp(k) * yp(m);
        double db = 0.0;
        if (k >= 1) db += c * k * xp(k - 1) * yp(m);
        if (m >= 1) db -= c * m * xp(k) * yp(m - 1);
        double d2b = 0.0;
        if (k >= 2) d2b += c * k * (k - 1.0) * xp(k - 2) * yp(m);
        if (k >= 1 && m >= 1) d2b -= 2.0 * c * k * m * xp(k - 1) * yp(m - 1);
        if (m >= 2) d2b += c * m * (m - 1.0) * xp(k) * yp(m - 2);
        S += b * b;
        dS += 2.0 * b * db;
        d2S += 2.0 * (db * db + b * d2b);
    }
    out.S = S;
    out.dS = dS;
    out.d2S = d2S;
    return out;
}

// S, S', S'' by differentiating the trigonometric integrand under the
// integral sign; all three integrals share the same panels and converge
// together.
inline SDerivatives s_derivatives(const OperatorParams& p, double x, const QuadratureSpec& spec = {}) {
    p.require_in_domain(x);
    constexpr double pi = std::numbers::pi;
    std::array<double, 3> v{};
    if (p.c == 0.0) {
        const double n = p.n;
        v = detail::integrate_adaptive<3>(
            [&](double phi) -> std::array<double, 3> {
                const double s = std::sin(0.5 * phi);
                const double sig = s * s;
                const double g = std::exp(-4.0 * n * x * sig);
                return {g, -4.0 * n * sig * g, 16.0 * n * n * sig * sig * g};
            },
            0.0, pi, spec);
    } else {
        const double n = p.n, c = p.c;
        const double X = x * (1.0 + c * x);
        const double Xp = 1.0 + 2.0 * c * x;
        const double expo = -n / c;
        v = detail::integrate_adaptive<3>(
            [&](double phi) -> std::array<double, 3> {
                const double s = std::sin(0.5 * phi);
                const double sig = s * s;
                const double w = 1.0 + 4.0 * c * X * sig;
                const double g = std::exp(expo * std::log1p(4.0 * c * X * sig));
                const double dg = -4.0 * n * sig * Xp * g / w;
                const double d2g = -8.0 * n * c * sig * g / w +
                                   16.0 * n * (n + c) * sig * sig * Xp * Xp * g / (w * w);
                return {g, dg, d2g};
            },
            0.0, pi, spec);
    }
    SDerivatives out;
    out.x = x;
    out.S = v[0] / pi;
    out.dS = v[1] / pi;
    out.d2S = v[2] / pi;
    return out;
}

namespace detail {

// Bernstein points use the exact polynomial path, the rest the quadrature
// path; cross-agreement of the two is covered by tests.
inline SDerivatives derivatives_dispatch(const OperatorParams& p, double x, const QuadratureSpec& spec) {
    if (p.bernstein()) return bernstein_derivatives_exact(p.n, x);
    return s_derivatives(p, x, spec);
}

}  // namespace detail

// Normalized residual of XX'S'' + (4(n+c)X + 1)S' + 2nX'S = 0. Degenerate
// points where every term vanishes (Bernstein x = 1/2) report 0.
inline double ode_residual(const OperatorParams& p, double x, const QuadratureSpec& spec = {}) {
    const SDerivatives d = detail::derivatives_dispatch(p, x, spec);
    const double X = x * (1.0 + p.c * x);
    const double Xp = 1.0 + 2.0 * p.c * x;
    const double t1 = X * Xp * d.d2S;
    const double t2 = (4.0 * (p.n + p.c) * X + 1.0) * d.dS;
    const double t3 = 2.0 * p.n * Xp * d.S;
    const double denom = std::abs(t1) + std::abs(t2) + std::abs(t3);
    if (denom == 0.0) return 0.0;
    return std::abs(t1 + t2 + t3) / denom;
}

// Normalized residual of the Riccati form
//   XX'(A' + A^2) + (4(n+c)X + 1)A + 2nX' = 0,  A = S'/S,
// with A' computed as (S''S - S'^2)/S^2.
inline double riccati_residual(const OperatorParams& p, double x, const QuadratureSpec& spec = {}) {
    const SDerivatives d = detail::derivatives_dispatch(p, x, spec);
    const double X = x * (1.0 + p.c * x);
    const double Xp = 1.0 + 2.0 * p.c * x;
    const double A = d.A();
    const double Aprime = d.logconv_margin();
    const double t1 = X * Xp * (Aprime + A * A);
    const double t2 = (4.0 * (p.n + p.c) * X + 1.0) * A;
    const double t3 = 2.0 * p.n * Xp;
    const double denom = std::abs(t1) + std::abs(t2) + std::abs(t3);
    if (denom == 0.0) return 0.0;
    return std::abs(t1 + t2 + t3) / denom;
}

// Roots z1 <= z2 of XX' z^2 + (4(n+c)X + 1) z + 2nX' = 0; the log-derivative
// A stays between them exactly when log S is convex at x.
struct Envelope {
    double x = 0.0;
    double z1 = 0.0;
    double z2 = 0.0;
    double X = 0.0;   // x(1+cx)
    double Xp = 1.0;  // 1+2cx
};

inline Envelope envelope(const OperatorParams& p, double x) {
    p.require_in_domain(x);
    const double X = x * (1.0 + p.c * x);
    const double Xp = 1.0 + 2.0 * p.c * x;
    if (x == 0.0 || Xp == 0.0)
        throw std::domain_error("envelope: undefined where X = 0 or X' = 0");
    const double a = 1.0 + 4.0 * p.c * X;
    const double b = 4.0 * p.n * X;
    const double root = std::sqrt(a * a + b * b);
    // sqrt(a^2+b^2) - a - b = -2ab / (sqrt(a^2+b^2) + a + b), which avoids
    // the cancellation near X = 0; the X factor divides out.
    const double zplus = -4.0 * p.n * a / ((root + a + b) * Xp);
    const double zminus = (-root - a - b) / (2.0 * X * Xp);
    Envelope e;
    e.x = x;
    e.X = X;
    e.Xp = Xp;
    e.z1 = std::min(zplus, zminus);
    e.z2 = std::max(zplus, zminus);
    return e;
}

// (log S)''(x); Conjecture-level claim is that this is nonnegative on I_c.
inline double logconvexity_margin(const OperatorParams& p, double x, const QuadratureSpec& spec = {}) {
    return detail::derivatives_dispatch(p, x, spec).logconv_margin();
}

}  // namespace opentropy
