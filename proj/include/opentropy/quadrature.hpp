#pragma once

#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "opentropy/basis.hpp"
#include "opentropy/domain.hpp"

namespace opentropy {

// Panel layout and convergence budget for the adaptive composite rule.
struct QuadratureSpec {
    int initial_panels = 4;
    int max_doublings = 14;
    double rel_tol = 1e-12;

    QuadratureSpec() = default;
    QuadratureSpec(int panels, int doublings, double tol)
        : initial_panels(panels), max_doublings(doublings), rel_tol(tol) {
        validate();
    }
    void validate() const {
        if (initial_panels < 1) throw std::invalid_argument("QuadratureSpec: initial_panels must be >= 1");
        if (max_doublings < 1) throw std::invalid_argument("QuadratureSpec: max_doublings must be >= 1");
        if (rel_tol < 100.0 * std::numeric_limits<double>::epsilon())
            throw std::invalid_argument("QuadratureSpec: rel_tol below 100*machine epsilon");
    }
};

namespace detail {

// 16-point Gauss-Legendre rule on [-1,1]. Nodes are the roots of P_16,
// found by Newton iteration from the Chebyshev initial guess.
struct GaussLegendre16 {
    std::array<double, 16> node{};
    std::array<double, 16> weight{};

    GaussLegendre16() {
        constexpr int n = 16;
        for (int i = 0; i < (n + 1) / 2; ++i) {
            double z = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
            double pp = 0.0;
            for (int iter = 0; iter < 100; ++iter) {
                double p1 = 1.0, p2 = 0.0;
                for (int j = 1; j <= n; ++j) {
                    const double p3 = p2;
                    p2 = p1;
                    p1 = ((2 * j - 1) * z * p2 - (j - 1) * p3) / j;
                }
                pp = n * (z * p1 - p2) / (z * z - 1.0);
                const double dz = -p1 / pp;
                z += dz;
                if (std::abs(dz) < 1e-16) break;
            }
            node[i] = -z;
            node[n - 1 - i] = z;
            weight[i] = weight[n - 1 - i] = 2.0 / ((1.0 - z * z) * pp * pp);
        }
    }
};

inline const GaussLegendre16& gl16() {
    static const GaussLegendre16 rule;
    return rule;
}

// Composite GL16 over [a,b] with `panels` equal panels, applied to each
// component of an m-vector integrand simultaneously.
template <int M, typename F>
inline std::array<double, M> composite_gl16(F&& f, double a, double b, int panels) {
    const auto& rule = gl16();
    std::array<double, M> acc{};
    const double h = (b - a) / panels;
    for (int p = 0; p < panels; ++p) {
        const double mid = a + (p + 0.5) * h;
        for (int i = 0; i < 16; ++i) {
            const double x = mid + 0.5 * h * rule.node[i];
            const std::array<double, M> v = f(x);
            for (int m = 0; m < M; ++m) acc[m] += rule.weight[i] * v[m];
        }
    }
    for (int m = 0; m < M; ++m) acc[m] *= 0.5 * h;
    return acc;
}

// Doubles the panel count until two successive estimates of every component
// agree to spec.rel_tol.
template <int M, typename F>
inline std::array<double, M> integrate_adaptive(F&& f, double a, double b, const QuadratureSpec& spec) {
    spec.validate();
    int panels = spec.initial_panels;
    std::array<double, M> prev = composite_gl16<M>(f, a, b, panels);
    for (int d = 0; d < spec.max_doublings; ++d) {
        panels *= 2;
        const std::array<double, M> cur = composite_gl16<M>(f, a, b, panels);
        // components that vanish by symmetry converge relative to the
        // dominant component, not to their own roundoff-level value
        double overall = std::numeric_limits<double>::min();
        for (int m = 0; m < M; ++m) overall = std::max(overall, std::abs(cur[m]));
        bool converged = true;
        for (int m = 0; m < M; ++m) {
            const double scale = std::max(std::abs(cur[m]), overall);
            if (std::abs(cur[m] - prev[m]) > spec.rel_tol * scale) converged = false;
        }
        if (converged) return cur;
        prev = cur;
    }
    throw std::runtime_error("quadrature: panel refinement did not converge");
}

}  // namespace detail

// Trigonometric integral representation of S_{n,c}:
//   c != 0:  (1/pi) int_0^pi (1 + 4cX sin^2(phi/2))^{-n/c} dphi,  X = x(1+cx)
//   c == 0:  (1/pi) int_0^pi exp(-4nx sin^2(phi/2)) dphi
inline double s_integral(const OperatorParams& p, double x, const QuadratureSpec& spec = {}) {
    p.require_in_domain(x);
    const double X = x * (1.0 + p.c * x);
    constexpr double pi = std::numbers::pi;
    double value;
    if (p.c == 0.0) {
        const double k = 4.0 * p.n * x;
        value = detail::integrate_adaptive<1>(
            [&](double phi) -> std::array<double, 1> {
                const double s = std::sin(0.5 * phi);
                return {std::exp(-k * s * s)};
            },
            0.0, pi, spec)[0];
    } else {
        const double expo = -p.n / p.c;
        const double k = 4.0 * p.c * X;
        value = detail::integrate_adaptive<1>(
            [&](double phi) -> std::array<double, 1> {
                const double s = std::sin(0.5 * phi);
                return {std::exp(expo * std::log1p(k * s * s))};
            },
            0.0, pi, spec)[0];
    }
    return value / pi;
}

// Modified Bessel function I_0. Taylor series for x <= 30, scaled
// asymptotic series beyond.
inline double bessel_i0(double x) {
    if (x < 0.0) throw std::domain_error("bessel_i0: negative argument");
    if (x <= 30.0) {
        const double q = 0.25 * x * x;
        double term = 1.0, sum = 1.0;
        for (int j = 1; j < 1000; ++j) {
            term *= q / (static_cast<double>(j) * j);
            sum += term;
            if (term < 1e-17 * sum) break;
        }
        return sum;
    }
    // I_0(x) ~ e^x / sqrt(2 pi x) * sum_k ((2k-1)!!)^2 / (k! (8x)^k);
    // terms decrease until k ~ 2x, so the cap only guards pathological input
    double term = 1.0, sum = 1.0;
    for (int k = 1; k < 500; ++k) {
        const double next = term * (2.0 * k - 1.0) * (2.0 * k - 1.0) / (8.0 * k * x);
        if (next >= term) break;  // asymptotic tail started growing
        term = next;
        sum += term;
        if (term < 1e-17 * sum) break;
    }
    return std::exp(x) / std::sqrt(2.0 * std::numbers::pi * x) * sum;
}

// Relative residual of the identity I_0(x) = e^x S_{n,0}(x/(2n)).
inline double bessel_identity_residual(int n, double x) {
    if (x < 0.0) throw std::domain_error("bessel_identity_residual: negative argument");
    const OperatorParams p(n, 0.0);
    const double lhs = std::exp(x) * s_series(p, x / (2.0 * n));
    const double i0 = bessel_i0(x);
    return std::abs(lhs - i0) / i0;
}

}  // namespace opentropy
