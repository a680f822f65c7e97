#pragma once

#include <cmath>
#include <stdexcept>

#include "opentropy/basis.hpp"

namespace opentropy {

// P_n(t) by the three-term recurrence (k+1)P_{k+1} = (2k+1)t P_k - k P_{k-1}.
// Upward recurrence is forward-stable on t >= 1 where P_n dominates.
inline double legendre_p(int n, double t) {
    if (n < 0) throw std::domain_error("legendre_p: n must be >= 0");
    if (n == 0) return 1.0;
    double prev = 1.0, cur = t;
    for (int k = 1; k < n; ++k) {
        const double next = ((2.0 * k + 1.0) * t * cur - k * prev) / (k + 1.0);
        prev = cur;
        cur = next;
    }
    return cur;
}

// P'_n(t) from (t^2-1) P'_n(t) = n (t P_n(t) - P_{n-1}(t)); P'_n(1) = n(n+1)/2.
inline double legendre_p_prime(int n, double t) {
    if (n == 0) return 0.0;
    if (t - 1.0 <= 1e-12) return 0.5 * n * (n + 1.0);
    return n * (t * legendre_p(n, t) - legendre_p(n - 1, t)) / (t * t - 1.0);
}

inline double ratio_pp(int n, double t) { return legendre_p_prime(n, t) / legendre_p(n, t); }

// The substitution x in [0,1/2) <-> t in [1,inf) with
//   t = (2x^2 - 2x + 1)/(1 - 2x),  X = x(1-x),  X' = 1 - 2x,
//   sqrt(t^2-1) = 2X/X',  t - sqrt(t^2-1) = X'.
struct TSubstitution {
    double x = 0.0;
    double t = 1.0;
    double X = 0.0;    // x(1-x)
    double Xp = 1.0;   // 1-2x

    double sqrt_t2m1() const { return 2.0 * X / Xp; }
};

inline TSubstitution x_to_t(double x) {
    if (!(x >= 0.0 && x < 0.5))
        throw std::domain_error("x_to_t: x must lie in [0, 1/2)");
    TSubstitution s;
    s.x = x;
    s.X = x * (1.0 - x);
    s.Xp = 1.0 - 2.0 * x;
    s.t = (1.0 - 2.0 * s.X) / s.Xp;
    return s;
}

inline TSubstitution t_to_x(double t) {
    if (!(t >= 1.0)) throw std::domain_error("t_to_x: t must be >= 1");
    // x = (1 - t + sqrt(t^2-1))/2 evaluated as (1 - 1/(t+sqrt(t^2-1)))/2
    // to avoid cancellation for large t.
    const double r = std::sqrt(t * t - 1.0);
    return x_to_t(0.5 * (1.0 - 1.0 / (t + r)));
}

// F_n(x) = (t - sqrt(t^2-1))^n P_n(t) = X'^n P_n(t); the Legendre route to
// the Bernstein squared-sum.
inline double f_via_legendre(int n, double x) {
    const TSubstitution s = x_to_t(x);
    return std::pow(s.Xp, n) * legendre_p(n, s.t);
}

// Lower bound n(n+1) / (2t + (n-1) sqrt(t^2-1)) for P'_n/P_n, t >= 1.
inline double ratio_lower_bound(int n, double t) {
    if (t < 1.0) throw std::domain_error("ratio_lower_bound: t must be >= 1");
    return n * (n + 1.0) / (2.0 * t + (n - 1.0) * std::sqrt(t * t - 1.0));
}

// Upper bound 2n^2 / (t + (2n-1) sqrt(t^2-1)), t >= 1.
inline double ratio_upper_2_14(int n, double t) {
    if (t < 1.0) throw std::domain_error("ratio_upper_2_14: t must be >= 1");
    return 2.0 * n * n / (t + (2.0 * n - 1.0) * std::sqrt(t * t - 1.0));
}

// Upper bound n^2(2n+1) / ((n+1)t + (2n^2-1) sqrt(t^2-1)), t >= 1.
inline double ratio_upper_2_15(int n, double t) {
    if (t < 1.0) throw std::domain_error("ratio_upper_2_15: t must be >= 1");
    return n * n * (2.0 * n + 1.0) / ((n + 1.0) * t + (2.0 * n * n - 1.0) * std::sqrt(t * t - 1.0));
}

// Conditional upper bound
//   [sqrt(4n^2(t^2-1) + (t-sqrt(t^2-1))^2) - (t-sqrt(t^2-1))] / (2(t^2-1)),
// valid for t > 1 under log-convexity of F_n.
inline double ratio_upper_2_11(int n, double t) {
    if (!(t > 1.0)) throw std::domain_error("ratio_upper_2_11: t must be > 1");
    const double u = t * t - 1.0;
    const double w = t - std::sqrt(u);  // = 1/(t+sqrt(u))
    return (std::sqrt(4.0 * n * n * u + w * w) - w) / (2.0 * u);
}

// Envelope upper bound for P_n obtained by integrating the 2.15-type ratio
// bound from 1 to t.
inline double poly_upper_2_16(int n, double t) {
    if (t < 1.0) throw std::domain_error("poly_upper_2_16: t must be >= 1");
    const double s = std::sqrt(t * t - 1.0);
    const double d = 2.0 * n * n - n - 2.0;
    const double e1 = n * (2.0 * n * n - 1.0) / d;
    const double e2 = -n * (n + 1.0) / d;
    return std::pow(t + s, e1) * std::pow(t + (2.0 * n * n - 1.0) / (n + 1.0) * s, e2);
}

// Weaker envelope from integrating the 2.14-type bound; needs n >= 2.
inline double poly_upper_2_17(int n, double t) {
    if (n < 2) throw std::domain_error("poly_upper_2_17: n must be >= 2");
    if (t < 1.0) throw std::domain_error("poly_upper_2_17: t must be >= 1");
    const double s = std::sqrt(t * t - 1.0);
    const double e1 = n * (2.0 * n - 1.0) / (2.0 * (n - 1.0));
    const double e2 = -n / (2.0 * (n - 1.0));
    return std::pow(t + s, e1) * std::pow(t + (2.0 * n - 1.0) * s, e2);
}

// Unique t* > 1 where t/(t + sqrt(t^2-1)) = (3n+2)/(4n+3): the point where
// the 2.11-vs-2.15 comparison changes sign. With r = (3n+2)/(4n+3),
// t* = r / sqrt(2r - 1).
inline double crossover_t(int n) {
    if (n < 1) throw std::domain_error("crossover_t: n must be >= 1");
    const double r = (3.0 * n + 2.0) / (4.0 * n + 3.0);
    return r / std::sqrt(2.0 * r - 1.0);
}

}  // namespace opentropy
