#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "opentropy/domain.hpp"

namespace opentropy {

namespace detail {

// C(n,k) exactly in 64-bit for n <= 60 (largest entry C(60,30) ~ 1.2e17),
// log-gamma beyond.
inline double binomial(int n, int k) {
    if (k < 0 || k > n) return 0.0;
    if (n <= 60) {
        std::uint64_t r = 1;
        int kk = k < n - k ? k : n - k;
        for (int i = 1; i <= kk; ++i) r = r * static_cast<std::uint64_t>(n - kk + i) / static_cast<std::uint64_t>(i);
        return static_cast<double>(r);
    }
    return std::exp(std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0));
}

// log p_{n,j}^{[c]}(x) for c >= 0 and x > 0.
inline double log_weight_unbounded(const OperatorParams& p, int j, double x) {
    if (p.c == 0.0) {
        // Szasz-Mirakjan: e^{-nx} (nx)^j / j!
        const double nx = p.n * x;
        return j * std::log(nx) - nx - std::lgamma(j + 1.0);
    }
    // Baskakov: (n/c)_j / j! (cx)^j (1+cx)^{-n/c-j}
    const double a = p.n / p.c;
    const double cx = p.c * x;
    return std::lgamma(a + j) - std::lgamma(a) - std::lgamma(j + 1.0) + j * std::log(cx) -
           (a + j) * std::log1p(cx);
}

}  // namespace detail

// Fundamental weight p_{n,j}^{[c]}(x) of the Baskakov family.
inline double basis_weight(const OperatorParams& p, int j, double x) {
    if (j < 0) throw std::domain_error("basis_weight: j must be >= 0");
    p.require_in_domain(x);
    if (p.bernstein()) {
        if (j > p.n) throw std::domain_error("basis_weight: j > n for the Bernstein basis");
        return detail::binomial(p.n, j) * std::pow(x, j) * std::pow(1.0 - x, p.n - j);
    }
    if (x == 0.0) return j == 0 ? 1.0 : 0.0;
    return std::exp(detail::log_weight_unbounded(p, j, x));
}

namespace detail {

// Sums f(p_{n,j}(x)) over all j for c >= 0, x > 0. Starts at the modal
// index j* ~ nx (the weights are unimodal in j) and walks outward in both
// directions until terms fall below tol times the running sum while
// decreasing. f must be monotone in |p| (here: p or p^2).
template <typename Term>
inline double sum_over_weights(const OperatorParams& p, double x, double tol, Term f) {
    constexpr long kMaxTerms = 1000000;
    const double nx = p.n * x;
    const long jstar = static_cast<long>(nx);
    const double log_pstar = log_weight_unbounded(p, static_cast<int>(jstar), x);
    const double pstar = std::exp(log_pstar);

    // ratio p_{j+1}/p_j
    auto up_ratio = [&](long j) {
        if (p.c == 0.0) return nx / (j + 1.0);
        const double a = p.n / p.c;
        const double z = p.c * x / (1.0 + p.c * x);
        return (a + j) / (j + 1.0) * z;
    };

    double sum = f(pstar);
    long terms = 1;

    double w = pstar;
    for (long j = jstar; ; ++j) {
        w *= up_ratio(j);
        const double t = f(w);
        sum += t;
        if (++terms > kMaxTerms)
            throw std::runtime_error("series truncation: term cap reached before tail bound");
        if (t < tol * sum && up_ratio(j + 1) < 1.0) break;
    }
    w = pstar;
    for (long j = jstar; j > 0; --j) {
        w /= up_ratio(j - 1);
        const double t = f(w);
        sum += t;
        if (++terms > kMaxTerms)
            throw std::runtime_error("series truncation: term cap reached before tail bound");
        if (t < tol * sum) break;
    }
    return sum;
}

}  // namespace detail

// S_{n,c}(x) = sum_j p_{n,j}^{[c]}(x)^2. Exact finite sum for the Bernstein
// case, truncated modal-pivot summation otherwise.
inline double s_series(const OperatorParams& p, double x, double tol = 1e-13) {
    if (!(tol > 0.0)) throw std::invalid_argument("s_series: tol must be positive");
    p.require_in_domain(x);
    if (p.bernstein()) {
        double sum = 0.0;
        for (int j = 0; j <= p.n; ++j) {
            const double w = detail::binomial(p.n, j) * std::pow(x, j) * std::pow(1.0 - x, p.n - j);
            sum += w * w;
        }
        return sum;
    }
    if (x == 0.0) return 1.0;
    return detail::sum_over_weights(p, x, tol, [](double w) { return w * w; });
}

// sum_j p_{n,j}^{[c]}(x); equals 1 for every x in I_c (partition of unity).
inline double weight_sum(const OperatorParams& p, double x, double tol = 1e-15) {
    p.require_in_domain(x);
    if (p.bernstein()) {
        double sum = 0.0;
        for (int j = 0; j <= p.n; ++j) sum += basis_weight(p, j, x);
        return sum;
    }
    if (x == 0.0) return 1.0;
    return detail::sum_over_weights(p, x, tol, [](double w) { return w; });
}

// V_{n,c}(x) = x(1+cx)/n.
inline double variance(const OperatorParams& p, double x) {
    p.require_in_domain(x);
    return x * (1.0 + p.c * x) / p.n;
}

}  // namespace opentropy
