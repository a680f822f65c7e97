#pragma once

#include <cmath>
#include <functional>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "opentropy/basis.hpp"
#include "opentropy/domain.hpp"
#include "opentropy/ode.hpp"
#include "opentropy/quadrature.hpp"
#include "opentropy/rational.hpp"

namespace opentropy {

// The operator zoo: each family with its closed-form S and V.
enum class Family {
    baskakov,           // the (n,c) family, including bernstein and szasz
    kantorovich,        // n
    gauss_weierstrass,  // r
    convolution,        // kernel density + window
    post_widder,        // n
    durrmeyer,          // n
    genuine_bd,         // n
};

struct OperatorDescriptor {
    Family family = Family::baskakov;
    int n = 1;
    double c = -1.0;  // baskakov only
    double r = 1.0;   // gauss_weierstrass only
    std::function<double(double)> kernel;  // convolution only
    double window_lo = -1.0;
    double window_hi = 1.0;

    static OperatorDescriptor baskakov(int n, double c) {
        OperatorDescriptor d;
        d.family = Family::baskakov;
        d.n = n;
        d.c = c;
        OperatorParams(n, c);  // validates
        return d;
    }
    static OperatorDescriptor plain(Family f, int n) {
        if (n < 1) throw std::domain_error("OperatorDescriptor: n must be >= 1");
        OperatorDescriptor d;
        d.family = f;
        d.n = n;
        return d;
    }
    static OperatorDescriptor gauss_weierstrass_op(double r) {
        if (!(r > 0.0)) throw std::domain_error("OperatorDescriptor: r must be > 0");
        OperatorDescriptor d;
        d.family = Family::gauss_weierstrass;
        d.r = r;
        return d;
    }
    static OperatorDescriptor convolution_op(std::function<double(double)> kernel, double lo, double hi) {
        OperatorDescriptor d;
        d.family = Family::convolution;
        d.kernel = std::move(kernel);
        d.window_lo = lo;
        d.window_hi = hi;
        return d;
    }
};

// S_n(x) = (n+1) F_n(x),  V_n(x) = (n+1)^{-2} (nx(1-x) + 1/12).
inline std::pair<double, double> kantorovich_sv(int n, double x) {
    const OperatorParams p(n, -1.0);
    p.require_in_domain(x);
    const double S = (n + 1.0) * s_series(p, x);
    const double V = (n * x * (1.0 - x) + 1.0 / 12.0) / ((n + 1.0) * (n + 1.0));
    return {S, V};
}

// Constants S_r = (8 pi r)^{-1/2}, V_r = 2r, independent of x.
inline std::pair<double, double> gauss_weierstrass_sv(double r) {
    if (!(r > 0.0)) throw std::domain_error("gauss_weierstrass_sv: r must be > 0");
    return {1.0 / std::sqrt(8.0 * std::numbers::pi * r), 2.0 * r};
}

// For a convolution kernel phi on a truncation window [lo, hi]:
//   S = int phi^2,  V = int s^2 phi - (int s phi)^2.
// Returns (S, V, mass_deficit) where mass_deficit = |1 - int phi|.
struct ConvolutionSV {
    double S = 0.0;
    double V = 0.0;
    double mass_deficit = 0.0;
};

inline ConvolutionSV convolution_sv(const std::function<double(double)>& kernel, double lo, double hi,
                                    const QuadratureSpec& spec = {}, double mass_tol = 1e-9) {
    if (!(hi > lo)) throw std::domain_error("convolution_sv: empty window");
    const auto moments = detail::integrate_adaptive<4>(
        [&](double s) -> std::array<double, 4> {
            const double v = kernel(s);
            return {v, s * v, s * s * v, v * v};
        },
        lo, hi, spec);
    ConvolutionSV out;
    out.mass_deficit = std::abs(1.0 - moments[0]);
    if (out.mass_deficit > mass_tol)
        throw std::domain_error("convolution_sv: kernel mass deficit " + std::to_string(out.mass_deficit) +
                                " exceeds tolerance (window too small or non-normalized density)");
    out.S = moments[3];
    out.V = moments[2] - moments[1] * moments[1];
    return out;
}

// S_n(x) = C(2n-2, n-1) 2^{1-2n} n / x,  V_n(x) = x^2 / n,  x > 0.
inline std::pair<double, double> post_widder_sv(int n, double x) {
    if (n < 1) throw std::domain_error("post_widder_sv: n must be >= 1");
    if (!(x > 0.0)) throw std::domain_error("post_widder_sv: x must be > 0");
    const double S = detail::binomial(2 * n - 2, n - 1) * std::pow(2.0, 1.0 - 2.0 * n) * n / x;
    return {S, x * x / n};
}

// Exact Durrmeyer coefficients c_{n,0..2n} with their symmetry c_{n,2n-k} = c_{n,k}.
struct CoeffSequence {
    int n = 1;
    std::vector<BigRat> coeffs;  // size 2n+1

    // exact second difference c_{k-1} - 2 c_k + c_{k+1}, 1 <= k <= 2n-1
    BigRat second_difference(int k) const {
        if (k < 1 || k + 1 >= static_cast<int>(coeffs.size()))
            throw std::out_of_range("CoeffSequence::second_difference: k out of range");
        return coeffs[k - 1] - 2 * coeffs[k] + coeffs[k + 1];
    }
    bool symmetric() const {
        const int m = static_cast<int>(coeffs.size());
        for (int k = 0; k < m; ++k)
            if (coeffs[k] != coeffs[m - 1 - k]) return false;
        return true;
    }
};

// c_{n,k} = (n+1)^2/(2n+1) C(2n,k)^{-2} sum_j C(n,j)^2 C(n,k-j)^2, with the
// convention C(n,m) = 0 for m > n. Exact rationals throughout.
inline CoeffSequence durrmeyer_coeffs(int n) {
    if (n < 1) throw std::domain_error("durrmeyer_coeffs: n must be >= 1");
    CoeffSequence seq;
    seq.n = n;
    seq.coeffs.reserve(2 * n + 1);
    const BigRat front(BigInt(n + 1) * (n + 1), BigInt(2 * n + 1));
    for (int k = 0; k <= 2 * n; ++k) {
        BigInt sum = 0;
        const int jlo = std::max(0, k - n);
        const int jhi = std::min(n, k);
        for (int j = jlo; j <= jhi; ++j) {
            const BigInt a = binomial_exact(n, j);
            const BigInt b = binomial_exact(n, k - j);
            sum += a * a * b * b;
        }
        const BigInt c2nk = binomial_exact(2 * n, k);
        seq.coeffs.push_back(front * BigRat(sum, c2nk * c2nk));
    }
    return seq;
}

// S_n(x) = sum_k c_{n,k} C(2n,k) x^k (1-x)^{2n-k},
// V_n(x) = (n+1)(2nx(1-x)+1) / ((n+2)^2 (n+3)).
inline std::pair<double, double> durrmeyer_sv(int n, double x) {
    if (n < 1) throw std::domain_error("durrmeyer_sv: n must be >= 1");
    if (!(x >= 0.0 && x <= 1.0)) throw std::domain_error("durrmeyer_sv: x must lie in [0,1]");
    static thread_local CoeffSequence cached;  // scans evaluate many x per n
    if (cached.n != n || cached.coeffs.empty()) cached = durrmeyer_coeffs(n);
    double S = 0.0;
    for (int k = 0; k <= 2 * n; ++k) {
        const double ck = static_cast<double>(cached.coeffs[k]);
        S += ck * detail::binomial(2 * n, k) * std::pow(x, k) * std::pow(1.0 - x, 2 * n - k);
    }
    const double V = (n + 1.0) * (2.0 * n * x * (1.0 - x) + 1.0) / ((n + 2.0) * (n + 2.0) * (n + 3.0));
    return {S, V};
}

// Genuine Bernstein-Durrmeyer:
//   S_n(x) = (1-x)^{2n} + x^{2n}
//          + (n-1)^2/(2n-3) sum_{k,j=1}^{n-1} C(n-2,k-1) C(n-2,j-1) C(n,k) C(n,j)
//                                             C(2n-4,k+j-2)^{-1} x^{k+j} (1-x)^{2n-k-j}
//   V_n(x) = 2x(1-x)/(n+1).
// For n = 1 the double sum is empty and S_1 = (1-x)^2 + x^2; the sum is
// short-circuited before the (n-1)^2/(2n-3) prefactor is formed.
inline std::pair<double, double> genuine_bd_sv(int n, double x) {
    if (n < 1) throw std::domain_error("genuine_bd_sv: n must be >= 1");
    if (!(x >= 0.0 && x <= 1.0)) throw std::domain_error("genuine_bd_sv: x must lie in [0,1]");
    const double V = 2.0 * x * (1.0 - x) / (n + 1.0);
    double S = std::pow(1.0 - x, 2 * n) + std::pow(x, 2 * n);
    if (n >= 2) {
        double inner = 0.0;
        for (int k = 1; k <= n - 1; ++k) {
            for (int j = 1; j <= n - 1; ++j) {
                const double coef = detail::binomial(n - 2, k - 1) * detail::binomial(n - 2, j - 1) *
                                    detail::binomial(n, k) * detail::binomial(n, j) /
                                    detail::binomial(2 * n - 4, k + j - 2);
                inner += coef * std::pow(x, k + j) * std::pow(1.0 - x, 2 * n - k - j);
            }
        }
        S += (n - 1.0) * (n - 1.0) / (2.0 * n - 3.0) * inner;
    }
    return {S, V};
}

// One profile row; derivative columns are only populated for the Baskakov
// family, which has analytic S', S''.
struct ProfileRow {
    double x = 0.0;
    double S = 1.0;
    double V = 0.0;
    double renyi = 0.0;
    double tsallis = 0.0;
    std::optional<double> dS;
    std::optional<double> d2S;
    std::optional<double> logconv_margin;
};

struct EntropyProfile {
    OperatorDescriptor descriptor;
    std::vector<ProfileRow> rows;
};

inline std::pair<double, double> family_sv(const OperatorDescriptor& d, double x) {
    switch (d.family) {
        case Family::baskakov: {
            const OperatorParams p(d.n, d.c);
            return {s_series(p, x), variance(p, x)};
        }
        case Family::kantorovich: return kantorovich_sv(d.n, x);
        case Family::gauss_weierstrass: return gauss_weierstrass_sv(d.r);
        case Family::post_widder: return post_widder_sv(d.n, x);
        case Family::durrmeyer: return durrmeyer_sv(d.n, x);
        case Family::genuine_bd: return genuine_bd_sv(d.n, x);
        case Family::convolution: {
            if (!d.kernel) throw std::invalid_argument("family_sv: convolution descriptor without kernel");
            const ConvolutionSV sv = convolution_sv(d.kernel, d.window_lo, d.window_hi);
            return {sv.S, sv.V};
        }
    }
    throw std::logic_error("family_sv: unknown family");
}

inline EntropyProfile profile(const OperatorDescriptor& d, const std::vector<double>& grid) {
    EntropyProfile out;
    out.descriptor = d;
    out.rows.reserve(grid.size());
    for (double x : grid) {
        ProfileRow row;
        row.x = x;
        const auto [S, V] = family_sv(d, x);
        row.S = S;
        row.V = V;
        row.renyi = renyi_entropy(S);
        row.tsallis = tsallis_entropy(S);
        if (d.family == Family::baskakov) {
            const OperatorParams p(d.n, d.c);
            const SDerivatives sd = detail::derivatives_dispatch(p, x, QuadratureSpec{});
            row.dS = sd.dS;
            row.d2S = sd.d2S;
            row.logconv_margin = sd.logconv_margin();
        }
        out.rows.push_back(row);
    }
    return out;
}

}  // namespace opentropy
