#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace opentropy {

// Degree n and shape parameter c of a Baskakov-family operator.
// c = -1 selects the Bernstein weights on [0,1], c = 0 the Szasz-Mirakjan
// weights on [0,inf), c > 0 the Baskakov weights on [0,inf).
struct OperatorParams {
    int n = 1;
    double c = -1.0;

    OperatorParams(int n_, double c_) : n(n_), c(c_) {
        if (n < 1)
            throw std::domain_error("OperatorParams: n must be >= 1, got " + std::to_string(n));
        if (c != -1.0 && c < 0.0)
            throw std::domain_error("OperatorParams: c must be -1 or >= 0, got " + std::to_string(c));
    }

    bool bernstein() const { return c == -1.0; }

    // I_c = [0,1] for c = -1, [0,inf) otherwise.
    bool contains(double x) const {
        if (bernstein()) return x >= 0.0 && x <= 1.0;
        return x >= 0.0 && std::isfinite(x);
    }

    void require_in_domain(double x) const {
        if (!contains(x))
            throw std::domain_error("x = " + std::to_string(x) + " outside operator domain I_c");
    }
};

// One evaluated grid point: kernel energy S, variance V and the two entropies.
struct EntropyPoint {
    double x = 0.0;
    double S = 1.0;
    double V = 0.0;
    double renyi = 0.0;    // -log S
    double tsallis = 0.0;  // 1 - S
};

inline double renyi_entropy(double S) {
    if (!(S > 0.0))
        throw std::domain_error("renyi_entropy: S must be positive");
    const double r = -std::log(S);
    return r == 0.0 ? 0.0 : r;  // avoid -0 at S = 1
}

inline double tsallis_entropy(double S) { return 1.0 - S; }

// Closed uniform grid including both endpoints; steps == 1 degenerates to {a}.
inline std::vector<double> linspace(double a, double b, int steps) {
    if (steps < 1) throw std::invalid_argument("linspace: steps must be >= 1");
    std::vector<double> xs(static_cast<size_t>(steps));
    if (steps == 1) {
        xs[0] = a;
        return xs;
    }
    const double h = (b - a) / (steps - 1);
    for (int i = 0; i < steps; ++i) xs[static_cast<size_t>(i)] = a + h * i;
    xs.back() = b;
    return xs;
}

}  // namespace opentropy
