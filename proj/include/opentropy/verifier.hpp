#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "opentropy/catalog.hpp"
#include "opentropy/legendre.hpp"
#include "opentropy/multivariate.hpp"
#include "opentropy/ode.hpp"

namespace opentropy {

// Parameter ranges for a verification run.
struct ScanConfig {
    int n_min = 1;
    int n_max = 30;
    std::vector<double> c_values = {-1.0, 0.0, 1.0};
    std::optional<std::pair<double, double>> x_window;  // overrides per-check x domains
    std::optional<std::pair<double, double>> t_window;  // overrides the default t in [1,10]
    int grid_points = 65;
    double hard_tol = 1e-9;
    QuadratureSpec quad{};

    void validate() const {
        if (n_min < 1 || n_max < n_min) throw std::invalid_argument("ScanConfig: bad n range");
        if (grid_points < 3) throw std::invalid_argument("ScanConfig: grid_points must be >= 3");
        if (!(hard_tol > 0.0)) throw std::invalid_argument("ScanConfig: hard_tol must be > 0");
        for (double c : c_values) OperatorParams(1, c);
    }
};

// One violation/finding/grazing entry. Unused coordinates stay NaN (or -1
// for k, empty for strings) and serialize as null.
struct ViolationReport {
    std::string check_id;
    std::string family;
    int n = 0;  // 0 = not applicable
    double c = std::numeric_limits<double>::quiet_NaN();
    double x = std::numeric_limits<double>::quiet_NaN();  // x or t coordinate
    double y = std::numeric_limits<double>::quiet_NaN();
    int k = -1;
    double margin = 0.0;
    std::string exact_margin;  // exact rational margin, conj-4.6 only
    bool conditional = false;
};

struct VerifyReport {
    std::vector<ViolationReport> violations;  // unconditional, hard failures
    std::vector<ViolationReport> findings;    // conditional on the open conjectures
    std::vector<ViolationReport> grazing;     // margins within 10*hard_tol of equality

    void merge(const VerifyReport& other) {
        violations.insert(violations.end(), other.violations.begin(), other.violations.end());
        findings.insert(findings.end(), other.findings.begin(), other.findings.end());
        grazing.insert(grazing.end(), other.grazing.begin(), other.grazing.end());
    }
};

struct CheckInfo {
    std::string id;
    std::string statement;
    bool conditional;  // consequences of the open conjectures report as findings
};

// Every registered check maps to exactly one claim of the underlying theory.
inline const std::vector<CheckInfo>& check_registry() {
    static const std::vector<CheckInfo> reg = {
        {"ineq-2.2", "K_n(x) <= 1/sqrt(4nx+1) on x >= 0", false},
        {"ineq-2.4", "I0(x) <= e^x/sqrt(2x+1) on x >= 0", false},
        {"ineq-2.5", "two-sided envelope bound on K'_n/K_n for t > 0", true},
        {"ineq-2.6", "K_n(x)^2 <= 2 exp(sqrt(1+(4nx)^2)-1-4nx)/(sqrt(1+(4nx)^2)+1)", true},
        {"ineq-2.7", "I0(x)^2 <= 2 exp(sqrt(1+4x^2)-1)/(sqrt(1+4x^2)+1)", true},
        {"ineq-2.10", "F'_n/F_n <= upper envelope root on [0,1/2)", true},
        {"ineq-2.11", "P'_n/P_n upper bound via the t-substitution, t > 1", true},
        {"ineq-2.12", "n(n+1)/(2t+(n-1)sqrt(t^2-1)) <= P'_n/P_n, t >= 1", false},
        {"ineq-2.13", "-2nX'/(1+(n-3)X) <= F'_n/F_n on [0,1/2]", false},
        {"ineq-2.14", "P'_n/P_n <= 2n^2/(t+(2n-1)sqrt(t^2-1)), t >= 1", false},
        {"ineq-2.15", "P'_n/P_n <= n^2(2n+1)/((n+1)t+(2n^2-1)sqrt(t^2-1)), t >= 1", false},
        {"ineq-2.16", "P_n(t) <= integrated 2.15-type envelope, t >= 1", false},
        {"ineq-2.17", "P_n(t) <= integrated 2.14-type envelope, t >= 1, n >= 2", false},
        {"ineq-2.16-vs-2.17", "the 2.16 envelope is pointwise below the 2.17 envelope", false},
        {"cmp-2.6-vs-2.2", "the 2.6 right-hand side is below 1/(4nx+1)", false},
        {"cmp-2.7-vs-2.4", "the 2.7 right-hand side is below e^{2x}/(2x+1)", false},
        {"cmp-2.11-vs-2.14", "the 2.11 bound is below the 2.14 bound for t > 1", false},
        {"crossover-2.15", "2.11 <= 2.15 on (1,t*], reversed beyond t* = crossover_t(n)", false},
        {"thm-2.1", "(log S)'' >= 0 iff S'/S lies between the envelope roots (consistency)", false},
        {"conj-C", "log S_{n,c} is convex on I_c", true},
        {"conj-4.6", "Durrmeyer coefficient sequence is convex (and S_n convex)", true},
        {"durrmeyer-symmetry", "c_{n,2n-k} = c_{n,k} exactly", false},
        {"axial-convexity", "R_n convex along segments parallel to the triangle sides", false},
        {"equiv-sect3", "log F_n convex <=> Q_n convex <=> log Q_n convex (grid consistency)", true},
        {"synchronicity", "V, 1-S and -log S move together on each subinterval", false},
    };
    return reg;
}

inline const CheckInfo* find_check(const std::string& id) {
    for (const auto& c : check_registry())
        if (c.id == id) return &c;
    return nullptr;
}

namespace detail {

class Emitter {
  public:
    Emitter(VerifyReport& rep, double hard_tol) : rep_(rep), tol_(hard_tol) {}

    // margin is normalized to the larger side of the inequality;
    // negative = violated.
    void margin_check(ViolationReport r, double margin) {
        r.margin = margin;
        if (margin < -tol_) {
            (r.conditional ? rep_.findings : rep_.violations).push_back(std::move(r));
        } else if (std::abs(margin) <= 10.0 * tol_) {
            rep_.grazing.push_back(std::move(r));
        }
    }

    // violation only, no grazing bookkeeping (sign-agreement checks)
    void hard_failure(ViolationReport r, double margin) {
        r.margin = margin;
        (r.conditional ? rep_.findings : rep_.violations).push_back(std::move(r));
    }

    double tol() const { return tol_; }

  private:
    VerifyReport& rep_;
    double tol_;
};

// normalized margin of lhs <= rhs
inline double le_margin(double lhs, double rhs) {
    const double scale = std::max({std::abs(lhs), std::abs(rhs), 1e-300});
    return (rhs - lhs) / scale;
}

inline ViolationReport at(const char* id, int n, double c, double x, bool conditional = false) {
    ViolationReport r;
    r.check_id = id;
    r.n = n;
    r.c = c;
    r.x = x;
    r.conditional = conditional;
    return r;
}

// the 2.6 right-hand side, evaluated cancellation-free via
// sqrt(1+u^2)-1-u = -2u/(sqrt(1+u^2)+1+u)
inline double rhs_2_6(double u) {
    const double root = std::sqrt(1.0 + u * u);
    return 2.0 * std::exp(-2.0 * u / (root + 1.0 + u)) / (root + 1.0);
}

// the 2.7 right-hand side; sqrt(1+4x^2)-1 = 4x^2/(sqrt(1+4x^2)+1)
inline double rhs_2_7(double x) {
    const double root = std::sqrt(1.0 + 4.0 * x * x);
    return 2.0 * std::exp(4.0 * x * x / (root + 1.0)) / (root + 1.0);
}

// upper envelope root z2 for generic (n,c), stable near X = 0 (the X factor
// of the quadratic-formula numerator divides out)
inline double envelope_z2_stable(int n, double c, double x) {
    const double X = x * (1.0 + c * x);
    const double Xp = 1.0 + 2.0 * c * x;
    const double a = 1.0 + 4.0 * c * X;
    const double b = 4.0 * n * X;
    const double root = std::sqrt(a * a + b * b);
    return -4.0 * n * a / ((root + a + b) * Xp);
}

}  // namespace detail

// All registered inequality and comparison checks over the config ranges.
inline VerifyReport run_inequality_suite(const ScanConfig& cfg) {
    cfg.validate();
    VerifyReport rep;
    detail::Emitter emit(rep, cfg.hard_tol);

    const auto xw = cfg.x_window.value_or(std::make_pair(0.0, 20.0));
    const std::vector<double> xs = linspace(xw.first, xw.second, cfg.grid_points);
    const auto tw = cfg.t_window.value_or(std::make_pair(1.0, 10.0));
    const std::vector<double> ts = linspace(tw.first, tw.second, cfg.grid_points);

    const double delta = 1.0 / 128.0;  // interior exclusion for derivative ratios

    // --- Szasz-side checks (c = 0) and Bessel bounds ---
    for (int n = cfg.n_min; n <= cfg.n_max; ++n) {
        const OperatorParams p(n, 0.0);
        for (double x : xs) {
            const double kn = s_series(p, x);
            emit.margin_check(detail::at("ineq-2.2", n, 0.0, x),
                              detail::le_margin(kn, 1.0 / std::sqrt(4.0 * n * x + 1.0)));
            const double u = 4.0 * n * x;
            emit.margin_check(detail::at("cmp-2.6-vs-2.2", n, 0.0, x),
                              detail::le_margin(detail::rhs_2_6(u), 1.0 / (u + 1.0)));
            emit.margin_check(detail::at("ineq-2.6", n, 0.0, x, true),
                              detail::le_margin(kn * kn, detail::rhs_2_6(u)));
            if (x >= delta) {
                const SDerivatives d = s_derivatives(p, x, cfg.quad);
                const double A = d.A();
                const double root = std::sqrt(1.0 + u * u);
                const double lower = (-root - 1.0 - u) / (2.0 * x);
                const double upper = detail::envelope_z2_stable(n, 0.0, x);
                emit.margin_check(detail::at("ineq-2.5", n, 0.0, x, true), detail::le_margin(lower, A));
                emit.margin_check(detail::at("ineq-2.5", n, 0.0, x, true), detail::le_margin(A, upper));
            }
        }
    }
    for (double x : xs) {
        const double i0 = bessel_i0(x);
        emit.margin_check(detail::at("ineq-2.4", 0, std::numeric_limits<double>::quiet_NaN(), x),
                          detail::le_margin(i0, std::exp(x) / std::sqrt(2.0 * x + 1.0)));
        emit.margin_check(detail::at("ineq-2.7", 0, std::numeric_limits<double>::quiet_NaN(), x, true),
                          detail::le_margin(i0 * i0, detail::rhs_2_7(x)));
        emit.margin_check(detail::at("cmp-2.7-vs-2.4", 0, std::numeric_limits<double>::quiet_NaN(), x),
                          detail::le_margin(detail::rhs_2_7(x), std::exp(2.0 * x) / (2.0 * x + 1.0)));
    }

    // --- Bernstein-side ratio bounds on [0, 1/2] ---
    for (int n = cfg.n_min; n <= cfg.n_max; ++n) {
        const std::vector<double> bx = linspace(0.0, 0.5, cfg.grid_points);
        for (double x : bx) {
            const SDerivatives d = bernstein_derivatives_exact(n, x);
            const double A = d.A();
            const double X = x * (1.0 - x);
            const double Xp = 1.0 - 2.0 * x;
            emit.margin_check(detail::at("ineq-2.13", n, -1.0, x),
                              detail::le_margin(-2.0 * n * Xp / (1.0 + (n - 3.0) * X), A));
            if (x < 0.5 - 1.0 / 64.0)
                emit.margin_check(detail::at("ineq-2.10", n, -1.0, x, true),
                                  detail::le_margin(A, detail::envelope_z2_stable(n, -1.0, x)));
        }
    }

    // --- Legendre ratio and polynomial bounds on the t grid ---
    for (int n = cfg.n_min; n <= cfg.n_max; ++n) {
        const double cnan = std::numeric_limits<double>::quiet_NaN();
        for (double t : ts) {
            const double ratio = ratio_pp(n, t);
            emit.margin_check(detail::at("ineq-2.12", n, cnan, t),
                              detail::le_margin(ratio_lower_bound(n, t), ratio));
            emit.margin_check(detail::at("ineq-2.14", n, cnan, t),
                              detail::le_margin(ratio, ratio_upper_2_14(n, t)));
            emit.margin_check(detail::at("ineq-2.15", n, cnan, t),
                              detail::le_margin(ratio, ratio_upper_2_15(n, t)));
            const double pn = legendre_p(n, t);
            emit.margin_check(detail::at("ineq-2.16", n, cnan, t), detail::le_margin(pn, poly_upper_2_16(n, t)));
            if (n >= 2) {
                emit.margin_check(detail::at("ineq-2.17", n, cnan, t),
                                  detail::le_margin(pn, poly_upper_2_17(n, t)));
                emit.margin_check(detail::at("ineq-2.16-vs-2.17", n, cnan, t),
                                  detail::le_margin(poly_upper_2_16(n, t), poly_upper_2_17(n, t)));
            }
            if (t > 1.0) {
                emit.margin_check(detail::at("ineq-2.11", n, cnan, t, true),
                                  detail::le_margin(ratio, ratio_upper_2_11(n, t)));
                emit.margin_check(detail::at("cmp-2.11-vs-2.14", n, cnan, t),
                                  detail::le_margin(ratio_upper_2_11(n, t), ratio_upper_2_14(n, t)));
            }
        }
        // crossover sign pattern on grids bracketing t*
        const double tstar = crossover_t(n);
        const double cnan2 = std::numeric_limits<double>::quiet_NaN();
        for (double t : linspace(1.0 + (tstar - 1.0) / 16.0, tstar, 16))
            emit.margin_check(detail::at("crossover-2.15", n, cnan2, t),
                              detail::le_margin(ratio_upper_2_11(n, t), ratio_upper_2_15(n, t)));
        const double tmax = std::max(tw.second, tstar + 1.0);
        for (int i = 1; i <= 16; ++i) {
            const double t = tstar + (tmax - tstar) * i / 16.0;
            emit.margin_check(detail::at("crossover-2.15", n, cnan2, t),
                              detail::le_margin(ratio_upper_2_15(n, t), ratio_upper_2_11(n, t)));
        }
    }

    return rep;
}

// Conjecture (C) scan: records the log-convexity margin at every grid point
// and cross-checks it against the independent envelope membership verdict.
inline VerifyReport scan_logconvexity(const ScanConfig& cfg) {
    cfg.validate();
    VerifyReport rep;
    detail::Emitter emit(rep, cfg.hard_tol);
    for (int n = cfg.n_min; n <= cfg.n_max; ++n) {
        for (double c : cfg.c_values) {
            const OperatorParams p(n, c);
            const auto def = p.bernstein() ? std::make_pair(0.0, 1.0) : std::make_pair(0.0, 4.0);
            const auto win = cfg.x_window.value_or(def);
            for (double x : linspace(win.first, win.second, cfg.grid_points)) {
                if (!p.contains(x)) continue;
                const SDerivatives d = detail::derivatives_dispatch(p, x, cfg.quad);
                const double scale =
                    (std::abs(d.d2S) * d.S + d.dS * d.dS) / (d.S * d.S) + std::numeric_limits<double>::min();
                const double m = d.logconv_margin();
                ViolationReport r = detail::at("conj-C", n, c, x, true);
                emit.margin_check(r, m / scale);

                const double Xp = 1.0 + 2.0 * c * x;
                if (x > 0.0 && std::abs(Xp) > 1e-12) {
                    const Envelope e = envelope(p, x);
                    const double zscale = std::abs(e.z1) + std::abs(e.z2) + 1.0;
                    const double inside = std::min(d.A() - e.z1, e.z2 - d.A());
                    const bool margin_pos = m > cfg.hard_tol * scale;
                    const bool margin_neg = m < -cfg.hard_tol * scale;
                    const bool strictly_inside = inside > cfg.hard_tol * zscale;
                    const bool strictly_outside = inside < -cfg.hard_tol * zscale;
                    if ((margin_pos && strictly_outside) || (margin_neg && strictly_inside)) {
                        ViolationReport f = detail::at("thm-2.1", n, c, x);
                        emit.hard_failure(f, -std::abs(m / scale));
                    }
                }
            }
        }
    }
    return rep;
}

// Conjecture 4.6 scan in exact rational arithmetic: coefficient symmetry
// (hard), second differences of c_{n,k} (findings) and numeric convexity of
// the Durrmeyer S_n.
inline VerifyReport scan_durrmeyer_convexity(int n_max, double hard_tol = 1e-9) {
    if (n_max < 1) throw std::invalid_argument("scan_durrmeyer_convexity: n_max must be >= 1");
    VerifyReport rep;
    detail::Emitter emit(rep, hard_tol);
    for (int n = 1; n <= n_max; ++n) {
        const CoeffSequence seq = durrmeyer_coeffs(n);
        if (!seq.symmetric()) {
            ViolationReport r = detail::at("durrmeyer-symmetry", n, std::numeric_limits<double>::quiet_NaN(),
                                           std::numeric_limits<double>::quiet_NaN());
            r.family = "durrmeyer";
            emit.hard_failure(r, -1.0);
        }
        for (int k = 1; k <= 2 * n - 1; ++k) {
            const BigRat d2 = seq.second_difference(k);
            if (d2 < 0) {
                ViolationReport r;
                r.check_id = "conj-4.6";
                r.family = "durrmeyer";
                r.n = n;
                r.k = k;
                r.conditional = true;
                r.exact_margin = to_fraction_string(d2);
                emit.hard_failure(r, static_cast<double>(d2));
            }
        }
        // consequence claimed by the conjecture: S_n convex on [0,1]
        const std::vector<double> xs = linspace(0.0, 1.0, 65);
        for (size_t i = 1; i + 1 < xs.size(); ++i) {
            const double d2s = durrmeyer_sv(n, xs[i - 1]).first - 2.0 * durrmeyer_sv(n, xs[i]).first +
                               durrmeyer_sv(n, xs[i + 1]).first;
            if (d2s < -hard_tol) {
                ViolationReport r = detail::at("conj-4.6", n, std::numeric_limits<double>::quiet_NaN(), xs[i], true);
                r.family = "durrmeyer";
                emit.hard_failure(r, d2s);
            }
        }
    }
    return rep;
}

// Adjacent-pair sign agreement of delta(V) and delta(1-S); Durrmeyer rows
// are flagged conditional (their shape rests on Conjecture 4.6).
inline VerifyReport scan_synchronicity(const std::vector<OperatorDescriptor>& families, int grid_points = 65,
                                       double hard_tol = 1e-9) {
    VerifyReport rep;
    detail::Emitter emit(rep, hard_tol);
    for (const auto& d : families) {
        std::vector<double> grid;
        const char* name = "";
        switch (d.family) {
            case Family::baskakov:
                name = d.c == -1.0 ? "bernstein" : (d.c == 0.0 ? "szasz" : "baskakov");
                grid = linspace(0.0, d.c == -1.0 ? 1.0 : 4.0, grid_points);
                break;
            case Family::kantorovich: name = "kantorovich"; grid = linspace(0.0, 1.0, grid_points); break;
            case Family::gauss_weierstrass: name = "gauss-weierstrass"; grid = linspace(0.0, 1.0, grid_points); break;
            case Family::convolution: name = "convolution"; grid = linspace(0.0, 1.0, grid_points); break;
            case Family::post_widder: name = "post-widder"; grid = linspace(1.0, 2.0, grid_points); break;
            case Family::durrmeyer: name = "durrmeyer"; grid = linspace(0.0, 1.0, grid_points); break;
            case Family::genuine_bd: name = "genuine-bd"; grid = linspace(0.0, 1.0, grid_points); break;
        }
        const bool conditional = d.family == Family::durrmeyer;

        std::vector<double> V(grid.size()), T(grid.size());
        double vmax = 0.0, tmax = 0.0;
        for (size_t i = 0; i < grid.size(); ++i) {
            const auto [S, Vx] = family_sv(d, grid[i]);
            V[i] = Vx;
            T[i] = 1.0 - S;
            vmax = std::max(vmax, std::abs(Vx));
            tmax = std::max(tmax, std::abs(T[i]));
        }
        // signs with a dead zone: deltas below 1e-12 of the column scale
        // count as flat
        auto sgn = [](double v, double scale) {
            const double dz = 1e-12 * std::max(scale, 1e-300);
            return v > dz ? 1 : (v < -dz ? -1 : 0);
        };
        for (size_t i = 0; i + 1 < grid.size(); ++i) {
            const int sv = sgn(V[i + 1] - V[i], vmax);
            const int st = sgn(T[i + 1] - T[i], tmax);
            if (sv * st < 0) {
                ViolationReport r;
                r.check_id = "synchronicity";
                r.family = name;
                r.n = d.family == Family::gauss_weierstrass || d.family == Family::convolution ? 0 : d.n;
                r.x = grid[i];
                r.y = grid[i + 1];
                r.conditional = conditional;
                emit.hard_failure(r, -std::abs((V[i + 1] - V[i]) * (T[i + 1] - T[i])));
            }
        }
    }
    return rep;
}

// Families exercised by the default synchronicity scan: the Baskakov family
// for each configured c, Kantorovich, Gauss-Weierstrass, two convolution
// kernels, Post-Widder and (conditionally) Durrmeyer.
inline std::vector<OperatorDescriptor> default_sync_families(const ScanConfig& cfg) {
    std::vector<OperatorDescriptor> fams;
    const int n = std::min(cfg.n_max, 5);
    for (double c : cfg.c_values) fams.push_back(OperatorDescriptor::baskakov(n, c));
    fams.push_back(OperatorDescriptor::plain(Family::kantorovich, n));
    fams.push_back(OperatorDescriptor::gauss_weierstrass_op(0.5));
    fams.push_back(OperatorDescriptor::convolution_op([](double) { return 1.0; }, -0.5, 0.5));
    fams.push_back(OperatorDescriptor::convolution_op(
        [](double s) {
            const double r = 0.25;
            return std::exp(-s * s / (4.0 * r)) / std::sqrt(4.0 * std::numbers::pi * r);
        },
        -12.0, 12.0));
    fams.push_back(OperatorDescriptor::plain(Family::post_widder, n));
    fams.push_back(OperatorDescriptor::plain(Family::durrmeyer, n));
    return fams;
}

// Multivariate checks: axial convexity (hard) and the section-3 equivalence
// consistency (grid artifacts report as findings).
inline VerifyReport scan_multivariate(const ScanConfig& cfg, double step = 1.0 / 16.0) {
    VerifyReport rep;
    detail::Emitter emit(rep, cfg.hard_tol);
    const int n_hi = std::min(cfg.n_max, 15);
    for (int n = std::max(1, cfg.n_min); n <= n_hi; ++n) {
        for (const auto& v : axial_convexity_scan(n, step, cfg.hard_tol)) {
            ViolationReport r;
            r.check_id = "axial-convexity";
            r.family = v.direction;
            r.n = n;
            r.x = v.x;
            r.y = v.y;
            emit.hard_failure(r, v.second_difference);
        }
        const EquivalenceReport eq = equivalence_check(n, std::min(step, 1.0 / 16.0));
        if (!eq.consistent()) {
            ViolationReport r;
            r.check_id = "equiv-sect3";
            r.n = n;
            r.conditional = true;
            emit.hard_failure(r, -1.0);
        }
    }
    return rep;
}

// Runs the selected check ids (every registry id when `ids` is empty) and
// merges the reports in registry order.
inline VerifyReport run_suite(const ScanConfig& cfg, const std::set<std::string>& ids = {}) {
    cfg.validate();
    for (const auto& id : ids)
        if (!find_check(id)) throw std::invalid_argument("run_suite: unknown check id '" + id + "'");
    auto wanted = [&](const char* id) { return ids.empty() || ids.count(id) > 0; };
    auto filter = [&](VerifyReport r) {
        if (ids.empty()) return r;
        auto keep = [&](std::vector<ViolationReport>& v) {
            std::erase_if(v, [&](const ViolationReport& rr) { return ids.count(rr.check_id) == 0; });
        };
        keep(r.violations);
        keep(r.findings);
        keep(r.grazing);
        return r;
    };

    static const std::set<std::string> inequality_ids = {
        "ineq-2.2",  "ineq-2.4",  "ineq-2.5",  "ineq-2.6",  "ineq-2.7",  "ineq-2.10",
        "ineq-2.11", "ineq-2.12", "ineq-2.13", "ineq-2.14", "ineq-2.15", "ineq-2.16",
        "ineq-2.17", "ineq-2.16-vs-2.17", "cmp-2.6-vs-2.2", "cmp-2.7-vs-2.4",
        "cmp-2.11-vs-2.14", "crossover-2.15"};

    VerifyReport rep;
    bool want_ineq = false;
    for (const auto& id : inequality_ids)
        if (wanted(id.c_str())) want_ineq = true;
    if (want_ineq) rep.merge(filter(run_inequality_suite(cfg)));
    if (wanted("conj-C") || wanted("thm-2.1")) rep.merge(filter(scan_logconvexity(cfg)));
    if (wanted("conj-4.6") || wanted("durrmeyer-symmetry"))
        rep.merge(filter(scan_durrmeyer_convexity(std::min(cfg.n_max, 40), cfg.hard_tol)));
    if (wanted("axial-convexity") || wanted("equiv-sect3")) rep.merge(filter(scan_multivariate(cfg)));
    if (wanted("synchronicity"))
        rep.merge(filter(scan_synchronicity(default_sync_families(cfg), cfg.grid_points, cfg.hard_tol)));
    return rep;
}

}  // namespace opentropy
