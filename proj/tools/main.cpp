// opentropy command line: entropy profiles, inequality/conjecture scans,
// exact Durrmeyer tables, Legendre bound tables and simplex scans.
//
// Exit codes: 0 success, 1 usage or numerical failure, 2 unconditional
// violation found.

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "opentropy/opentropy.hpp"

namespace {

using namespace opentropy;
using Clock = std::chrono::steady_clock;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitViolation = 2;

std::string join_args(int argc, char** argv) {
    std::string s;
    for (int i = 0; i < argc; ++i) {
        if (i) s += ' ';
        s += argv[i];
    }
    return s;
}

void write_text(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file " + path);
    out << text;
}

// CSV outputs carry their manifest next to the data: as a sidecar file when
// writing to disk, on stderr when writing to stdout.
void write_manifest_beside(const std::string& path, const ordered_json& manifest) {
    if (path.empty()) {
        std::cerr << manifest.dump(2) << "\n";
    } else {
        std::ofstream out(path + ".manifest.json", std::ios::binary);
        out << manifest.dump(2) << "\n";
    }
}

std::vector<double> parse_c_list(const std::string& text) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        size_t pos = 0;
        const double v = std::stod(item, &pos);
        if (pos != item.size()) throw CLI::ValidationError("--c", "bad shape parameter '" + item + "'");
        out.push_back(v);
    }
    if (out.empty()) throw CLI::ValidationError("--c", "empty shape parameter list");
    return out;
}

struct EntropyArgs {
    std::string family;
    int n = 1;
    double c = 1.0;
    double r = 1.0;
    std::optional<double> x_min, x_max;
    int steps = 65;
    std::string format = "csv";
    std::string output;
};

int run_entropy(const EntropyArgs& a, const std::string& cmdline) {
    const auto t0 = Clock::now();
    OperatorDescriptor desc;
    double lo = 0.0, hi = 1.0;
    if (a.family == "bernstein") {
        desc = OperatorDescriptor::baskakov(a.n, -1.0);
    } else if (a.family == "szasz") {
        desc = OperatorDescriptor::baskakov(a.n, 0.0);
        hi = 4.0;
    } else if (a.family == "baskakov") {
        desc = OperatorDescriptor::baskakov(a.n, a.c);
        hi = 4.0;
    } else if (a.family == "kantorovich") {
        desc = OperatorDescriptor::plain(Family::kantorovich, a.n);
    } else if (a.family == "gauss-weierstrass") {
        desc = OperatorDescriptor::gauss_weierstrass_op(a.r);
    } else if (a.family == "post-widder") {
        desc = OperatorDescriptor::plain(Family::post_widder, a.n);
        lo = 1.0;
        hi = 2.0;
    } else if (a.family == "durrmeyer") {
        desc = OperatorDescriptor::plain(Family::durrmeyer, a.n);
    } else if (a.family == "genuine-bd") {
        desc = OperatorDescriptor::plain(Family::genuine_bd, a.n);
    } else {
        throw CLI::ValidationError("--family", "unknown family '" + a.family + "'");
    }
    if (a.x_min) lo = *a.x_min;
    if (a.x_max) hi = *a.x_max;

    const EntropyProfile prof = profile(desc, linspace(lo, hi, a.steps));

    RunManifest manifest;
    manifest.command = cmdline;
    manifest.config = {{"family", a.family}, {"n", a.n},    {"c", a.c},        {"r", a.r},
                       {"x_min", lo},        {"x_max", hi}, {"steps", a.steps}, {"format", a.format}};
    manifest.wall_time_seconds = std::chrono::duration<double>(Clock::now() - t0).count();

    if (a.format == "csv") {
        write_text(a.output, serialize_profile_csv(prof));
        write_manifest_beside(a.output, manifest_to_json(manifest));
    } else if (a.format == "json") {
        write_text(a.output, profile_to_json(prof, manifest).dump(2) + "\n");
    } else {
        throw CLI::ValidationError("--format", "must be csv or json");
    }
    return kExitOk;
}

struct VerifyArgs {
    std::string suite = "all";
    int n_min = 1;
    int n_max = 30;
    std::string c_list = "-1,0,1";
    int grid_points = 65;
    double hard_tol = 1e-9;
    std::optional<double> x_min, x_max, t_min, t_max;
    std::string output;
};

int run_verify(const VerifyArgs& a, const std::string& cmdline) {
    const auto t0 = Clock::now();
    ScanConfig cfg;
    cfg.n_min = a.n_min;
    cfg.n_max = a.n_max;
    cfg.c_values = parse_c_list(a.c_list);
    cfg.grid_points = a.grid_points;
    cfg.hard_tol = a.hard_tol;
    if (a.x_min || a.x_max) cfg.x_window = std::make_pair(a.x_min.value_or(0.0), a.x_max.value_or(20.0));
    if (a.t_min || a.t_max) cfg.t_window = std::make_pair(a.t_min.value_or(1.0), a.t_max.value_or(10.0));
    cfg.validate();

    VerifyReport rep;
    if (a.suite == "selftest-violation") {
        // plumbing self-test: emits one synthetic unconditional violation so
        // the exit-code contract and the report pipeline can be exercised
        ViolationReport r;
        r.check_id = "selftest-violation";
        r.margin = -1.0;
        rep.violations.push_back(r);
    } else if (a.suite == "all") {
        rep = run_suite(cfg);
    } else {
        std::set<std::string> ids;
        std::stringstream ss(a.suite);
        std::string id;
        while (std::getline(ss, id, ','))
            if (!id.empty()) ids.insert(id);
        rep = run_suite(cfg, ids);  // throws on unknown ids
    }

    RunManifest manifest;
    manifest.command = cmdline;
    manifest.config = {{"suite", a.suite},          {"n_min", a.n_min},
                       {"n_max", a.n_max},          {"c", a.c_list},
                       {"grid_points", a.grid_points}, {"hard_tol", a.hard_tol}};
    manifest.wall_time_seconds = std::chrono::duration<double>(Clock::now() - t0).count();

    const bool violated = !rep.violations.empty();
    write_text(a.output, report_to_json(std::move(rep), manifest).dump(2) + "\n");
    return violated ? kExitViolation : kExitOk;
}

struct DurrmeyerArgs {
    int n = 1;
    bool check_convexity = false;
    std::string output;
};

int run_durrmeyer(const DurrmeyerArgs& a, const std::string& cmdline) {
    const auto t0 = Clock::now();
    const CoeffSequence seq = durrmeyer_coeffs(a.n);
    std::string table = "k,coefficient,second_difference\n";
    for (int k = 0; k <= 2 * a.n; ++k) {
        table += std::to_string(k);
        table += ',';
        table += to_fraction_string(seq.coeffs[k]);
        table += ',';
        if (k >= 1 && k <= 2 * a.n - 1) table += to_fraction_string(seq.second_difference(k));
        table += '\n';
    }
    write_text(a.output, table);

    RunManifest manifest;
    manifest.command = cmdline;
    manifest.config = {{"n", a.n}, {"check_convexity", a.check_convexity}};

    int exit_code = kExitOk;
    if (a.check_convexity) {
        const VerifyReport rep = scan_durrmeyer_convexity(a.n);
        manifest.unconditional_count = rep.violations.size();
        manifest.conditional_count = rep.findings.size();
        for (const auto& f : rep.findings)
            std::cerr << "finding: " << f.check_id << " n=" << f.n << " k=" << f.k << " margin "
                      << f.exact_margin << "\n";
        if (!rep.violations.empty()) exit_code = kExitViolation;
    }
    manifest.wall_time_seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    write_manifest_beside(a.output, manifest_to_json(manifest));
    return exit_code;
}

struct LegendreArgs {
    int n = 1;
    double t_min = 1.0;
    double t_max = 2.0;
    int steps = 9;
    bool crossover = false;
    std::string output;
};

int run_legendre(const LegendreArgs& a, const std::string& cmdline) {
    const auto t0 = Clock::now();
    if (a.crossover) {
        std::cout << "t* = " << format_double(crossover_t(a.n)) << "\n";
        return kExitOk;
    }
    std::string table =
        "t,P,dP_ratio,lb_2_12,ub_2_14,ub_2_15,ub_2_11,pb_2_16,pb_2_17,"
        "m_2_12,m_2_14,m_2_15,m_2_11,m_2_16,m_2_17\n";
    for (double t : linspace(a.t_min, a.t_max, a.steps)) {
        const double pn = legendre_p(a.n, t);
        const double ratio = ratio_pp(a.n, t);
        const double lb = ratio_lower_bound(a.n, t);
        const double u14 = ratio_upper_2_14(a.n, t);
        const double u15 = ratio_upper_2_15(a.n, t);
        const double b16 = poly_upper_2_16(a.n, t);
        table += format_double(t) + ',' + format_double(pn) + ',' + format_double(ratio) + ',' +
                 format_double(lb) + ',' + format_double(u14) + ',' + format_double(u15) + ',';
        table += t > 1.0 ? format_double(ratio_upper_2_11(a.n, t)) : std::string();
        table += ',' + format_double(b16) + ',';
        table += a.n >= 2 ? format_double(poly_upper_2_17(a.n, t)) : std::string();
        table += ',' + format_double(ratio - lb) + ',' + format_double(u14 - ratio) + ',' +
                 format_double(u15 - ratio) + ',';
        table += t > 1.0 ? format_double(ratio_upper_2_11(a.n, t) - ratio) : std::string();
        table += ',' + format_double(b16 - pn) + ',';
        table += a.n >= 2 ? format_double(poly_upper_2_17(a.n, t) - pn) : std::string();
        table += '\n';
    }
    write_text(a.output, table);

    RunManifest manifest;
    manifest.command = cmdline;
    manifest.config = {{"n", a.n}, {"t_min", a.t_min}, {"t_max", a.t_max}, {"steps", a.steps}};
    manifest.wall_time_seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    write_manifest_beside(a.output, manifest_to_json(manifest));
    return kExitOk;
}

struct MultivariateArgs {
    int n = 1;
    double step = 1.0 / 16.0;
    std::string check = "all";
    std::string output;
};

int run_multivariate(const MultivariateArgs& a, const std::string& cmdline) {
    const auto t0 = Clock::now();
    ordered_json result;
    bool violated = false;

    const bool all = a.check == "all";
    if (!all && a.check != "axial" && a.check != "reduction" && a.check != "product" &&
        a.check != "equivalence")
        throw CLI::ValidationError("--check", "must be axial, reduction, product, equivalence or all");

    if (all || a.check == "axial") {
        const auto violations = axial_convexity_scan(a.n, a.step);
        ordered_json arr = ordered_json::array();
        for (const auto& v : violations)
            arr.push_back(
                {{"direction", v.direction}, {"x", v.x}, {"y", v.y}, {"second_difference", v.second_difference}});
        result["axial"] = {{"violations", arr}};
        if (!violations.empty()) violated = true;
    }
    if (all || a.check == "reduction") {
        double worst = 0.0;
        const int m = static_cast<int>(std::lround(1.0 / a.step));
        for (int i = 0; i <= m; ++i) {
            for (int j = 0; i + j <= m; ++j) {
                const SimplexPoint pt(i * a.step, j * a.step);
                if (pt.y >= 1.0) continue;
                const double ref = r_n(a.n, pt);
                worst = std::max(worst, std::abs(ref - r_n_reduction(a.n, pt)) / ref);
            }
        }
        result["reduction"] = {{"max_rel_error", worst}, {"tol", 1e-12}};
        if (worst > 1e-12) violated = true;
    }
    if (all || a.check == "product") {
        double worst = 0.0;
        const int m = static_cast<int>(std::lround(1.0 / a.step));
        for (int i = 0; i <= m; ++i) {
            for (int j = 0; j <= m; ++j) {
                const double ref = q_n(a.n, i * a.step, j * a.step);
                worst = std::max(worst, std::abs(ref - q_n_double_sum(a.n, i * a.step, j * a.step)) / ref);
            }
        }
        result["product"] = {{"max_rel_error", worst}, {"tol", 1e-12}};
        if (worst > 1e-12) violated = true;
    }
    if (all || a.check == "equivalence") {
        const EquivalenceReport rep = equivalence_check(a.n, std::min(a.step, 1.0 / 16.0));
        result["equivalence"] = {{"log_f_convex", rep.log_f_convex},
                                 {"q_convex", rep.q_convex},
                                 {"log_q_convex", rep.log_q_convex},
                                 {"consistent", rep.consistent()}};
    }

    RunManifest manifest;
    manifest.command = cmdline;
    manifest.config = {{"n", a.n}, {"step", a.step}, {"check", a.check}};
    manifest.wall_time_seconds = std::chrono::duration<double>(Clock::now() - t0).count();

    ordered_json j;
    j["manifest"] = manifest_to_json(manifest);
    j["checks"] = result;
    write_text(a.output, j.dump(2) + "\n");
    return violated ? kExitViolation : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "opentropy: kernel energies, variances and Renyi/Tsallis entropies of\n"
        "positive linear operators, with inequality and conjecture scanners.\n"
        "Exit codes: 0 ok, 1 usage/numerical failure, 2 unconditional violation."};
    app.require_subcommand(1);
    const std::string cmdline = join_args(argc, argv);

    EntropyArgs ea;
    auto* entropy = app.add_subcommand("entropy", "write an entropy profile (x,S,V,renyi,tsallis,...)");
    entropy
        ->add_option("--family", ea.family,
                     "bernstein|szasz|baskakov|kantorovich|gauss-weierstrass|post-widder|"
                     "durrmeyer|genuine-bd")
        ->required();
    entropy->add_option("--n", ea.n, "operator degree")->check(CLI::PositiveNumber);
    entropy->add_option("--c", ea.c, "shape parameter for --family baskakov (-1 or >= 0)");
    entropy->add_option("--r", ea.r, "radius for --family gauss-weierstrass (> 0)");
    entropy->add_option("--x-min", ea.x_min, "grid start (default: family domain)");
    entropy->add_option("--x-max", ea.x_max, "grid end (default: family domain)");
    entropy->add_option("--steps", ea.steps, "grid points (default 65)")->check(CLI::PositiveNumber);
    entropy->add_option("--format", ea.format, "csv|json (default csv)");
    entropy->add_option("-o,--output", ea.output, "output file (default stdout)");

    VerifyArgs va;
    auto* verify = app.add_subcommand("verify", "run inequality / conjecture verification suites");
    verify->add_option("--suite", va.suite, "all, or comma-separated check ids (see --list)");
    verify->add_flag_callback(
        "--list",
        [] {
            for (const auto& c : opentropy::check_registry())
                std::cout << c.id << (c.conditional ? "  [conditional]  " : "  [unconditional]  ")
                          << c.statement << "\n";
            std::exit(kExitOk);
        },
        "print the check registry and exit");
    verify->add_option("--n-min", va.n_min, "smallest degree (default 1)")->check(CLI::PositiveNumber);
    verify->add_option("--n-max", va.n_max, "largest degree (default 30)")->check(CLI::PositiveNumber);
    verify->add_option("--c", va.c_list, "comma-separated shape parameters (default -1,0,1)");
    verify->add_option("--grid-points", va.grid_points, "points per scan grid (default 65)");
    verify->add_option("--hard-tol", va.hard_tol, "violation tolerance (default 1e-9)");
    verify->add_option("--x-min", va.x_min, "override scan window start");
    verify->add_option("--x-max", va.x_max, "override scan window end");
    verify->add_option("--t-min", va.t_min, "override t-grid start (default 1)");
    verify->add_option("--t-max", va.t_max, "override t-grid end (default 10)");
    verify->add_option("-o,--output", va.output, "report file (default stdout)");

    DurrmeyerArgs da;
    auto* durrmeyer = app.add_subcommand("durrmeyer", "exact Durrmeyer coefficient table");
    durrmeyer->add_option("--n", da.n, "degree")->required()->check(CLI::PositiveNumber);
    durrmeyer->add_flag("--check-convexity", da.check_convexity, "also run the convexity scan up to n");
    durrmeyer->add_option("-o,--output", da.output, "output file (default stdout)");

    LegendreArgs la;
    auto* legendre = app.add_subcommand("legendre", "bound-comparison table for P_n and P'_n/P_n");
    legendre->add_option("--n", la.n, "degree")->required()->check(CLI::PositiveNumber);
    legendre->add_option("--t-min", la.t_min, "t grid start (default 1)");
    legendre->add_option("--t-max", la.t_max, "t grid end (default 2)");
    legendre->add_option("--steps", la.steps, "grid points (default 9)")->check(CLI::PositiveNumber);
    legendre->add_flag("--crossover", la.crossover, "print the 2.11-vs-2.15 crossover t*");
    legendre->add_option("-o,--output", la.output, "output file (default stdout)");

    MultivariateArgs ma;
    auto* multivariate = app.add_subcommand("multivariate", "simplex / square scans for R_n and Q_n");
    multivariate->add_option("--n", ma.n, "degree")->required()->check(CLI::PositiveNumber);
    multivariate->add_option("--step", ma.step, "grid step (default 1/16)");
    multivariate->add_option("--check", ma.check, "axial|reduction|product|equivalence|all");
    multivariate->add_option("-o,--output", ma.output, "report file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*entropy) return run_entropy(ea, cmdline);
        if (*verify) return run_verify(va, cmdline);
        if (*durrmeyer) return run_durrmeyer(da, cmdline);
        if (*legendre) return run_legendre(la, cmdline);
        if (*multivariate) return run_multivariate(ma, cmdline);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
