#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "opentropy/basis.hpp"

using namespace opentropy;

TEST_CASE("operator params validate n and c") {
    CHECK_THROWS_AS(OperatorParams(0, -1.0), std::domain_error);
    CHECK_THROWS_AS(OperatorParams(3, -0.5), std::domain_error);
    CHECK_NOTHROW(OperatorParams(1, -1.0));
    CHECK_NOTHROW(OperatorParams(1, 0.0));
    CHECK_NOTHROW(OperatorParams(1, 2.5));
}

TEST_CASE("domain I_c") {
    const OperatorParams bern(2, -1.0);
    CHECK(bern.contains(0.0));
    CHECK(bern.contains(1.0));
    CHECK_FALSE(bern.contains(1.5));
    const OperatorParams szasz(2, 0.0);
    CHECK(szasz.contains(100.0));
    CHECK_FALSE(szasz.contains(-0.1));
}

TEST_CASE("basis weights: frozen values") {
    // C(2,1) (1/2)(1/2)
    CHECK(basis_weight(OperatorParams(2, -1.0), 1, 0.5) == Catch::Approx(0.5).epsilon(1e-15));
    // all mass at j = 0 when x = 0
    CHECK(basis_weight(OperatorParams(7, -1.0), 0, 0.0) == 1.0);
    CHECK(basis_weight(OperatorParams(4, 0.0), 0, 0.0) == 1.0);
    CHECK(basis_weight(OperatorParams(4, 1.0), 0, 0.0) == 1.0);
    CHECK(basis_weight(OperatorParams(4, 0.0), 3, 0.0) == 0.0);
    // Poisson weight (nx)^j e^{-nx}/j! at n=1, j=1, x=1
    CHECK(basis_weight(OperatorParams(1, 0.0), 1, 1.0) == Catch::Approx(std::exp(-1.0)).epsilon(1e-14));
}

TEST_CASE("basis weight domain errors") {
    CHECK_THROWS_AS(basis_weight(OperatorParams(2, -1.0), 3, 0.5), std::domain_error);
    CHECK_THROWS_AS(basis_weight(OperatorParams(2, -1.0), 0, 1.5), std::domain_error);
    CHECK_THROWS_AS(basis_weight(OperatorParams(2, 0.0), 0, -1.0), std::domain_error);
}

TEST_CASE("s_series: frozen values") {
    // direct finite sum 81/256 + 36/256 + 1/256
    CHECK(s_series(OperatorParams(2, -1.0), 0.25) == Catch::Approx(59.0 / 128.0).epsilon(1e-15));
    CHECK(s_series(OperatorParams(5, -1.0), 0.0) == 1.0);
    CHECK(s_series(OperatorParams(3, 0.0), 0.0) == 1.0);
    CHECK(s_series(OperatorParams(3, 2.0), 0.0) == 1.0);
    // closed form e^{-2nx} I0(2nx): frozen with 40-digit reference arithmetic
    CHECK(s_series(OperatorParams(1, 0.0), 0.5) == Catch::Approx(0.46575960759364044).epsilon(1e-13));
    // geometric tail: S_{1,1}(1) = sum 4^{-1-j} = 1/3, same for S_{2,2}(1/2)
    CHECK(s_series(OperatorParams(1, 1.0), 1.0) == Catch::Approx(1.0 / 3.0).epsilon(1e-12));
    CHECK(s_series(OperatorParams(2, 2.0), 0.5) == Catch::Approx(1.0 / 3.0).epsilon(1e-12));
}

TEST_CASE("variance closed form") {
    CHECK(variance(OperatorParams(1, 0.0), 2.0) == Catch::Approx(2.0));
    CHECK(variance(OperatorParams(9, 3.0), 0.0) == 0.0);
    CHECK(variance(OperatorParams(2, -1.0), 0.5) == Catch::Approx(0.125).epsilon(1e-15));
}

TEST_CASE("entropy transforms") {
    CHECK(renyi_entropy(1.0) == 0.0);
    CHECK(tsallis_entropy(1.0) == 0.0);
    CHECK(renyi_entropy(0.5) == Catch::Approx(std::log(2.0)).epsilon(1e-15));
    CHECK(tsallis_entropy(0.5) == 0.5);
    // from F_2(1/2) = C(4,2)/16 = 3/8
    const double S = s_series(OperatorParams(2, -1.0), 0.5);
    CHECK(S == Catch::Approx(3.0 / 8.0).epsilon(1e-15));
    CHECK(renyi_entropy(S) == Catch::Approx(std::log(8.0 / 3.0)).epsilon(1e-14));
    CHECK(tsallis_entropy(S) == Catch::Approx(5.0 / 8.0).epsilon(1e-14));
    CHECK_THROWS_AS(renyi_entropy(0.0), std::domain_error);
    CHECK_THROWS_AS(renyi_entropy(-1.0), std::domain_error);
}

TEST_CASE("partition of unity on grids") {
    for (int n : {1, 2, 5, 13, 30}) {
        for (double c : {-1.0, 0.0, 1.0, 2.0}) {
            const OperatorParams p(n, c);
            const double hi = c == -1.0 ? 1.0 : 4.0;
            for (double x : linspace(0.0, hi, 17)) {
                CAPTURE(n, c, x);
                CHECK(std::abs(weight_sum(p, x) - 1.0) <= 1e-12);
            }
        }
    }
}

TEST_CASE("S stays in (0,1] with equality only at the endpoints") {
    for (int n : {1, 3, 8}) {
        for (double c : {-1.0, 0.0, 1.5}) {
            const OperatorParams p(n, c);
            const double hi = c == -1.0 ? 1.0 : 3.0;
            for (double x : linspace(0.0, hi, 33)) {
                const double S = s_series(p, x);
                CAPTURE(n, c, x);
                CHECK(S > 0.0);
                CHECK(S <= 1.0 + 1e-15);
                const bool at_unit_endpoint = x == 0.0 || (c == -1.0 && x == 1.0);
                if (at_unit_endpoint)
                    CHECK(S == Catch::Approx(1.0).epsilon(1e-14));
                else
                    CHECK(S < 1.0);
            }
        }
    }
}

TEST_CASE("Bernstein symmetry F_n(x) = F_n(1-x)") {
    for (int n : {1, 2, 7, 19}) {
        const OperatorParams p(n, -1.0);
        for (double x : linspace(0.0, 0.5, 26)) {
            CHECK(std::abs(s_series(p, x) - s_series(p, 1.0 - x)) <= 1e-14);
        }
    }
}

TEST_CASE("transforms are order-reversing in S") {
    std::mt19937 rng(20240817);
    std::uniform_real_distribution<double> dist(1e-6, 1.0);
    for (int i = 0; i < 200; ++i) {
        double a = dist(rng), b = dist(rng);
        if (a == b) continue;
        if (a > b) std::swap(a, b);
        CHECK(renyi_entropy(a) > renyi_entropy(b));
        CHECK(tsallis_entropy(a) > tsallis_entropy(b));
    }
}

TEST_CASE("series tolerance and convergence guard") {
    CHECK_THROWS_AS(s_series(OperatorParams(1, 0.0), 1.0, -1.0), std::invalid_argument);
    // far out on the axis the truncated series stays positive and under the
    // proven 1/sqrt(4nx+1) envelope
    const OperatorParams p(3, 0.0);
    const double s = s_series(p, 40.0);
    CHECK(s > 0.0);
    CHECK(s <= 1.0 / std::sqrt(4.0 * 3 * 40.0 + 1.0));
}
