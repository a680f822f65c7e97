#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "opentropy/legendre.hpp"

using namespace opentropy;

TEST_CASE("legendre_p recurrence values") {
    CHECK(legendre_p(0, 3.7) == 1.0);
    CHECK(legendre_p(1, 1.7) == 1.7);
    CHECK(legendre_p(2, 1.25) == Catch::Approx(1.84375).epsilon(1e-15));
    CHECK(legendre_p(3, 2.0) == Catch::Approx(17.0).epsilon(1e-15));
    for (int n : {1, 4, 11, 30}) CHECK(legendre_p(n, 1.0) == Catch::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("legendre derivative via the exact relation") {
    CHECK(legendre_p_prime(1, 2.5) == Catch::Approx(1.0).epsilon(1e-14));
    // P'_2 = 3t
    CHECK(legendre_p_prime(2, 1.25) == Catch::Approx(3.75).epsilon(1e-13));
    // endpoint value n(n+1)/2
    for (int n : {1, 2, 9, 30}) CHECK(legendre_p_prime(n, 1.0) == Catch::Approx(n * (n + 1) / 2.0));
}

TEST_CASE("t-substitution round trips") {
    CHECK(x_to_t(0.0).t == Catch::Approx(1.0));
    const TSubstitution s = x_to_t(0.25);
    CHECK(s.t == Catch::Approx(1.25).epsilon(1e-15));
    CHECK(s.sqrt_t2m1() == Catch::Approx(0.75).epsilon(1e-15));
    CHECK(s.Xp == Catch::Approx(0.5));
    // x -> t -> x and t -> x -> t to 1e-12, incl. the frozen 5/sqrt(21)
    for (double x : linspace(0.0, 0.5 - 1.0 / 64.0, 40)) {
        const TSubstitution fwd = x_to_t(x);
        CHECK(std::abs(t_to_x(fwd.t).x - x) <= 1e-12);
        // algebraic identities of the substitution
        CHECK(std::abs(fwd.sqrt_t2m1() - std::sqrt(fwd.t * fwd.t - 1.0)) <= 1e-12 * (1.0 + fwd.t));
        CHECK(std::abs(fwd.t - (1.0 - 2.0 * fwd.X) / fwd.Xp) <= 1e-12 * fwd.t);
        CHECK(fwd.t >= 1.0);
    }
    const double tstar = 5.0 / std::sqrt(21.0);
    CHECK(std::abs(x_to_t(t_to_x(tstar).x).t - tstar) <= 1e-12);
    CHECK_THROWS_AS(x_to_t(0.5), std::domain_error);
    CHECK_THROWS_AS(x_to_t(-0.1), std::domain_error);
    CHECK_THROWS_AS(t_to_x(0.99), std::domain_error);
}

TEST_CASE("f_via_legendre: frozen values and series agreement") {
    CHECK(f_via_legendre(1, 0.25) == Catch::Approx(0.625).epsilon(1e-15));
    CHECK(f_via_legendre(2, 0.25) == Catch::Approx(59.0 / 128.0).epsilon(1e-14));
    for (int n : {1, 6, 23}) CHECK(f_via_legendre(n, 0.0) == Catch::Approx(1.0).epsilon(1e-14));
    for (int n : {1, 2, 7, 20, 50}) {
        const OperatorParams p(n, -1.0);
        for (double x : linspace(0.0, 0.5 - 1.0 / 64.0, 64)) {
            const double series = s_series(p, x);
            CAPTURE(n, x);
            CHECK(std::abs(f_via_legendre(n, x) - series) <= 1e-9 * series);
        }
    }
}

TEST_CASE("ratio bounds: endpoint values") {
    for (int n : {1, 3, 12}) {
        CHECK(ratio_lower_bound(n, 1.0) == Catch::Approx(n * (n + 1) / 2.0));
    }
    CHECK(ratio_upper_2_14(1, 1.0) == Catch::Approx(2.0));
    CHECK_THROWS_AS(ratio_upper_2_11(2, 1.0), std::domain_error);
    // cross-check 2.11 against the derivative recurrence at a frozen point
    const double r = ratio_pp(2, 1.25);
    CHECK(r == Catch::Approx(3.75 / 1.84375).epsilon(1e-13));
    CHECK(ratio_upper_2_11(2, 1.25) >= r);
    CHECK(ratio_upper_2_11(2, 1.25) == Catch::Approx(2.259005569021431).epsilon(1e-13));
}

TEST_CASE("ordering chain for the ratio bounds") {
    for (int n = 1; n <= 30; ++n) {
        for (double t : linspace(1.0 + 9.0 / 64.0, 10.0, 64)) {
            const double r = ratio_pp(n, t);
            CAPTURE(n, t);
            CHECK(ratio_lower_bound(n, t) <= r * (1.0 + 1e-12) + 1e-12);
            CHECK(r <= ratio_upper_2_14(n, t) * (1.0 + 1e-12));
            CHECK(r <= ratio_upper_2_15(n, t) * (1.0 + 1e-12));
            CHECK(r <= ratio_upper_2_11(n, t) * (1.0 + 1e-12));  // conditional chain, scanned not proved
            CHECK(ratio_upper_2_11(n, t) <= ratio_upper_2_14(n, t) * (1.0 + 1e-12));
        }
    }
}

TEST_CASE("polynomial upper bounds") {
    for (int n : {2, 3, 10, 30}) {
        CHECK(poly_upper_2_16(n, 1.0) == Catch::Approx(1.0));
        CHECK(poly_upper_2_17(n, 1.0) == Catch::Approx(1.0));
    }
    CHECK(poly_upper_2_16(3, 2.0) >= 17.0);
    CHECK(poly_upper_2_16(3, 2.0) == Catch::Approx(22.242306868125477).epsilon(1e-13));
    CHECK(poly_upper_2_17(3, 2.0) == Catch::Approx(23.657978762164269).epsilon(1e-13));
    CHECK(poly_upper_2_16(2, 1.5) <= poly_upper_2_17(2, 1.5));
    CHECK_THROWS_AS(poly_upper_2_17(1, 2.0), std::domain_error);
    for (int n = 2; n <= 30; ++n) {
        for (double t : linspace(1.0, 10.0, 37)) {
            CAPTURE(n, t);
            const double p = legendre_p(n, t);
            const double b16 = poly_upper_2_16(n, t);
            const double b17 = poly_upper_2_17(n, t);
            CHECK(p <= b16 * (1.0 + 1e-12));
            CHECK(b16 <= b17 * (1.0 + 1e-12));
        }
    }
}

TEST_CASE("crossover point of the 2.11-vs-2.15 comparison") {
    CHECK(crossover_t(1) == Catch::Approx(5.0 / std::sqrt(21.0)).epsilon(1e-15));
    for (int n : {1, 2, 5, 17}) {
        const double ts = crossover_t(n);
        CHECK(ts > 1.0);
        // t/(t+sqrt(t^2-1)) equals (3n+2)/(4n+3) at t*
        const double lhs = ts / (ts + std::sqrt(ts * ts - 1.0));
        CHECK(lhs == Catch::Approx((3.0 * n + 2.0) / (4.0 * n + 3.0)).epsilon(1e-12));
        // sign pattern on both sides
        for (int i = 1; i <= 12; ++i) {
            const double tl = 1.0 + (ts - 1.0) * i / 13.0;
            const double tr = ts + (10.0 - ts) * i / 12.0;
            CAPTURE(n, tl, tr);
            CHECK(ratio_upper_2_11(n, tl) <= ratio_upper_2_15(n, tl) * (1.0 + 1e-12));
            CHECK(ratio_upper_2_11(n, tr) >= ratio_upper_2_15(n, tr) * (1.0 - 1e-12));
        }
    }
}
