#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>

#include "opentropy/catalog.hpp"

using namespace opentropy;

TEST_CASE("kantorovich closed forms") {
    auto [S, V] = kantorovich_sv(1, 0.5);
    CHECK(S == Catch::Approx(1.0).epsilon(1e-14));
    CHECK(V == Catch::Approx(1.0 / 12.0).epsilon(1e-14));
    for (int n : {1, 2, 9}) {
        auto [S0, V0] = kantorovich_sv(n, 0.0);
        CHECK(S0 == Catch::Approx(n + 1.0).epsilon(1e-14));  // F_n(0) = 1, kernel energy exceeds 1
        CHECK(V0 == Catch::Approx(1.0 / 12.0 / ((n + 1.0) * (n + 1.0))).epsilon(1e-14));
    }
    // shared F_n with the series oracle
    for (int n : {1, 3, 12}) {
        for (double x : linspace(0.0, 1.0, 17)) {
            const double f = s_series(OperatorParams(n, -1.0), x);
            CHECK(std::abs(kantorovich_sv(n, x).first / (n + 1.0) - f) <= 1e-12 * f);
        }
    }
    CHECK_THROWS_AS(kantorovich_sv(1, 1.5), std::domain_error);
}

TEST_CASE("gauss-weierstrass constants") {
    CHECK(gauss_weierstrass_sv(1.0 / (8.0 * std::numbers::pi)).first == Catch::Approx(1.0).epsilon(1e-14));
    CHECK(gauss_weierstrass_sv(0.5).second == Catch::Approx(1.0).epsilon(1e-15));
    CHECK_THROWS_AS(gauss_weierstrass_sv(0.0), std::domain_error);
    CHECK_THROWS_AS(gauss_weierstrass_sv(-1.0), std::domain_error);
}

TEST_CASE("convolution kernels") {
    // uniform density on [-1/2, 1/2]: S = 1, V = 1/12, zero mean term
    const auto uni = convolution_sv([](double) { return 1.0; }, -0.5, 0.5);
    CHECK(uni.S == Catch::Approx(1.0).epsilon(1e-12));
    CHECK(uni.V == Catch::Approx(1.0 / 12.0).epsilon(1e-12));
    CHECK(uni.mass_deficit <= 1e-12);

    // Gauss-Weierstrass kernel matches the closed-form constants
    const double r = 0.35;
    const auto gw = convolution_sv(
        [&](double s) { return std::exp(-s * s / (4.0 * r)) / std::sqrt(4.0 * std::numbers::pi * r); }, -15.0,
        15.0);
    const auto [Sref, Vref] = gauss_weierstrass_sv(r);
    CHECK(gw.S == Catch::Approx(Sref).epsilon(1e-9));
    CHECK(gw.V == Catch::Approx(Vref).epsilon(1e-9));

    // non-normalized kernel rejected with a mass-deficit message
    CHECK_THROWS_AS(convolution_sv([](double) { return 2.0; }, -0.5, 0.5), std::domain_error);
    // window too small: mass deficit reported
    CHECK_THROWS_AS(
        convolution_sv([&](double s) { return std::exp(-s * s / (4.0 * r)) / std::sqrt(4.0 * std::numbers::pi * r); },
                       -0.5, 0.5),
        std::domain_error);
}

TEST_CASE("post-widder closed forms") {
    CHECK(post_widder_sv(1, 1.0).first == Catch::Approx(0.5).epsilon(1e-15));
    CHECK(post_widder_sv(2, 1.0).first == Catch::Approx(0.5).epsilon(1e-15));
    CHECK(post_widder_sv(5, 2.0).second == Catch::Approx(4.0 / 5.0).epsilon(1e-15));
    CHECK_THROWS_AS(post_widder_sv(1, 0.0), std::domain_error);
    CHECK_THROWS_AS(post_widder_sv(1, -2.0), std::domain_error);
}

TEST_CASE("durrmeyer coefficients exact") {
    const CoeffSequence c1 = durrmeyer_coeffs(1);
    REQUIRE(c1.coeffs.size() == 3);
    CHECK(c1.coeffs[0] == BigRat(4, 3));
    CHECK(c1.coeffs[1] == BigRat(2, 3));
    CHECK(c1.coeffs[2] == BigRat(4, 3));
    CHECK(c1.second_difference(1) == BigRat(4, 3));

    for (int n : {1, 2, 7, 23, 40}) {
        const CoeffSequence c = durrmeyer_coeffs(n);
        REQUIRE(static_cast<int>(c.coeffs.size()) == 2 * n + 1);
        CHECK(c.symmetric());
        CHECK(c.coeffs[0] == BigRat(BigInt(n + 1) * (n + 1), BigInt(2 * n + 1)));
        for (const BigRat& q : c.coeffs) CHECK(q > 0);
    }
}

TEST_CASE("durrmeyer S and V") {
    // only k = 0 survives at x = 0
    CHECK(durrmeyer_sv(1, 0.0).first == Catch::Approx(4.0 / 3.0).epsilon(1e-15));
    // (4/3 + 2*(2/3) + 4/3)/4 = 1
    CHECK(durrmeyer_sv(1, 0.5).first == Catch::Approx(1.0).epsilon(1e-14));
    CHECK(durrmeyer_sv(3, 0.25).second ==
          Catch::Approx(4.0 * (6.0 * 0.25 * 0.75 + 1.0) / (25.0 * 6.0)).epsilon(1e-14));
    // coefficient symmetry makes S symmetric about 1/2
    for (int n : {1, 2, 6}) {
        for (double x : linspace(0.0, 0.5, 9)) {
            CAPTURE(n, x);
            CHECK(durrmeyer_sv(n, x).first == Catch::Approx(durrmeyer_sv(n, 1.0 - x).first).epsilon(1e-13));
        }
    }
}

TEST_CASE("genuine Bernstein-Durrmeyer") {
    // (1-x)^4 + x^4 + 4x^2(1-x)^2 at 1/2 = 6/16
    CHECK(genuine_bd_sv(2, 0.5).first == Catch::Approx(3.0 / 8.0).epsilon(1e-14));
    CHECK(genuine_bd_sv(7, 0.0).first == 1.0);
    // n = 1: empty double sum, S_1 = (1-x)^2 + x^2 = F_1
    for (double x : linspace(0.0, 1.0, 11)) {
        CHECK(genuine_bd_sv(1, x).first ==
              Catch::Approx(s_series(OperatorParams(1, -1.0), x)).epsilon(1e-14));
    }
    // basis symmetry
    for (int n : {2, 3, 8}) {
        for (double x : linspace(0.0, 1.0, 17)) {
            CAPTURE(n, x);
            CHECK(std::abs(genuine_bd_sv(n, x).first - genuine_bd_sv(n, 1.0 - x).first) <= 1e-12);
        }
    }
    CHECK(genuine_bd_sv(4, 0.3).second == Catch::Approx(2.0 * 0.3 * 0.7 / 5.0).epsilon(1e-15));
}

TEST_CASE("profile assembly") {
    const auto prof = profile(OperatorDescriptor::baskakov(2, -1.0), linspace(0.0, 1.0, 5));
    REQUIRE(prof.rows.size() == 5);
    CHECK(prof.rows.front().S == Catch::Approx(1.0));
    CHECK(prof.rows.front().renyi == Catch::Approx(0.0).margin(1e-14));
    CHECK(prof.rows.front().dS.has_value());  // analytic derivatives for the Baskakov family
    for (size_t i = 1; i < prof.rows.size(); ++i) CHECK(prof.rows[i].x > prof.rows[i - 1].x);

    const auto gw = profile(OperatorDescriptor::gauss_weierstrass_op(0.0397887), linspace(0.0, 1.0, 4));
    for (const auto& row : gw.rows) {
        CHECK(row.S == Catch::Approx(gw.rows.front().S));  // constant columns
        CHECK(row.V == Catch::Approx(gw.rows.front().V));
        CHECK_FALSE(row.dS.has_value());
    }
    CHECK(gw.rows.front().S == Catch::Approx(1.0).epsilon(1e-4));  // r ~ 1/(8 pi)

    // S decreasing, V increasing for Post-Widder on [1,2]
    const auto pw = profile(OperatorDescriptor::plain(Family::post_widder, 1), linspace(1.0, 2.0, 6));
    for (size_t i = 1; i < pw.rows.size(); ++i) {
        CHECK(pw.rows[i].S < pw.rows[i - 1].S);
        CHECK(pw.rows[i].V > pw.rows[i - 1].V);
    }
}
