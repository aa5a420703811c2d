// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "leoscat/constants.hpp"
#include "leoscat/numerics.hpp"

using namespace leoscat;

namespace {

QuadratureSpec refined(int points = 1000, QuadratureRule rule = QuadratureRule::trapezoid) {
    QuadratureSpec spec;
    spec.points_per_axis = points;
    spec.rule = rule;
    spec.refine = true;
    return spec;
}

} // namespace

TEST_CASE("integrate_1d reproduces analytic values") {
    CHECK(integrate_1d([](double x) { return std::sin(x); }, Bracket{0.0, kPi}, refined()) ==
          doctest::Approx(2.0).epsilon(1e-6));
    CHECK(integrate_1d([](double) { return 1.0; }, Bracket{0.0, 1.0}) == doctest::Approx(1.0));

    // Inverse-square-root endpoint singularities are integrable with the
    // midpoint rule; convergence goes like sqrt(h), so the point count must
    // carry the accuracy.
    QuadratureSpec singular;
    singular.points_per_axis = 4000000;
    singular.rule = QuadratureRule::midpoint;
    const double arcsine = integrate_1d([](double u) { return 1.0 / std::sqrt(1.0 - u * u); },
                                        Bracket{-1.0, 1.0}, singular);
    CHECK(arcsine == doctest::Approx(kPi).epsilon(1e-3 / kPi));
    CHECK(std::abs(arcsine - kPi) < 1e-3);
}

TEST_CASE("integrate_1d is exact for constants and linear integrands") {
    for (int n : {2, 3, 10, 1000}) {
        QuadratureSpec spec;
        spec.points_per_axis = n;
        CHECK(integrate_1d([](double) { return 3.5; }, Bracket{-2.0, 5.0}, spec) ==
              doctest::Approx(3.5 * 7.0).epsilon(1e-15));
        CHECK(integrate_1d([](double x) { return 2.0 * x + 1.0; }, Bracket{0.0, 4.0}, spec) ==
              doctest::Approx(20.0).epsilon(1e-14));
    }
}

TEST_CASE("integrate_2d reproduces analytic values") {
    const double hemisphere = integrate_2d([](double, double b) { return std::cos(b); },
                                           Bracket{0.0, kTwoPi}, Bracket{0.0, kHalfPi}, refined());
    CHECK(std::abs(hemisphere - kTwoPi) < 1e-6);

    CHECK(integrate_2d([](double, double) { return 1.0; }, Bracket{0.0, 1.0}, Bracket{0.0, 1.0}) ==
          doctest::Approx(1.0));

    const double mixed =
        integrate_2d([](double, double b) { return std::sin(b) * std::cos(b); },
                     Bracket{0.0, kTwoPi}, Bracket{0.0, kHalfPi}, refined());
    CHECK(std::abs(mixed - kPi) < 1e-6);
}

TEST_CASE("doubling the grid never worsens the example integrals") {
    auto err_sin = [](int n) {
        QuadratureSpec spec;
        spec.points_per_axis = n;
        return std::abs(
            integrate_1d([](double x) { return std::sin(x); }, Bracket{0.0, kPi}, spec) - 2.0);
    };
    auto err_hemisphere = [](int n) {
        QuadratureSpec spec;
        spec.points_per_axis = n;
        return std::abs(integrate_2d([](double, double b) { return std::cos(b); },
                                     Bracket{0.0, kTwoPi}, Bracket{0.0, kHalfPi}, spec) -
                        kTwoPi);
    };
    auto err_arcsine = [](int n) {
        QuadratureSpec spec;
        spec.points_per_axis = n;
        spec.rule = QuadratureRule::midpoint;
        return std::abs(integrate_1d([](double u) { return 1.0 / std::sqrt(1.0 - u * u); },
                                     Bracket{-1.0, 1.0}, spec) -
                        kPi);
    };
    int n = 100;
    for (int k = 0; k < 4; ++k, n *= 2) {
        CHECK(err_sin(2 * n) <= err_sin(n) + 1e-15);
        CHECK(err_arcsine(2 * n) <= err_arcsine(n) + 1e-15);
    }
    CHECK(err_hemisphere(400) <= err_hemisphere(200) + 1e-15);
}

TEST_CASE("integrand errors are reported with the offending node") {
    auto bad = [](double x) { return x == 0.5 ? std::nan("") : 1.0; };
    QuadratureSpec spec;
    spec.points_per_axis = 3; // nodes 0, 0.5, 1
    CHECK_THROWS_AS(integrate_1d(bad, Bracket{0.0, 1.0}, spec), evaluation_error);
    try {
        integrate_1d(bad, Bracket{0.0, 1.0}, spec);
    } catch (const evaluation_error& e) {
        CHECK(std::string(e.what()).find("0.5") != std::string::npos);
    }
}

TEST_CASE("refinement cap raises a convergence error carrying both estimates") {
    // sqrt(h) convergence cannot meet a 1e-6 relative tolerance within the
    // five-doubling budget from a 1000-point start.
    QuadratureSpec spec;
    spec.points_per_axis = 1000;
    spec.rule = QuadratureRule::midpoint;
    spec.refine = true;
    spec.refinement_tolerance = 1e-6;
    bool thrown = false;
    try {
        integrate_1d([](double u) { return 1.0 / std::sqrt(1.0 - u * u); }, Bracket{-1.0, 1.0},
                     spec);
    } catch (const convergence_error& e) {
        thrown = true;
        CHECK(e.previous_estimate() > 3.0);
        CHECK(e.last_estimate() > 3.0);
        CHECK(e.last_estimate() < kPi);
        CHECK(std::abs(e.last_estimate() - kPi) < std::abs(e.previous_estimate() - kPi));
    }
    CHECK(thrown);
}

TEST_CASE("quadrature argument validation") {
    QuadratureSpec spec;
    spec.points_per_axis = 1;
    CHECK_THROWS_AS(integrate_1d([](double) { return 1.0; }, Bracket{0.0, 1.0}, spec),
                    std::invalid_argument);
    CHECK_THROWS_AS(integrate_1d([](double) { return 1.0; }, Bracket{1.0, 0.0}),
                    std::invalid_argument);
}

TEST_CASE("find_root solves the analytic examples") {
    CHECK(find_root([](double x) { return x * x - 2.0; }, Bracket{1.0, 2.0}, 1e-9) ==
          doctest::Approx(std::sqrt(2.0)).epsilon(1e-9));
    CHECK(find_root([](double x) { return x; }, Bracket{-1.0, 1.0}, 1e-9) ==
          doctest::Approx(0.0).scale(1.0).epsilon(1e-9));
    CHECK(find_root([](double x) { return std::cos(x); }, Bracket{1.0, 2.0}, 1e-9) ==
          doctest::Approx(kHalfPi).epsilon(1e-9));
}

TEST_CASE("find_root is independent of the acceleration strategy") {
    auto g = [](double x) { return std::cos(x) - x * 0.1; };
    const double tol = 1e-10;
    RootOptions plain;
    plain.accelerate = false;
    const double accelerated = find_root(g, Bracket{0.0, 3.0}, tol);
    const double bisected = find_root(g, Bracket{0.0, 3.0}, tol, plain);
    CHECK(std::abs(accelerated - bisected) <= 2.0 * tol);
}

TEST_CASE("find_root rejects bad brackets and tolerances") {
    CHECK_THROWS_AS(find_root([](double x) { return x * x + 1.0; }, Bracket{-1.0, 1.0}, 1e-9),
                    bracketing_error);
    CHECK_THROWS_AS(find_root([](double x) { return x; }, Bracket{-1.0, 1.0}, 0.0),
                    std::invalid_argument);
    CHECK_THROWS_AS(find_root([](double x) { return x; }, Bracket{-1.0, 1.0}, -1.0),
                    std::invalid_argument);
}
