#include <doctest.h>

#include <cmath>

#include "nlosc/errors.hpp"
#include "nlosc/quadrature.hpp"

using nlosc::integrate;
using nlosc::QuadratureError;

TEST_SUITE("quadrature") {

TEST_CASE("polynomials_integrate_to_machine_accuracy") {
    auto sq = [](double x) { return x * x; };
    CHECK(integrate(sq, 0.0, 1.0, 1e-12) == doctest::Approx(1.0 / 3.0).epsilon(1e-15));

    // a 15-point panel is exact through degree 29
    auto p20 = [](double x) { return std::pow(x, 20); };
    CHECK(integrate(p20, 0.0, 1.0, 1e-12) == doctest::Approx(1.0 / 21.0).epsilon(1e-14));

    auto cubic = [](double x) { return 2.0 * x * x * x - x + 0.25; };
    CHECK(integrate(cubic, -1.0, 3.0, 1e-12) ==
          doctest::Approx(0.5 * (81.0 - 1.0) - 0.5 * (9.0 - 1.0) + 0.25 * 4.0).epsilon(1e-14));
}

TEST_CASE("transcendental_integrands_meet_the_tolerance") {
    auto s = [](double x) { return std::sin(x); };
    CHECK(integrate(s, 0.0, M_PI, 1e-12) == doctest::Approx(2.0).epsilon(1e-13));

    auto g = [](double x) { return std::exp(-x * x); };
    CHECK(integrate(g, -6.0, 6.0, 1e-12) == doctest::Approx(std::sqrt(M_PI)).epsilon(1e-12));

    // integrable endpoint spike forces deep adaptive refinement
    auto spike = [](double x) { return 1.0 / std::sqrt(x + 1e-4); };
    double exact = 2.0 * (std::sqrt(1.0 + 1e-4) - std::sqrt(1e-4));
    CHECK(integrate(spike, 0.0, 1.0, 1e-10) == doctest::Approx(exact).epsilon(1e-9));
}

TEST_CASE("orientation_and_degenerate_intervals") {
    auto f = [](double x) { return x; };
    CHECK(integrate(f, 1.0, 0.0, 1e-12) == doctest::Approx(-0.5).epsilon(1e-14));
    CHECK(integrate(f, 2.0, 2.0, 1e-12) == 0.0);
}

TEST_CASE("results_are_reproducible_byte_for_byte") {
    auto f = [](double x) { return std::cos(3.0 * x) / (1.1 + std::sin(x)); };
    double a = integrate(f, 0.0, 5.0, 1e-11);
    double b = integrate(f, 0.0, 5.0, 1e-11);
    CHECK(a == b);
}

TEST_CASE("divergent_integrand_exhausts_the_depth_budget") {
    auto div = [](double x) { return 1.0 / x; };
    CHECK_THROWS_AS(integrate(div, 0.0, 1.0, 1e-12, 12), QuadratureError);
}

TEST_CASE("invalid_tolerance_is_rejected") {
    auto f = [](double x) { return x; };
    CHECK_THROWS_AS(integrate(f, 0.0, 1.0, 0.0), nlosc::Error);
    CHECK_THROWS_AS(integrate(f, 0.0, 1.0, -1e-6), nlosc::Error);
}

}  // TEST_SUITE
