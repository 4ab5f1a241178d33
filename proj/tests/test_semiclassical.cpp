#include <doctest.h>

#include <cmath>
#include <complex>

#include "nlosc/elliptic.hpp"
#include "nlosc/errors.hpp"
#include "nlosc/quartic.hpp"
#include "nlosc/semiclassical.hpp"
#include "nlosc/surfaces.hpp"

using nlosc::EnergySurface;
using nlosc::QuadratureConfig;

namespace {

QuadratureConfig tight() {
    QuadratureConfig cfg;
    cfg.tol = 1e-12;
    return cfg;
}

// Quadratic surface with an angle-dependent slope; still degree two in the
// phase-space coordinates, so its spacing must not depend on the energy.
EnergySurface squeezed_surface(double c) {
    EnergySurface s;
    s.value = [c](double u, double theta) { return 0.5 + u * (1.0 + c * std::cos(2.0 * theta)); };
    s.du = [c](double, double theta) { return 1.0 + c * std::cos(2.0 * theta); };
    s.floor_value = [](double) { return 0.5; };
    s.theta_period = M_PI;
    s.name = "squeezed";
    return s;
}

}  // namespace

TEST_SUITE("semiclassical") {

TEST_CASE("radial_inversion_on_the_harmonic_surface") {
    EnergySurface sho = nlosc::sho_surface();
    CHECK(nlosc::radial_solve(sho, 2.5, 0.0) == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(nlosc::radial_solve(sho, 2.5, 1.7) == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(nlosc::radial_solve(sho, 0.5 + 1e-9, 0.3) == doctest::Approx(1e-9).epsilon(1e-6));
    CHECK_THROWS_AS(nlosc::radial_solve(sho, 0.4, 0.0), nlosc::NoRootError);
    CHECK_THROWS_AS(nlosc::radial_solve(sho, 0.5, 0.0), nlosc::NoRootError);
}

TEST_CASE("radial_inversion_on_the_quartic_surface") {
    EnergySurface q = nlosc::quartic_surface(0.01);
    // at theta = 0 the root solves u + 0.04 u^2 = 2
    CHECK(nlosc::radial_solve(q, 2.5, 0.0) ==
          doctest::Approx(1.8614066163450716496).epsilon(1e-12));
    // at theta = pi/2 the interaction vanishes and the root is harmonic
    CHECK(nlosc::radial_solve(q, 2.5, M_PI / 2.0) == doctest::Approx(2.0).epsilon(1e-10));
    // the residual of the defining equation vanishes at the returned root
    double u = nlosc::radial_solve(q, 7.3, 1.1);
    CHECK(q.value(u, 1.1) == doctest::Approx(7.3).epsilon(1e-12));
}

TEST_CASE("radial_inversion_detects_the_fold_of_a_bounded_surface") {
    EnergySurface q = nlosc::quartic_surface(-0.05);
    // surface maximum at theta = 0 is 1.75; energies above are unreachable
    CHECK_THROWS_AS(nlosc::radial_solve(q, 2.0, 0.0), nlosc::NonMonotoneError);
    double u = nlosc::radial_solve(q, 1.5, 0.0);
    CHECK(q.value(u, 0.0) == doctest::Approx(1.5).epsilon(1e-12));
    // the smaller root is the physical branch below the fold
    CHECK(u < 2.5);
    // away from theta = 0 the same energy can still be reachable
    CHECK(nlosc::radial_solve(q, 2.0, M_PI / 2.0) == doctest::Approx(1.5).epsilon(1e-10));
}

TEST_CASE("harmonic_spacing_is_unity_at_any_energy") {
    EnergySurface sho = nlosc::sho_surface();
    CHECK(nlosc::lambda_sc(sho, 1.0, tight()) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(nlosc::lambda_sc(sho, 123.0, tight()) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("quadratic_surfaces_have_energy_independent_spacing") {
    EnergySurface s = squeezed_surface(0.3);
    double l1 = nlosc::lambda_sc(s, 1.0, tight());
    double l2 = nlosc::lambda_sc(s, 5.0, tight());
    double l3 = nlosc::lambda_sc(s, 40.0, tight());
    CHECK(l1 == doctest::Approx(l2).epsilon(1e-10));
    CHECK(l2 == doctest::Approx(l3).epsilon(1e-10));
    // closed form of the angular average: sqrt(1 - c^2)
    CHECK(l1 == doctest::Approx(std::sqrt(1.0 - 0.09)).epsilon(1e-10));
}

TEST_CASE("quartic_spacing_from_quadrature_matches_the_closed_form") {
    EnergySurface q = nlosc::quartic_surface(0.01);
    for (double e : {0.7, 2.0, 10.0, 80.0}) {
        CHECK(nlosc::lambda_sc(q, e, tight()) ==
              doctest::Approx(nlosc::lambda_sc_quartic(e, 0.01)).epsilon(1e-9));
    }
}

TEST_CASE("spacing_grows_slower_than_energy") {
    EnergySurface q = nlosc::quartic_surface(0.5);
    double prev_ratio = 1.0;
    for (double e : {10.0, 100.0, 1000.0, 10000.0}) {
        double ratio = nlosc::lambda_sc(q, e, tight()) / e;
        CHECK(ratio < prev_ratio);
        prev_ratio = ratio;
    }
    CHECK(prev_ratio < 1e-2);
}

TEST_CASE("phase_function_modulus_and_harmonic_winding") {
    EnergySurface sho = nlosc::sho_surface();
    for (double theta : {0.0, 1.0, M_PI, 5.0}) {
        std::complex<double> f = nlosc::phase_function(sho, 1.5, theta, tight());
        CHECK(std::abs(f) == doctest::Approx(std::sqrt(1.0)).epsilon(1e-10));
    }
    std::complex<double> half_turn = nlosc::phase_function(sho, 1.5, M_PI, tight());
    CHECK(half_turn.real() == doctest::Approx(-1.0).epsilon(1e-10));
    CHECK(half_turn.imag() == doctest::Approx(0.0).epsilon(1e-10));
    // single valued over a full turn
    std::complex<double> full_turn = nlosc::phase_function(sho, 1.5, 2.0 * M_PI, tight());
    CHECK(full_turn.real() == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(full_turn.imag() == doctest::Approx(0.0).epsilon(1e-10));
}

TEST_CASE("quartic_phase_angle_matches_the_elliptic_reduction") {
    double kappa = 0.04;
    double e = 3.0;
    EnergySurface q = nlosc::quartic_surface(kappa);
    double xi = nlosc::xi_of(e, kappa);
    double quarter = std::pow(1.0 + xi, 0.25);

    for (double theta : {0.4, 1.0, 1.4}) {
        auto params = nlosc::make_elliptic_params(e, kappa, theta);
        // partial angular integral in its elliptic form, times the spacing
        double partial = nlosc::elliptic_F(params.alpha, params.q) / (2.0 * quarter);
        double expected_angle = nlosc::lambda_sc_quartic(e, kappa) * partial;
        std::complex<double> f = nlosc::phase_function(q, e, theta, tight());
        double angle = std::arg(f);
        CHECK(angle == doctest::Approx(expected_angle).epsilon(1e-8));
        CHECK(std::abs(f) == doctest::Approx(std::sqrt(e - 0.5)).epsilon(1e-10));
    }
}

TEST_CASE("area_counting_on_the_harmonic_surface") {
    EnergySurface sho = nlosc::sho_surface();
    CHECK(nlosc::action_area(sho, 3.0, tight()) == doctest::Approx(2.5).epsilon(1e-10));
    CHECK(nlosc::number_sc(sho, 1.5, tight()) == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("area_counting_agrees_between_surface_and_spacing_forms") {
    double kappa = 0.01;
    EnergySurface q = nlosc::quartic_surface(kappa);
    QuadratureConfig cfg;
    cfg.tol = 1e-10;
    double by_surface = nlosc::action_area(q, 2.0, cfg);
    double by_lambda = nlosc::action_area_from_lambda(
        [kappa](double e) { return nlosc::lambda_sc_quartic(e, kappa); }, 0.5, 2.0, cfg);
    CHECK(by_surface == doctest::Approx(by_lambda).epsilon(1e-8));
}

TEST_CASE("counting_derivative_is_the_reciprocal_spacing") {
    double kappa = 0.01;
    EnergySurface q = nlosc::quartic_surface(kappa);
    QuadratureConfig cfg;
    cfg.tol = 1e-11;
    double e = 2.0;
    double h = 0.05;
    auto N = [&](double x) { return nlosc::action_area(q, x, cfg); };
    // two-step Richardson estimate of dN/de
    double d1 = (N(e + h) - N(e - h)) / (2.0 * h);
    double d2 = (N(e + h / 2.0) - N(e - h / 2.0)) / h;
    double deriv = (4.0 * d2 - d1) / 3.0;
    CHECK(deriv * nlosc::lambda_sc(q, e, cfg) == doctest::Approx(1.0).epsilon(1e-8));
}

}  // TEST_SUITE
