#include <doctest.h>

#include <cmath>
#include <vector>

#include "nlosc/elliptic.hpp"
#include "nlosc/errors.hpp"
#include "nlosc/kappa_poly.hpp"
#include "nlosc/oscillator.hpp"
#include "nlosc/quartic.hpp"
#include "nlosc/rational.hpp"
#include "nlosc/tilde_solver.hpp"

using nlosc::KappaPoly;
using nlosc::Rational;

namespace {

// Exact second-order level as a coupling polynomial, built from rationals so
// ladder comparisons can be done symbolically for every index.
KappaPoly energy_poly(long long n) {
    KappaPoly e(Rational(2 * n + 1, 2));
    e += KappaPoly::power(1, Rational(3 * (2 * n * n + 2 * n + 1), 4));
    e += KappaPoly::power(2, -(Rational(17 * n * n * n, 4) + Rational(51 * n * n, 8) +
                               Rational(59 * n, 8) + Rational(21, 8)));
    return e;
}

}  // namespace

TEST_SUITE("quartic") {

TEST_CASE("energy_bound_for_negative_coupling") {
    CHECK(nlosc::e_max_negative(-0.0625) == 1.5);
    CHECK(nlosc::e_max_negative(-0.01) == doctest::Approx(6.75).epsilon(1e-15));
    CHECK_THROWS_AS(nlosc::e_max_negative(0.01), nlosc::DomainError);
}

TEST_CASE("perturbative_levels_match_hand_evaluations") {
    CHECK(nlosc::groundstate_pert(0.01) == doctest::Approx(0.5072375).epsilon(1e-15));
    CHECK(nlosc::groundstate_pert(0.0) == 0.5);
    CHECK(nlosc::energy_pert(0, 0.01) == doctest::Approx(0.5072375).epsilon(1e-15));
    CHECK(nlosc::energy_pert(1, 0.01) == doctest::Approx(1.5354375).epsilon(1e-15));
    CHECK(nlosc::energy_pert(3, 0.0) == 3.5);
    CHECK(nlosc::energy_sc_series(5, 0.01) == doctest::Approx(5.75725).epsilon(1e-15));
    CHECK(nlosc::lambda_sc_series(2.0, 0.01) == doctest::Approx(1.04111875).epsilon(1e-15));
    CHECK_THROWS_AS(nlosc::energy_pert(-1, 0.01), nlosc::DomainError);
}

TEST_CASE("perturbative_spacing_agrees_with_the_operator_solution") {
    auto sol = nlosc::solve_tilde_a(2, nlosc::OscillatorSpec::quartic(0.01));
    for (double e : {0.6, 1.3, 4.0})
        for (double kappa : {0.0, 0.003, 0.02})
            CHECK(nlosc::lambda_pert(e, kappa) ==
                  doctest::Approx(nlosc::lambda_eval(sol.lambda_y, e, kappa)).epsilon(1e-14));
}

TEST_CASE("ladder_recursion_reproduces_the_level_series_symbolically") {
    // e_{n+1} = e_n + lambda(e_n) holds exactly through second order in the
    // coupling for every index, checked in rational arithmetic.
    auto sol = nlosc::solve_tilde_a(2, nlosc::OscillatorSpec::quartic(0.01));
    REQUIRE(sol.lambda_y.size() == 3);
    for (long long n = 0; n <= 20; ++n) {
        KappaPoly en = energy_poly(n);
        KappaPoly y = en + KappaPoly(Rational(1, 2));
        KappaPoly lam = sol.lambda_y[0] + sol.lambda_y[1] * y + sol.lambda_y[2] * y * y;
        CHECK(energy_poly(n + 1) - en == lam.truncated(2));
    }
    CHECK(energy_poly(0) == sol.ground_level);
}

TEST_CASE("closed_form_spacing_approaches_the_series_for_small_coupling") {
    CHECK(nlosc::lambda_sc_quartic(1.5, 1e-6) ==
          doctest::Approx(nlosc::lambda_sc_series(1.5, 1e-6)).epsilon(1e-12));
    CHECK(nlosc::lambda_sc_quartic(3.0, 1e-4) ==
          doctest::Approx(nlosc::lambda_sc_series(3.0, 1e-4)).epsilon(1e-8));
    CHECK(nlosc::lambda_sc_quartic_negative(1.5, -1e-6) ==
          doctest::Approx(nlosc::lambda_sc_series(1.5, -1e-6)).epsilon(1e-12));
}

TEST_CASE("closed_form_spacing_rejects_invalid_arguments") {
    CHECK_THROWS_AS(nlosc::lambda_sc_quartic(0.4, 0.01), nlosc::DomainError);
    CHECK_THROWS_AS(nlosc::lambda_sc_quartic(2.0, -0.01), nlosc::DomainError);
    CHECK_THROWS_AS(nlosc::lambda_sc_quartic_negative(2.0, 0.01), nlosc::DomainError);
}

TEST_CASE("negative_branch_vanishes_at_the_bound_and_throws_beyond") {
    double kappa = -0.0625;
    double bound = nlosc::e_max_negative(kappa);
    CHECK(nlosc::lambda_sc_quartic_negative(bound, kappa) == 0.0);
    CHECK(nlosc::lambda_sc_quartic_negative(bound - 1e-9, kappa) > 0.0);
    CHECK(nlosc::lambda_sc_quartic_negative(bound - 1e-9, kappa) < 1.0);

    try {
        nlosc::lambda_sc_quartic_negative(2.0, -0.05);
        FAIL("expected the energy bound to be enforced");
    } catch (const nlosc::BeyondBoundError& err) {
        CHECK(err.e_max == doctest::Approx(nlosc::e_max_negative(-0.05)).epsilon(1e-15));
    }
}

TEST_CASE("negative_branch_decreases_toward_the_bound") {
    double kappa = -0.05;
    double bound = nlosc::e_max_negative(kappa);
    double prev = 1.1;
    for (double f : {0.0, 0.5, 0.9, 0.99, 0.999999}) {
        double e = 0.5 + f * (bound - 0.5);
        double lam = f == 0.0 ? 1.0 : nlosc::lambda_sc_quartic_negative(e, kappa);
        CHECK(lam < prev);
        prev = lam;
    }
    // the approach to zero is only logarithmic in the distance to the bound
    double near = nlosc::lambda_sc_quartic_negative(0.5 + (1.0 - 1e-6) * (bound - 0.5), kappa);
    CHECK(near > 0.2);
}

TEST_CASE("elliptic_parameters_expose_the_expected_branch") {
    auto pos = nlosc::make_elliptic_params(2.0, 0.01, 0.7);
    CHECK(pos.xi == doctest::Approx(0.24).epsilon(1e-15));
    CHECK(pos.q >= 0.0);
    CHECK(pos.q < 0.5);
    CHECK(std::isnan(pos.q_prime));
    // amplitude sweeps 0 to pi as theta sweeps the quarter period
    auto at_zero = nlosc::make_elliptic_params(2.0, 0.01, 0.0);
    CHECK(at_zero.alpha == doctest::Approx(0.0).epsilon(1e-12));
    auto at_quarter = nlosc::make_elliptic_params(2.0, 0.01, M_PI / 2.0);
    CHECK(at_quarter.alpha == doctest::Approx(M_PI).epsilon(1e-6));

    auto neg = nlosc::make_elliptic_params(1.0, -0.05, 0.7);
    CHECK(neg.xi == doctest::Approx(-0.4).epsilon(1e-15));
    CHECK(neg.q_prime > 0.0);
    CHECK(neg.q_prime < 1.0);
    CHECK(std::isnan(neg.q));
    CHECK_THROWS_AS(nlosc::make_elliptic_params(6.0, -0.05, 0.0), nlosc::BeyondBoundError);
}

TEST_CASE("asymptotic_spacing_forms_are_mutually_consistent") {
    // the two published renderings of the same prefactor
    for (double e : {10.0, 1234.5}) {
        double via_gamma = nlosc::wkb_spacing(e, 0.3);
        double via_K = M_PI * std::pow(0.3 * e, 0.25) / nlosc::elliptic_K(1.0 / std::sqrt(2.0));
        CHECK(via_gamma == doctest::Approx(via_K).epsilon(1e-13));
    }
    // the level asymptote differentiates to the spacing asymptote
    double kappa = 1.0;
    double n = 1.0e6;
    double de = nlosc::wkb_energy(static_cast<int>(n) + 1, kappa) -
                nlosc::wkb_energy(static_cast<int>(n), kappa);
    double spacing = nlosc::wkb_spacing(nlosc::wkb_energy(static_cast<int>(n), kappa), kappa);
    CHECK(de == doctest::Approx(spacing).epsilon(1e-3));
    // closed form approaches the asymptote from below at large energy
    double e_big = 1.0e7;
    CHECK(nlosc::lambda_sc_quartic(e_big, kappa) ==
          doctest::Approx(nlosc::wkb_spacing(e_big, kappa)).epsilon(1e-3));
}

}  // TEST_SUITE
