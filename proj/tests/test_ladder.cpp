#include <doctest.h>

#include <cmath>
#include <vector>

#include "nlosc/errors.hpp"
#include "nlosc/ladder.hpp"
#include "nlosc/quartic.hpp"
#include "nlosc/surfaces.hpp"

using nlosc::LambdaFunction;
using nlosc::Spectrum;

TEST_SUITE("ladder") {

TEST_CASE("harmonic_ladder_is_exact_to_all_orders") {
    Spectrum s = nlosc::build_spectrum(nlosc::constant_lambda(1.0), 0.5, 20);
    REQUIRE(s.levels.size() == 21);
    REQUIRE(s.lambda_at.size() == 20);
    for (size_t n = 0; n < s.levels.size(); ++n) CHECK(s.levels[n] == n + 0.5);
    // normalization products are exactly the factorials
    double fact = 1.0;
    CHECK(s.A[0] == 1.0);
    for (size_t n = 1; n <= 20; ++n) {
        fact *= static_cast<double>(n);
        CHECK(s.A[n] == fact);
        CHECK(s.log_A[n] == doctest::Approx(std::lgamma(n + 1.0)).epsilon(1e-12));
    }
    CHECK(s.termination == Spectrum::Termination::completed);
}

TEST_CASE("ladder_recursion_and_products_hold_bitwise") {
    Spectrum s = nlosc::build_spectrum(nlosc::quartic_closed_lambda(0.01),
                                       nlosc::groundstate_pert(0.01), 30);
    for (size_t n = 1; n < s.levels.size(); ++n) {
        CHECK(s.levels[n] == s.levels[n - 1] + s.lambda_at[n - 1]);
        CHECK(s.A[n] == s.A[n - 1] * (s.levels[n] - s.e_g));
    }
}

TEST_CASE("normalization_product_equals_its_nested_form") {
    // A_n as a product of partial spacing sums must equal the product of
    // level offsets, since each offset is the sum of the spacings below it.
    Spectrum s = nlosc::build_spectrum(nlosc::quartic_closed_lambda(0.01),
                                       nlosc::groundstate_pert(0.01), 4);
    double nested = 1.0;
    for (size_t m = 1; m <= 4; ++m) {
        double partial = 0.0;
        for (size_t i = 0; i < m; ++i) partial += s.lambda_at[i];
        nested *= partial;
        CHECK(s.A[m] == doctest::Approx(nested).epsilon(1e-13));
    }
}

TEST_CASE("perturbative_ladder_tracks_the_level_series_at_small_index") {
    double kappa = 0.01;
    Spectrum s = nlosc::build_spectrum(nlosc::perturbative_lambda(kappa),
                                       nlosc::groundstate_pert(kappa), 6);
    // frozen drift of the recursion against the direct series: the two agree
    // at third order only up to accumulated index-dependent terms
    std::vector<double> max_diff = {1e-15, 5e-5, 5e-4, 2e-3, 5e-3, 1.1e-2, 3e-2};
    for (size_t n = 0; n < s.levels.size(); ++n) {
        double diff = std::abs(s.levels[n] - nlosc::energy_pert(static_cast<int>(n), kappa));
        CHECK(diff <= max_diff[n]);
    }
    // through n = 4 the agreement is at the coupling-cubed scale
    CHECK(std::abs(s.levels[4] - nlosc::energy_pert(4, kappa)) <= 5e-3);
    // by n = 5 it measurably is not; record the crossover rather than hide it
    CHECK(std::abs(s.levels[5] - nlosc::energy_pert(5, kappa)) > 5e-3);
}

TEST_CASE("bounded_spacing_exhausts_its_domain_gracefully") {
    double kappa = -0.05;
    double bound = nlosc::e_max_negative(kappa);
    // seed just above the harmonic floor; the branch does not exist below it
    Spectrum s = nlosc::build_spectrum(nlosc::quartic_negative_lambda(kappa), 0.6, 100);
    CHECK(s.termination == Spectrum::Termination::domain_exhausted);
    CHECK(s.complete_spectrum());
    CHECK(s.levels.size() < 100);
    CHECK(s.levels.back() <= bound);
    for (size_t n = 0; n < s.lambda_at.size(); ++n) CHECK(s.lambda_at[n] > 0.0);
    // spacings shrink as the ladder climbs toward the bound
    for (size_t n = 1; n < s.lambda_at.size(); ++n) CHECK(s.lambda_at[n] < s.lambda_at[n - 1]);
}

TEST_CASE("ladder_requires_a_ground_level_inside_the_domain") {
    CHECK_THROWS_AS(nlosc::build_spectrum(nlosc::quartic_closed_lambda(0.01), 0.4, 5),
                    nlosc::DomainError);
    CHECK_THROWS_AS(nlosc::build_spectrum(nlosc::constant_lambda(1.0), 0.5, -1),
                    nlosc::DomainError);
    // the perturbative ground for negative coupling sits below the floor of
    // the bounded branch, so it is not an acceptable seed there
    CHECK(nlosc::groundstate_pert(-0.05) < 0.5);
    CHECK_THROWS_AS(nlosc::build_spectrum(nlosc::quartic_negative_lambda(-0.05),
                                          nlosc::groundstate_pert(-0.05), 5),
                    nlosc::DomainError);
}

TEST_CASE("non_positive_spacing_is_rejected_at_construction") {
    CHECK_THROWS_AS(nlosc::constant_lambda(-1.0), nlosc::NonPositiveLambdaError);
    CHECK_THROWS_AS(nlosc::constant_lambda(0.0), nlosc::NonPositiveLambdaError);
}

TEST_CASE("spacing_functions_enforce_their_domains") {
    LambdaFunction lam = nlosc::quartic_closed_lambda(0.01);
    CHECK(lam.contains(1.0));
    CHECK(!lam.contains(0.4));
    CHECK_THROWS_AS(lam(0.4), nlosc::DomainError);
    CHECK(lam(1.0) == doctest::Approx(nlosc::lambda_sc_quartic(1.0, 0.01)).epsilon(1e-15));

    LambdaFunction neg = nlosc::quartic_negative_lambda(-0.05);
    CHECK(neg.e_hi() == doctest::Approx(nlosc::e_max_negative(-0.05)).epsilon(1e-15));
    CHECK_THROWS_AS(neg(10.0), nlosc::DomainError);
}

TEST_CASE("quadrature_spacing_factory_matches_the_closed_form") {
    nlosc::QuadratureConfig cfg;
    cfg.tol = 1e-11;
    LambdaFunction lam = nlosc::quadrature_lambda(nlosc::quartic_surface(0.01), cfg);
    CHECK(lam(2.0) == doctest::Approx(nlosc::lambda_sc_quartic(2.0, 0.01)).epsilon(1e-9));
    CHECK(lam.source() == LambdaFunction::Source::quadrature);
}

TEST_CASE("number_function_indexes_ladder_points_exactly") {
    Spectrum s = nlosc::build_spectrum(nlosc::quartic_closed_lambda(0.02),
                                       nlosc::groundstate_pert(0.02), 12);
    nlosc::NumberFunction N = nlosc::number_on_ladder(s);
    for (size_t n = 0; n < s.levels.size(); ++n)
        CHECK(N.index_of(s.levels[n]) == static_cast<int>(n));
    CHECK(N(s.e_g) == 0.0);
    // stepping one level raises the count by exactly one
    for (size_t n = 1; n < s.levels.size(); ++n)
        CHECK(N(s.levels[n]) - N(s.levels[n - 1]) == 1.0);
    CHECK_THROWS_AS(N.index_of(s.levels[3] + 0.01), nlosc::DomainError);
    CHECK_THROWS_AS(N.index_of(-5.0), nlosc::DomainError);
}

TEST_CASE("spacing_classification_distinguishes_the_three_regimes") {
    auto widening = nlosc::classify_lambda(nlosc::quartic_closed_lambda(0.01), 0.6, 50.0);
    CHECK(widening.kind == nlosc::SpacingClass::widening);

    auto equal = nlosc::classify_lambda(nlosc::constant_lambda(1.0), 0.6, 50.0);
    CHECK(equal.kind == nlosc::SpacingClass::asymptotically_equal_spaced);

    auto bounded = nlosc::classify_lambda(nlosc::quartic_negative_lambda(-0.05), 0.6, 1.7);
    CHECK(bounded.kind == nlosc::SpacingClass::bounded_spectrum);

    CHECK(std::string(nlosc::spacing_class_name(widening.kind)) == "widening");
    CHECK(widening.sample_e.size() == widening.residual.size());
    for (double r : widening.residual) CHECK(r > 0.0);
}

TEST_CASE("wrapped_level_lists_behave_like_ladders") {
    std::vector<double> levels = {0.5, 1.6, 2.9, 4.4};
    Spectrum s = nlosc::spectrum_from_levels(levels);
    CHECK(s.e_g == 0.5);
    REQUIRE(s.lambda_at.size() == 3);
    CHECK(s.lambda_at[0] == doctest::Approx(1.1).epsilon(1e-15));
    CHECK(s.A[2] == doctest::Approx(1.1 * 2.4).epsilon(1e-15));
    CHECK(s.termination == Spectrum::Termination::completed);
    CHECK_THROWS_AS(nlosc::spectrum_from_levels({1.0, 1.0}), nlosc::DomainError);
    CHECK_THROWS_AS(nlosc::spectrum_from_levels({2.0, 1.0}), nlosc::DomainError);
    CHECK_THROWS_AS(nlosc::spectrum_from_levels({}), nlosc::DomainError);
}

TEST_CASE("oscillation_frequency_scales_with_the_energy_quantum") {
    LambdaFunction lam = nlosc::constant_lambda(1.0);
    CHECK(nlosc::oscillation_frequency(lam, 3.0, 2.0) == 2.0);
    LambdaFunction quartic = nlosc::quartic_closed_lambda(0.01);
    CHECK(nlosc::oscillation_frequency(quartic, 2.0, 1.5) ==
          doctest::Approx(1.5 * nlosc::lambda_sc_quartic(2.0, 0.01)).epsilon(1e-15));
}

}  // TEST_SUITE
