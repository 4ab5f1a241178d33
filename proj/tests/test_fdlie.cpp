#include <doctest.h>

#include <cmath>
#include <limits>

#include "nlosc/errors.hpp"
#include "nlosc/fdlie.hpp"
#include "nlosc/quartic.hpp"

using nlosc::RealFunction;

namespace {

RealFunction constant(double c) {
    return RealFunction{[c](double) { return c; },
                        -std::numeric_limits<double>::infinity(),
                        std::numeric_limits<double>::infinity(), "const"};
}

RealFunction identity() {
    return RealFunction{[](double x) { return x; },
                        -std::numeric_limits<double>::infinity(),
                        std::numeric_limits<double>::infinity(), "x"};
}

}  // namespace

TEST_SUITE("fdlie") {

TEST_CASE("unit_shift_of_the_identity_is_one") {
    CHECK(nlosc::lie_apply(constant(1.0), identity(), 3.0) == 1.0);
    CHECK(nlosc::lie_apply(constant(1.0), identity(), -7.25) == 1.0);
}

TEST_CASE("unit_shift_annihilates_period_one_functions") {
    RealFunction wave{[](double x) { return std::sin(2.0 * M_PI * x); },
                      -1e6, 1e6, "wave"};
    for (double x : {0.0, 0.3, 1.7, -2.4})
        CHECK(std::abs(nlosc::lie_apply(constant(1.0), wave, x)) <= 1e-12);
}

TEST_CASE("zero_shift_gives_zero_for_any_function") {
    RealFunction f{[](double x) { return std::exp(x) + x * x; }, -10.0, 10.0, "f"};
    CHECK(nlosc::lie_apply(constant(0.0), f, 1.3) == 0.0);
}

TEST_CASE("linear_shift_of_the_square_triples_it") {
    // f(x + x) - f(x) = 3 x^2 for f = x^2, exact in dyadic arguments
    RealFunction sq{[](double x) { return x * x; }, -100.0, 100.0, "sq"};
    CHECK(nlosc::lie_apply(identity(), sq, 2.0) == 12.0);
    CHECK(nlosc::lie_apply(identity(), sq, 0.5) == 0.75);
}

TEST_CASE("shift_derivative_is_linear_in_the_function") {
    RealFunction combo{[](double x) { return 2.0 * x * x + 3.0 * x * x * x; },
                       -100.0, 100.0, "combo"};
    CHECK(nlosc::lie_apply(constant(1.0), combo, 2.0) == 67.0);
}

TEST_CASE("modified_product_rule_holds_to_rounding") {
    RealFunction f{[](double x) { return std::sin(x) + 0.5 * x; }, -50.0, 50.0, "f"};
    RealFunction g{[](double x) { return std::exp(0.3 * x); }, -50.0, 50.0, "g"};
    RealFunction lam{[](double x) { return 0.7 + 0.1 * std::cos(x); }, -50.0, 49.0, "lam"};
    for (double x : {0.0, 1.1, -3.7, 8.4})
        CHECK(std::abs(nlosc::product_rule_residual(lam, f, g, x)) <= 1e-12);
}

TEST_CASE("product_rule_residual_is_exactly_zero_against_a_constant_factor") {
    // with f identically 1 every term of the residual cancels symbolically,
    // and the floating evaluation inherits the cancellation
    RealFunction g{[](double x) { return x * x - 4.0; }, -50.0, 50.0, "g"};
    CHECK(nlosc::product_rule_residual(constant(0.5), constant(1.0), g, 2.25) == 0.0);
}

TEST_CASE("shift_maps_along_x_and_a_unit_step_do_not_commute") {
    // x -> 2x then +1 lands at 2x + 1; x -> x + 1 then doubling lands at
    // 2x + 2, so the identity function reports the gap of exactly -1
    CHECK(nlosc::lie_commutator(identity(), constant(1.0), identity(), 1.0) == -1.0);
    CHECK(nlosc::lie_commutator(identity(), constant(1.0), identity(), 0.1) ==
          doctest::Approx(-1.0).epsilon(1e-14));
}

TEST_CASE("constant_shifts_commute_exactly") {
    RealFunction probe{[](double x) { return std::sin(x); }, -50.0, 50.0, "probe"};
    CHECK(nlosc::lie_commutator(constant(0.5), constant(0.25), probe, 1.0) == 0.0);
}

TEST_CASE("kernel_residual_vanishes_only_for_equal_spacing") {
    CHECK(nlosc::kernel_residual(constant(0.8), 3.2) == 0.0);
    // lambda(x) = x doubles the argument, so the residual reproduces x
    CHECK(nlosc::kernel_residual(identity(), 1.0) == 1.0);
}

TEST_CASE("series_spacing_function_has_a_positive_widening_kernel") {
    double kappa = 0.01;
    RealFunction lam{[kappa](double e) { return nlosc::lambda_pert(e, kappa); },
                     -0.5, 40.0, "lam"};
    double k = nlosc::kernel_residual(lam, 1.0);
    CHECK(k > 0.02);
    CHECK(k < 0.032);
}

TEST_CASE("domain_violations_are_reported_not_extrapolated") {
    RealFunction empty;
    CHECK_THROWS_AS(empty(0.0), nlosc::DomainError);

    RealFunction narrow{[](double x) { return x; }, 0.0, 1.0, "narrow"};
    CHECK_THROWS_AS(narrow(-0.1), nlosc::DomainError);
    CHECK_THROWS_AS(narrow(1.5), nlosc::DomainError);
    // the shifted argument 0.9 + 0.5 pushes past x_hi even though the base
    // point is inside
    CHECK_THROWS_AS(nlosc::lie_apply(constant(0.5), narrow, 0.9), nlosc::DomainError);
    CHECK(nlosc::lie_apply(constant(0.5), narrow, 0.25) == 0.5);
}

TEST_CASE("small_shifts_approach_the_ordinary_derivative") {
    RealFunction f{[](double x) { return std::sin(x); }, -10.0, 10.0, "sin"};
    double x = 0.7;
    for (double h : {1e-2, 1e-3, 1e-4}) {
        double quotient = nlosc::lie_apply(constant(h), f, x) / h;
        CHECK(std::abs(quotient - std::cos(x)) <= h);
    }
}

}  // TEST_SUITE
