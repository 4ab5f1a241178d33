#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <vector>

#include "nlosc/errors.hpp"
#include "nlosc/oracle.hpp"
#include "nlosc/oscillator.hpp"
#include "nlosc/quartic.hpp"

using nlosc::FockMatrix;
using nlosc::OscillatorSpec;

TEST_SUITE("oracle") {

TEST_CASE("harmonic_matrix_is_its_own_diagonal") {
    FockMatrix M = nlosc::build_hamiltonian_matrix(OscillatorSpec::sho(), 16);
    for (std::size_t i = 0; i < 16; ++i)
        for (std::size_t j = 0; j < 16; ++j)
            CHECK(M.at(i, j) == (i == j ? i + 0.5 : 0.0));
    auto eig = nlosc::eigenvalues_symmetric(M, 16);
    for (std::size_t k = 0; k < 16; ++k)
        CHECK(eig.values[k] == doctest::Approx(k + 0.5).epsilon(1e-13));
}

TEST_CASE("quartic_matrix_entries_match_hand_values") {
    double kappa = 0.01;
    FockMatrix M = nlosc::build_hamiltonian_matrix(OscillatorSpec::quartic(kappa), 12);
    CHECK(M.at(0, 0) == doctest::Approx(0.5 + 0.75 * kappa).epsilon(1e-15));
    CHECK(M.at(2, 0) == doctest::Approx(kappa / 4.0 * 6.0 * std::sqrt(2.0)).epsilon(1e-14));
    CHECK(M.at(4, 0) == doctest::Approx(kappa / 4.0 * std::sqrt(24.0)).epsilon(1e-14));
    for (std::size_t n = 0; n < 12; ++n)
        CHECK(M.at(n, n) ==
              doctest::Approx(n + 0.5 +
                              kappa / 4.0 * 3.0 * (2.0 * n * n + 2.0 * n + 1.0))
                  .epsilon(1e-14));
    // symmetry holds bitwise and the coupling only links |i-j| in {0,2,4}
    for (std::size_t i = 0; i < 12; ++i)
        for (std::size_t j = 0; j < 12; ++j) {
            CHECK(M.at(i, j) == M.at(j, i));
            std::size_t gap = i > j ? i - j : j - i;
            if (gap != 0 && gap != 2 && gap != 4) CHECK(M.at(i, j) == 0.0);
        }
}

TEST_CASE("two_by_two_matrix_reproduces_the_quadratic_formula") {
    FockMatrix M;
    M.dim = 2;
    M.values = {0.7, 0.3, 0.3, -0.2};
    auto eig = nlosc::eigenvalues_symmetric(M, 2);
    double mean = 0.25;
    double delta = std::sqrt(0.45 * 0.45 + 0.09);
    CHECK(eig.values[0] == doctest::Approx(mean - delta).epsilon(1e-14));
    CHECK(eig.values[1] == doctest::Approx(mean + delta).epsilon(1e-14));
}

TEST_CASE("eigenvalues_settle_between_basis_sizes") {
    double kappa = 0.01;
    FockMatrix small = nlosc::build_hamiltonian_matrix(OscillatorSpec::quartic(kappa), 256);
    FockMatrix big = nlosc::build_hamiltonian_matrix(OscillatorSpec::quartic(kappa), 512);
    auto es = nlosc::eigenvalues_symmetric(small, 6);
    auto eb = nlosc::eigenvalues_symmetric(big, 6);
    for (std::size_t k = 0; k < 6; ++k) {
        CHECK(std::abs(es.values[k] - eb.values[k]) <= 1e-10);
        // variational bound: enlarging the basis can only lower a level
        CHECK(eb.values[k] <= es.values[k] + 1e-13);
    }
}

TEST_CASE("eigenvectors_respect_the_parity_blocks") {
    FockMatrix M = nlosc::build_hamiltonian_matrix(OscillatorSpec::quartic(0.01), 64);
    auto eig = nlosc::eigenvalues_symmetric(M, 6);
    for (std::size_t k = 0; k < 6; ++k) {
        double even = 0.0, odd = 0.0;
        for (std::size_t i = 0; i < 64; ++i) {
            double c = eig.vectors[k][i] * eig.vectors[k][i];
            (i % 2 == 0 ? even : odd) += c;
        }
        // the quartic term preserves parity, so each state lives in one block
        double minority = std::min(even, odd);
        CHECK(minority <= 1e-16);
        CHECK(even + odd == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("residual_bound_is_enforced_and_reported") {
    FockMatrix M = nlosc::build_hamiltonian_matrix(OscillatorSpec::quartic(0.02), 128);
    auto eig = nlosc::eigenvalues_symmetric(M, 8);
    REQUIRE(eig.residuals.size() == 8);
    double bound = 1e-10 * M.frobenius_norm();
    for (double r : eig.residuals) {
        CHECK(r >= 0.0);
        CHECK(r <= bound);
    }
}

TEST_CASE("converged_levels_meets_the_perturbative_ground_at_cubic_order") {
    auto conv = nlosc::converged_levels(OscillatorSpec::quartic(0.01), 6, 1e-10);
    REQUIRE(conv.levels.size() == 6);
    CHECK(conv.dim >= 128);
    CHECK(std::abs(conv.levels[0] - nlosc::groundstate_pert(0.01)) <= 5e-5);
    CHECK(std::abs(conv.levels[1] - nlosc::energy_pert(1, 0.01)) <= 5e-4);
    for (std::size_t k = 1; k < conv.levels.size(); ++k)
        CHECK(conv.levels[k] > conv.levels[k - 1]);
}

TEST_CASE("harmonic_levels_converge_at_the_first_doubling") {
    auto conv = nlosc::converged_levels(OscillatorSpec::sho(), 5, 1e-12);
    for (std::size_t k = 0; k < 5; ++k)
        CHECK(conv.levels[k] == doctest::Approx(k + 0.5).epsilon(1e-12));
}

TEST_CASE("stronger_coupling_pushes_levels_above_the_series") {
    // at kappa = 0.1 the second-order series is visibly off; the oracle
    // quantifies the breakdown
    auto conv = nlosc::converged_levels(OscillatorSpec::quartic(0.1), 3, 1e-10);
    CHECK(std::abs(conv.levels[2] - nlosc::energy_pert(2, 0.1)) > 1e-3);
}

TEST_CASE("negative_coupling_is_refused_without_the_override") {
    CHECK_THROWS_AS(nlosc::converged_levels(OscillatorSpec::quartic(-0.01), 3, 1e-8),
                    nlosc::NegativeCouplingError);
    // with the override the truncated matrix is still diagonalizable
    FockMatrix M = nlosc::build_hamiltonian_matrix(OscillatorSpec::quartic(-0.01), 64);
    auto eig = nlosc::eigenvalues_symmetric(M, 3);
    CHECK(eig.values[0] < eig.values[1]);
}

TEST_CASE("input_validation_of_the_matrix_builder") {
    CHECK_THROWS_AS(nlosc::build_hamiltonian_matrix(OscillatorSpec::quartic(0.01), 1),
                    nlosc::DomainError);
    CHECK_THROWS_AS(nlosc::build_hamiltonian_matrix(OscillatorSpec::monomial(6, 0.01), 16),
                    nlosc::DomainError);
    FockMatrix M = nlosc::build_hamiltonian_matrix(OscillatorSpec::sho(), 8);
    CHECK_THROWS_AS(nlosc::eigenvalues_symmetric(M, 9), nlosc::DomainError);
}

}  // TEST_SUITE
