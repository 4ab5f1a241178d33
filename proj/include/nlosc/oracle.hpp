#pragma once

#include <nlosc/oscillator.hpp>

#include <cstddef>
#include <vector>

namespace nlosc {

// Dense symmetric Hamiltonian matrix in the truncated number basis. The
// quartic coupling only links states whose indices differ by 0, 2 or 4, but
// the matrix is stored densely; the dimensions in play stay desk-scale and
// the eigensolver below wants contiguous rows anyway.
struct FockMatrix {
    std::size_t dim = 0;
    std::vector<double> values;  // row-major, dim*dim
    OscillatorSpec spec;

    double& at(std::size_t i, std::size_t j) { return values[i * dim + j]; }
    double at(std::size_t i, std::size_t j) const { return values[i * dim + j]; }
    double frobenius_norm() const;
};

// Builds <m|H|n> (in units of epsilon0) for the oscillator's number-basis
// truncation. Entries are assigned symmetrically from one evaluation so
// M[i][j] == M[j][i] holds exactly.
FockMatrix build_hamiltonian_matrix(const OscillatorSpec& spec, std::size_t dim);

// Lowest eigenvalues of a symmetric matrix with their eigenvectors and the
// residual norm ||M v - e v|| per returned pair.
struct EigenPairs {
    std::vector<double> values;                // ascending, n_wanted entries
    std::vector<std::vector<double>> vectors;  // vectors[k] matches values[k]
    std::vector<double> residuals;
};

// Householder tridiagonalization followed by implicit-shift QL iteration
// with accumulated transforms. Each returned pair is verified against the
// original matrix; a residual above 1e-10 times the Frobenius norm, or an
// eigenvalue that fails to settle within the iteration cap, raises
// NoConvergenceError.
EigenPairs eigenvalues_symmetric(const FockMatrix& M, std::size_t n_wanted);

struct ConvergedLevels {
    std::vector<double> levels;      // lowest n_levels, ascending
    std::size_t dim = 0;             // basis size that achieved convergence
    std::vector<double> residuals;   // from the final solve
};

// Doubles the basis size from 64 until the lowest n_levels each move by
// less than tol between consecutive sizes. A negative coupling makes the
// exact spectrum unbounded below and the truncated matrix produces spurious
// levels, so it is refused unless allow_negative is set.
ConvergedLevels converged_levels(const OscillatorSpec& spec, std::size_t n_levels,
                                 double tol, bool allow_negative = false,
                                 std::size_t dim_cap = 4096);

}  // namespace nlosc
