#pragma once

#include <string>
#include <utility>
#include <vector>

#include "nlosc/operator_poly.hpp"
#include "nlosc/oscillator.hpp"

namespace nlosc {

// Result of the order-by-order construction of the quartic lowering
// operator: the operator itself, the level-spacing function written as a
// polynomial in y = H/eps0 + 1/2, the exact ground level, and the named
// ordering constants for reporting.
struct TildeSolution {
    int order = 0;
    OperatorPoly tilde_a;
    // lambda = sum_j lambda_y[j] * y^j, each coefficient an exact polynomial
    // in the coupling.
    std::vector<KappaPoly> lambda_y;
    // Ground level e_g as an exact polynomial in the coupling.
    KappaPoly ground_level;
    // Named ordering constants: f1, f2 from the first order, g1..g6 from the
    // second, in that order.
    std::vector<std::pair<std::string, Rational>> ordering_constants;
};

// Quartic Hamiltonian in units of eps0: ad a + 1/2 + (k/4)(a + ad)^4, with
// the coupling carried as the formal grading variable.
OperatorPoly quartic_hamiltonian();

// Substitutes the operator y = h + 1/2 into a polynomial-in-y spacing
// function and truncates the coupling grade, yielding lambda(H) as an
// operator polynomial.
OperatorPoly lambda_as_operator(const std::vector<KappaPoly>& lambda_y, int max_order);

// Evaluates a polynomial-in-y spacing function at a numeric energy e (in
// units of eps0) and coupling kappa, i.e. at y = e + 1/2.
double lambda_eval(const std::vector<KappaPoly>& lambda_y, double e, double kappa);

// Determines the ordering constants of the quartic lowering operator at
// coupling order 0, 1 or 2 by imposing the eigenoperator relation
// [ta, h] = lambda(h) ta together with the normalization h = ta^dag ta + e_g,
// order by order over exact rationals. The joint linear system is solved by
// Gaussian elimination; the eigenoperator relation alone leaves a parameter
// family, and the normalization closes it uniquely. Throws
// AlgebraInconsistencyError, carrying the offending residual, if the system
// cannot be solved or the solution fails re-verification.
TildeSolution solve_tilde_a(int order, const OscillatorSpec& spec);

}  // namespace nlosc
