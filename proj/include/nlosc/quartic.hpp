#pragma once

#include "nlosc/elliptic.hpp"
#include "nlosc/errors.hpp"

namespace nlosc {

// Parameters of the elliptic-integral reduction of the angular phase
// integral for the quartic surface at scaled energy xi = 16 (e - 1/2) kappa
// and angle theta. For positive coupling the reduction uses (q, alpha); for
// negative coupling with |xi| <= 1 it uses (q_prime, alpha_prime). Fields of
// the inapplicable branch are NaN.
struct EllipticParams {
    double xi = 0.0;
    double q = 0.0;            // parameter (modulus squared), in [0, 1/2) for xi >= 0
    double alpha = 0.0;        // amplitude at theta for the positive branch
    double q_prime = 0.0;      // negative-branch parameter, in [0, 1] for |xi| <= 1
    double alpha_prime = 0.0;  // negative-branch amplitude at theta
};

EllipticParams make_elliptic_params(double e, double kappa, double theta);

// Scaled energy xi = 16 (e - 1/2) kappa controlling the elliptic regime.
double xi_of(double e, double kappa);

// Closed-form level spacing for positive quartic coupling:
// (pi/2) (1 + xi)^{1/4} / K(sqrt q). Requires e > 1/2 and kappa > 0.
double lambda_sc_quartic(double e, double kappa);

// Closed-form level spacing for negative quartic coupling, defined for
// |xi| <= 1: (pi/2) sqrt(1 + sqrt|xi|) / K(sqrt q'); returns exactly 0 at
// |xi| = 1 where the quarter period diverges. Throws BeyondBoundError,
// reporting the energy bound, when |xi| > 1.
double lambda_sc_quartic_negative(double e, double kappa);

// Energy bound for negative coupling: 1/2 + 1/(16 |kappa|).
double e_max_negative(double kappa);

// Second-order perturbative ground level: 1/2 + (3/4)k - (21/8)k^2.
double groundstate_pert(double kappa);

// Second-order perturbative level spacing evaluated at energy e (in units of
// the harmonic quantum), with argument y = e + 1/2:
// 1 + 3k y - k^2 ((69/4) y^2 - (9/2) y + 15/2).
double lambda_pert(double e, double kappa);

// Second-order perturbative level: n + 1/2 + (3/4)k(2n^2 + 2n + 1)
// - k^2((17/4)n^3 + (51/8)n^2 + (59/8)n + 21/8).
double energy_pert(int n, double kappa);

// Semiclassical large-n level series: n + 1/2 + (3/2)k(n^2 - n)
// - k^2((17/4)n^3 - (33/8)n^2 - (1/8)n).
double energy_sc_series(int n, double kappa);

// Small-xi expansion of the closed-form spacing, with argument e - 1/2:
// 1 + 3k(e - 1/2) - (69/4)k^2 (e - 1/2)^2.
double lambda_sc_series(double e, double kappa);

// Quartic-dominated asymptotic level: 3^{4/3} pi^2 Gamma(1/4)^{-8/3}
// k^{1/3} n^{4/3}; valid for large n.
double wkb_energy(int n, double kappa);

// Asymptotic level spacing 4 pi^{3/2} Gamma(1/4)^{-2} (e k)^{1/4}, equal to
// pi (e k)^{1/4} / K(1/sqrt 2); valid for large n.
double wkb_spacing(double e, double kappa);

// Validity regime notes surfaced in CLI output.
const char* perturbative_regime_note();
const char* wkb_regime_note();

}  // namespace nlosc
