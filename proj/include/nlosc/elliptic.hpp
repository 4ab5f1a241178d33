#pragma once

#include "nlosc/errors.hpp"

namespace nlosc {

// Gamma(1/4), derived once to high precision and frozen; the derivation is
// regression-tested against the Lanczos evaluation below and against the
// lemniscatic identity K(1/sqrt 2) = Gamma(1/4)^2 / (4 sqrt pi).
inline constexpr double gamma_quarter = 3.6256099082219083119;

// Complete elliptic integral of the first kind with modulus k, via the
// arithmetic-geometric mean: K(k) = pi / (2 agm(1, k')). The complementary
// modulus is formed as sqrt((1-k)(1+k)) to keep accuracy near k = 1.
// Relative error is a few machine epsilon. Throws DomainError for |k| >= 1.
double elliptic_K(double k);

// Incomplete elliptic integral of the first kind in the parameter
// convention, F(alpha | q) with q = k^2: the integral from 0 to alpha of
// dt / sqrt(1 - q sin^2 t). Computed by adaptive quadrature of the defining
// integrand; F(pi/2 | q) = K(sqrt q). Requires q in [0, 1) and alpha in
// [0, pi].
double elliptic_F(double alpha, double q);

// Lanczos approximation of Gamma(x) for real x > 0; used to cross-check the
// frozen Gamma(1/4) constant from an independent construction.
double gamma_lanczos(double x);

}  // namespace nlosc
