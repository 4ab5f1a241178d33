#pragma once

#include <complex>
#include <functional>

#include "nlosc/quadrature.hpp"
#include "nlosc/surfaces.hpp"

namespace nlosc {

// Inverts e(u, theta) = e for the radial coordinate u >= 0 at fixed angle.
// The root is bracketed by geometric growth, narrowed by bisection and
// polished by Newton steps using the analytic derivative. If the growth
// phase sees the surface turn over before reaching e (negative coupling past
// its bound), the fold maximum is located and NonMonotoneError is thrown
// when it lies below e. Throws NoRootError when e is at or below the floor.
double radial_solve(const EnergySurface& surface, double e, double theta,
                    const QuadratureConfig& cfg = {});

// Level spacing from the analyticity of the semiclassical phase:
// lambda = 2 pi / closed angular integral of (de/du)^(-1) along the surface
// contour at energy e. The declared theta symmetry reduces the quadrature
// range.
double lambda_sc(const EnergySurface& surface, double e, const QuadratureConfig& cfg = {});

// Semiclassical phase-space function sqrt(e - 1/2) exp(i lambda integral),
// normalized so |f|^2 = e - 1/2 identically; single valued in theta exactly
// when lambda equals lambda_sc.
std::complex<double> phase_function(const EnergySurface& surface, double e, double theta,
                                    const QuadratureConfig& cfg = {});

// Phase-space area of the classically allowed region below e divided by
// 2 pi, computed as the energy integral of 1/lambda_sc from the surface
// minimum; this is the smooth level-counting function.
double action_area(const EnergySurface& surface, double e, const QuadratureConfig& cfg = {});

// Same integral for an externally supplied spacing function, starting from
// e_floor. Lets closed-form spacings reuse the counting machinery.
double action_area_from_lambda(const std::function<double(double)>& lambda, double e_floor,
                               double e, const QuadratureConfig& cfg = {});

// Bohr-Sommerfeld number function; identical to action_area with the
// large-n integration constant dropped.
double number_sc(const EnergySurface& surface, double e, const QuadratureConfig& cfg = {});

}  // namespace nlosc
