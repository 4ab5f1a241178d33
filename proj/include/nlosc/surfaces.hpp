#pragma once

#include <cmath>
#include <functional>
#include <string>

#include "nlosc/oscillator.hpp"

namespace nlosc {

// Energy surface e(u, theta) in the radial phase-space coordinate u = |z|^2
// and angle theta, for the normal-ordered classical reduction of a bounded
// oscillator. For binding potentials with positive coupling the surface is
// strictly increasing in u at every theta; floor_value gives e(0, theta).
// theta_period declares the symmetry of the angular dependence so angular
// integrals can be reduced to one period.
struct EnergySurface {
    std::function<double(double u, double theta)> value;
    std::function<double(double u, double theta)> du;  // partial derivative in u
    std::function<double(double theta)> floor_value;
    double theta_period = 2.0 * M_PI;
    std::string name;
};

// Harmonic surface e = 1/2 + u.
EnergySurface sho_surface();

// Quartic surface e = 1/2 + u + 4 kappa u^2 cos^4(theta), the classical
// reduction of the interaction (kappa/4)(a + ad)^4.
EnergySurface quartic_surface(double kappa);

// Monomial surface e = 1/2 + u + (kappa/l) (2 sqrt(u) cos(theta))^l with l
// even and >= 4; l = 4 coincides with the quartic surface.
EnergySurface monomial_surface(int l, double kappa);

// Exponential surface e = 1/2 + u + kappa exp(4 alpha_sq u cos^2 theta).
EnergySurface exponential_surface(double alpha_sq, double kappa);

// Surface matching an oscillator definition.
EnergySurface surface_for(const OscillatorSpec& spec);

}  // namespace nlosc
