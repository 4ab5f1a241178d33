#include "nlosc/surfaces.hpp"

#include <cmath>

namespace nlosc {

EnergySurface sho_surface() {
    EnergySurface s;
    s.value = [](double u, double) { return 0.5 + u; };
    s.du = [](double, double) { return 1.0; };
    s.floor_value = [](double) { return 0.5; };
    s.theta_period = 2.0 * M_PI;
    s.name = "sho";
    return s;
}

EnergySurface quartic_surface(double kappa) {
    EnergySurface s;
    s.value = [kappa](double u, double theta) {
        double c = std::cos(theta);
        double c4 = c * c * c * c;
        return 0.5 + u + 4.0 * kappa * u * u * c4;
    };
    s.du = [kappa](double u, double theta) {
        double c = std::cos(theta);
        double c4 = c * c * c * c;
        return 1.0 + 8.0 * kappa * u * c4;
    };
    s.floor_value = [](double) { return 0.5; };
    s.theta_period = M_PI;  // cos^4 repeats every half turn
    s.name = "quartic";
    return s;
}

EnergySurface monomial_surface(int l, double kappa) {
    if (l < 4 || l % 2 != 0) throw DomainError("monomial degree must be even and at least 4");
    EnergySurface s;
    double half_l = 0.5 * l;
    double scale = kappa / l * std::pow(2.0, l);
    s.value = [l, half_l, scale](double u, double theta) {
        double c = std::cos(theta);
        double cl = std::pow(c * c, l / 2);  // cos^l with l even, no sign issues
        return 0.5 + u + scale * std::pow(u, half_l) * cl;
    };
    s.du = [l, half_l, scale](double u, double theta) {
        double c = std::cos(theta);
        double cl = std::pow(c * c, l / 2);
        return 1.0 + scale * half_l * std::pow(u, half_l - 1.0) * cl;
    };
    s.floor_value = [](double) { return 0.5; };
    s.theta_period = M_PI;
    s.name = "monomial_l" + std::to_string(l);
    return s;
}

EnergySurface exponential_surface(double alpha_sq, double kappa) {
    if (!(alpha_sq > 0.0)) throw DomainError("exponential steepness must be positive");
    EnergySurface s;
    s.value = [alpha_sq, kappa](double u, double theta) {
        double c = std::cos(theta);
        return 0.5 + u + kappa * std::exp(4.0 * alpha_sq * u * c * c);
    };
    s.du = [alpha_sq, kappa](double u, double theta) {
        double c = std::cos(theta);
        double cc = c * c;
        return 1.0 + kappa * 4.0 * alpha_sq * cc * std::exp(4.0 * alpha_sq * u * cc);
    };
    s.floor_value = [kappa](double) { return 0.5 + kappa; };
    s.theta_period = M_PI;
    s.name = "exponential";
    return s;
}

EnergySurface surface_for(const OscillatorSpec& spec) {
    switch (spec.potential) {
        case OscillatorSpec::Potential::none: return sho_surface();
        case OscillatorSpec::Potential::quartic: return quartic_surface(spec.kappa);
        case OscillatorSpec::Potential::monomial: return monomial_surface(spec.l, spec.kappa);
        case OscillatorSpec::Potential::exponential:
            return exponential_surface(spec.alpha_sq, spec.kappa);
    }
    throw DomainError("unknown potential kind");
}

}  // namespace nlosc
