#pragma once

#include <string>

#include "nlosc/errors.hpp"

namespace nlosc {

// Oscillator definition. All internal energies are dimensionless, e = E per
// quantum of the harmonic part; the energy scale epsilon0 is carried only so
// output can be labeled in physical units. hbar = 1 throughout.
struct OscillatorSpec {
    enum class Potential { none, quartic, monomial, exponential };

    double epsilon0 = 1.0;
    Potential potential = Potential::none;
    double kappa = 0.0;   // dimensionless coupling, ratio of the interaction scale to epsilon0
    int l = 4;            // monomial degree, even and >= 4
    double alpha_sq = 1.0;  // exponential steepness parameter

    static OscillatorSpec sho(double epsilon0 = 1.0) {
        OscillatorSpec s;
        s.epsilon0 = epsilon0;
        s.potential = Potential::none;
        s.validate();
        return s;
    }
    // Quartic interaction (kappa/4)(a + ad)^4 on top of the harmonic part.
    static OscillatorSpec quartic(double kappa, double epsilon0 = 1.0) {
        OscillatorSpec s;
        s.epsilon0 = epsilon0;
        s.potential = Potential::quartic;
        s.kappa = kappa;
        s.validate();
        return s;
    }
    // Monomial interaction (kappa/l)(a + ad)^l, l even and >= 4.
    static OscillatorSpec monomial(int l, double kappa, double epsilon0 = 1.0) {
        OscillatorSpec s;
        s.epsilon0 = epsilon0;
        s.potential = Potential::monomial;
        s.kappa = kappa;
        s.l = l;
        s.validate();
        return s;
    }
    // Exponential interaction kappa * exp(alpha_sq (a + ad)^2).
    static OscillatorSpec exponential(double alpha_sq, double kappa, double epsilon0 = 1.0) {
        OscillatorSpec s;
        s.epsilon0 = epsilon0;
        s.potential = Potential::exponential;
        s.kappa = kappa;
        s.alpha_sq = alpha_sq;
        s.validate();
        return s;
    }

    void validate() const {
        if (!(epsilon0 > 0.0)) throw DomainError("oscillator energy scale must be positive");
        if (potential == Potential::monomial && (l < 4 || l % 2 != 0))
            throw DomainError("monomial degree must be even and at least 4");
        if (potential == Potential::exponential && !(alpha_sq > 0.0))
            throw DomainError("exponential steepness must be positive");
    }

    std::string potential_name() const {
        switch (potential) {
            case Potential::none: return "none";
            case Potential::quartic: return "quartic";
            case Potential::monomial: return "monomial";
            case Potential::exponential: return "exponential";
        }
        return "unknown";
    }
};

using Potential = OscillatorSpec::Potential;

}  // namespace nlosc
