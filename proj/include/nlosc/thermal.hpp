#pragma once

#include <nlosc/ladder.hpp>
#include <nlosc/oscillator.hpp>
#include <nlosc/quadrature.hpp>

namespace nlosc {

// Canonical-ensemble summary for a truncated ladder. The partition function
// is accumulated over the stored levels with shifted weights exp(-beta*(e_n
// - e_0)) so that Z stays representable at large beta; the reported Z
// carries the exp(-beta*e_0) prefactor back in. truncation_bound is the
// certified geometric tail estimate, already divided by Z, so a caller can
// compare it against a relative tolerance directly.
struct ThermalState {
    double beta = 0.0;
    double Z = 0.0;
    double avg_energy = 0.0;   // <H>/epsilon0, i.e. in level units
    double avg_number = 0.0;   // <n>
    double truncation_bound = 0.0;
};

// Sums Boltzmann weights over the spectrum and certifies the discarded
// tail. For a spectrum that terminated by exhausting the spacing domain
// there is nothing past the last level and the tail is exactly zero.
// Otherwise the tail is bounded by a geometric series with ratio
// exp(-beta*lambda_last), which requires the spacings near the end to be
// nondecreasing; if the bound cannot be certified below tol relative to Z,
// TailNotBoundedError is thrown.
ThermalState partition_function(const Spectrum& s, double beta, double tol = 1e-12);

// Thermal average of g(e_n) under the Boltzmann weights of s. Uses the same
// shifted, compensated accumulation as partition_function but performs no
// tail certification; intended for identity checks on already-certified
// ladders.
double boltzmann_average(const Spectrum& s, double beta,
                         const std::function<double(double, std::size_t)>& g);

// Relative residual of the thermal spacing identity
//   <lambda(H)> = <(H/eps0 - e_g + lambda(H)) * (1 - exp(-beta*lambda(H)))>.
// Pairing the decay factor with the level measured from the ground value
// plus its own spacing makes both sides telescope against the same shifted
// sum, so the residual vanishes for any ladder, not just the quartic one.
double verify_kms_identity(const Spectrum& s, double beta);

// Relative residual of the mean-energy identity
//   <H>/eps0 = e_g - d/dbeta <exp(-beta*lambda)> / (1 - <exp(-beta*lambda)>),
// with the beta-derivative of the thermal average expanded analytically as
// d<A>/dbeta = <dA/dbeta> - <A e> + <A><e>. Also checks the normalization
//   Z * (1 - <exp(-beta*lambda)>) = exp(-beta*e_g)
// and returns the larger of the two residuals.
double verify_avg_energy_identity(const Spectrum& s, double beta);

// Relative residual of the occupation identity
//   <exp(-beta*lambda)> = <n * (1 - exp(-beta*lambda))>.
double verify_number_identity(const Spectrum& s, double beta);

// Classical phase-space partition function for the oscillator's energy
// surface, with the zero-point offset removed so the harmonic case reduces
// to 1/beta exactly. The integral runs over the radial action u and one
// angular period, normalized by 2*pi.
double classical_partition(const OscillatorSpec& spec, double beta,
                           const QuadratureConfig& cfg = QuadratureConfig{});

}  // namespace nlosc
