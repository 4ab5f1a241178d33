#pragma once

#include <stdexcept>
#include <string>

namespace nlosc {

// Base class for every error thrown by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what_arg) : std::runtime_error(what_arg) {}
};

// Exact rational arithmetic left the 128-bit range; results are never
// silently wrapped.
class OverflowError : public Error {
public:
    using Error::Error;
};

// An argument fell outside the declared domain of an operation.
class DomainError : public Error {
public:
    using Error::Error;
};

// Radial inversion: the requested energy lies at or below the surface floor,
// so no turning point exists.
class NoRootError : public Error {
public:
    using Error::Error;
};

// Radial inversion: the surface folds over before reaching the requested
// energy. Signals an invalid surface for that energy, e.g. negative coupling
// past its bound.
class NonMonotoneError : public Error {
public:
    using Error::Error;
};

// Adaptive quadrature could not meet the tolerance within the subdivision
// depth limit.
class QuadratureError : public Error {
public:
    using Error::Error;
};

// Negative-coupling closed form requested beyond the energy bound where the
// level spacing is ill-defined. Carries the bound so callers can report it.
class BeyondBoundError : public Error {
public:
    BeyondBoundError(const std::string& what_arg, double bound)
        : Error(what_arg), e_max(bound) {}
    double e_max;
};

// The Boltzmann tail of a level sum could not be certified below the
// requested tolerance; the caller should extend the spectrum.
class TailNotBoundedError : public Error {
public:
    using Error::Error;
};

// An iterative eigensolve or bracketing loop hit its iteration cap.
class NoConvergenceError : public Error {
public:
    using Error::Error;
};

// Truncated-basis diagonalization refuses negative coupling by default
// because the truncated matrix has spurious spectra there.
class NegativeCouplingError : public Error {
public:
    using Error::Error;
};

// A spectrum climb ran into a non-positive spacing value, which means the
// supplied spacing function is not a valid input.
class NonPositiveLambdaError : public Error {
public:
    using Error::Error;
};

// The linear system for the ordering constants is inconsistent. This would
// indicate a transcription error in the fixed ansatz coefficients, so the
// offending residual polynomial is carried along and must surface.
class AlgebraInconsistencyError : public Error {
public:
    AlgebraInconsistencyError(const std::string& what_arg, std::string residual)
        : Error(what_arg + " [residual: " + residual + "]"),
          residual_poly(std::move(residual)) {}
    std::string residual_poly;
};

// Invalid configuration file or command-line arguments.
class ConfigError : public Error {
public:
    using Error::Error;
};

}  // namespace nlosc
