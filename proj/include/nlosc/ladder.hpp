#pragma once

#include <functional>
#include <limits>
#include <string>
#include <vector>

#include "nlosc/quadrature.hpp"
#include "nlosc/surfaces.hpp"

namespace nlosc {

// Evaluable level-spacing function with a construction-method label and a
// declared validity domain [e_lo, e_hi]. Positivity is sampled at
// construction; evaluation outside the domain throws DomainError.
class LambdaFunction {
public:
    enum class Source {
        constant,
        quartic_closed,
        quartic_negative,
        perturbative,
        quadrature,
        tabulated,
    };

    LambdaFunction(std::function<double(double)> f, Source source, double e_lo, double e_hi,
                   std::string label);

    double operator()(double e) const;
    bool contains(double e) const { return e > e_lo_ && e <= e_hi_; }

    Source source() const { return source_; }
    double e_lo() const { return e_lo_; }
    double e_hi() const { return e_hi_; }
    const std::string& label() const { return label_; }

private:
    std::function<double(double)> f_;
    Source source_;
    double e_lo_;
    double e_hi_;
    std::string label_;
};

const char* source_name(LambdaFunction::Source source);

// Spacing factories for the built-in cases.
LambdaFunction constant_lambda(double value = 1.0);
LambdaFunction quartic_closed_lambda(double kappa);    // kappa > 0, domain (1/2, inf)
LambdaFunction quartic_negative_lambda(double kappa);  // kappa < 0, domain (1/2, e_max]
LambdaFunction perturbative_lambda(double kappa);      // domain ends where the series turns over
LambdaFunction quadrature_lambda(const EnergySurface& surface, const QuadratureConfig& cfg = {});

// Energy ladder grown from the ground level by e_n = e_{n-1} + lambda(e_{n-1})
// together with the normalization products A_n = prod_{k<=n} (e_k - e_g).
// domain_exhausted is a normal outcome: the next level would leave the
// spacing function's domain (the bounded negative-coupling case), and the
// levels up to the last valid one are kept.
struct Spectrum {
    enum class Termination { completed, domain_exhausted };

    double e_g = 0.0;
    std::vector<double> levels;     // e_0 .. e_N with e_0 = e_g
    std::vector<double> lambda_at;  // lambda(e_n) for n = 0 .. N-1, the spacings used
    std::vector<double> A;          // A_0 = 1; overflows to inf for n large
    std::vector<double> log_A;      // log A_n, safe for all n
    LambdaFunction::Source lambda_source = LambdaFunction::Source::constant;
    Termination termination = Termination::completed;
    std::string note;

    size_t size() const { return levels.size(); }
    bool complete_spectrum() const { return termination == Termination::domain_exhausted; }
};

// Climbs the ladder for n_max steps or until the spacing domain is
// exhausted. Throws NonPositiveLambdaError if a non-positive spacing is ever
// produced inside the domain, and DomainError if e_g itself is outside it.
Spectrum build_spectrum(const LambdaFunction& lambda, double e_g, int n_max);

// Wraps an explicit, strictly increasing level list (e.g. diagonalization
// output) in the same container, with spacings taken from differences.
Spectrum spectrum_from_levels(const std::vector<double>& levels);

// Number function restricted to ladder points: N(e_n) = n, N(e_g) = 0.
// Evaluation requires the argument to match a ladder point to a small
// relative tolerance; stepping by one level raises N by exactly one.
class NumberFunction {
public:
    explicit NumberFunction(std::vector<double> levels);
    // Index n with e matching e_n; throws DomainError when e is not a ladder
    // point.
    int index_of(double e) const;
    double operator()(double e) const { return index_of(e); }
    size_t size() const { return levels_.size(); }

private:
    std::vector<double> levels_;
};

NumberFunction number_on_ladder(const Spectrum& s);

// Trichotomy of spacing behavior, decided from the declared domain and the
// fixed-point residual lambda(lambda(e) + e) - lambda(e): a bounded domain
// means a bounded spectrum; a vanishing residual means asymptotically equal
// spacing; a positive residual means the levels spread apart.
enum class SpacingClass { widening, asymptotically_equal_spaced, bounded_spectrum };

struct SpacingClassification {
    SpacingClass kind = SpacingClass::asymptotically_equal_spaced;
    std::vector<double> sample_e;
    std::vector<double> residual;  // lambda(lambda(e)+e) - lambda(e) at the samples
};

const char* spacing_class_name(SpacingClass kind);

SpacingClassification classify_lambda(const LambdaFunction& lambda, double e_lo, double e_hi,
                                      int samples = 33);

// Oscillation angular frequency at energy e: epsilon0 * lambda(e) (hbar = 1).
double oscillation_frequency(const LambdaFunction& lambda, double e, double epsilon0);

}  // namespace nlosc
